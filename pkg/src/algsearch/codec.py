"""Bijective codecs: binary words <-> naturals <-> pairs <-> finite-support permutations.

The chain of bijections is

    {0,1}* <-> {1,2,3,...} <-> N x N <-> S_omega x S_omega

where S_omega is the group of permutations of {1,2,...} moving only
finitely many points.  Everything here is exact integer arithmetic; no
floating point is used anywhere.
"""

from __future__ import annotations

import math
import re
from typing import Iterable, Sequence


def word_to_nat(w: str) -> int:
    """Rank of a binary word in the length-then-lexicographic (bijective
    binary) enumeration: prepend an implicit 1 and read base 2.

    The empty word maps to 1, "0" to 2, "1" to 3, "00" to 4, ...
    """
    if any(ch not in "01" for ch in w):
        raise ValueError(f"not a binary word: {w!r}")
    return int("1" + w, 2)


def nat_to_word(m: int) -> str:
    """Inverse of word_to_nat.  Defined for m >= 1."""
    if m < 1:
        raise ValueError("nat_to_word requires m >= 1")
    return bin(m)[3:]


def nat_to_pair(m: int) -> tuple[int, int]:
    """Anti-diagonal enumeration of N x N: 1 -> (1,1), 2 -> (1,2),
    3 -> (2,1), 4 -> (1,3), 5 -> (2,2), ...

    m lies on anti-diagonal t (the unique t with t(t-1)/2 < m <= t(t+1)/2)
    at position i = m - t(t-1)/2, giving the pair (i, t+1-i).
    """
    if m < 1:
        raise ValueError("nat_to_pair requires m >= 1")
    # math.isqrt is exact on arbitrary-size ints; the correction loops
    # guard the boundary cases.
    t = (1 + math.isqrt(8 * m - 7)) // 2
    while t * (t - 1) // 2 >= m:
        t -= 1
    while t * (t + 1) // 2 < m:
        t += 1
    i = m - t * (t - 1) // 2
    return i, t + 1 - i


def pair_to_nat(i: int, j: int) -> int:
    """Inverse of nat_to_pair: (i,j) -> (i+j-1)(i+j-2)/2 + i."""
    if i < 1 or j < 1:
        raise ValueError("pair_to_nat requires i, j >= 1")
    return (i + j - 1) * (i + j - 2) // 2 + i


def factorial_digits(n: int) -> list[int]:
    """Factorial-base digits (d_1, d_2, ...) of n >= 0, least significant
    first: n = sum d_i * i! with 0 <= d_i <= i.  Trailing zeros trimmed.
    """
    if n < 0:
        raise ValueError("factorial_digits requires n >= 0")
    digits = []
    radix = 2
    while n:
        digits.append(n % radix)
        n //= radix
        radix += 1
    return digits


def factorial_digit_count(n: int) -> int:
    """len(factorial_digits(n)) without materializing the digits.

    Used to bound the degree of nat_to_perm(n+1) cheaply before decoding.
    """
    if n < 0:
        raise ValueError("factorial_digit_count requires n >= 0")
    count = 0
    radix = 2
    while n:
        n //= radix
        radix += 1
        count += 1
    return count


def digits_to_nat(digits: Sequence[int]) -> int:
    """Inverse of factorial_digits."""
    n = 0
    fact = 1
    for i, d in enumerate(digits, start=1):
        fact *= i
        if not 0 <= d <= i:
            raise ValueError(f"digit {d} out of range at position {i}")
        n += d * fact
    return n


_CYCLE_RE = re.compile(r"\(\s*([0-9]+(?:\s*,\s*[0-9]+)*)?\s*\)")


class Permutation:
    """A permutation of {1, 2, 3, ...} with finite support.

    Stored as an image array: images[x-1] is the image of point x.  Points
    beyond len(images) are fixed.  Two permutations are equal when they act
    identically, regardless of trailing fixed points.
    """

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        n = len(images)
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {images}")
        self.images = images

    @classmethod
    def identity(cls) -> "Permutation":
        return cls(())

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]]) -> "Permutation":
        cycles = [list(c) for c in cycles]
        n = max((max(c) for c in cycles if c), default=0)
        arr = list(range(1, n + 1))
        for cycle in cycles:
            if len(set(cycle)) != len(cycle) or any(x < 1 for x in cycle):
                raise ValueError(f"bad cycle: {cycle}")
            for a, b in zip(cycle, cycle[1:]):
                arr[a - 1] = b
            if cycle:
                arr[cycle[-1] - 1] = cycle[0]
        return cls(arr)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse disjoint-cycle form like "(1,7,8)(2,4)" or one-line form
        like "[2,3,4,1]".  "()", "[]" and "" denote the identity.
        """
        text = text.strip()
        if text in ("", "()", "[]"):
            return cls.identity()
        if text.startswith("["):
            if not text.endswith("]"):
                raise ValueError(f"unbalanced one-line form: {text!r}")
            return cls(int(tok) for tok in text[1:-1].split(","))
        cycles = []
        pos = 0
        for match in _CYCLE_RE.finditer(text):
            if text[pos:match.start()].strip():
                raise ValueError(f"cannot parse permutation: {text!r}")
            if match.group(1):
                cycles.append([int(tok) for tok in match.group(1).split(",")])
            pos = match.end()
        if text[pos:].strip() or not cycles:
            raise ValueError(f"cannot parse permutation: {text!r}")
        return cls.from_cycles(cycles)

    @property
    def degree(self) -> int:
        """Length of the stored image array (may include trailing fixed points)."""
        return len(self.images)

    def max_moved(self) -> int:
        """Largest non-fixed point; 0 for the identity."""
        for x in range(len(self.images), 0, -1):
            if self.images[x - 1] != x:
                return x
        return 0

    def support(self) -> list[int]:
        return [x for x in range(1, len(self.images) + 1) if self.images[x - 1] != x]

    def __call__(self, point: int) -> int:
        if point < 1:
            raise ValueError("points are 1-indexed")
        if point <= len(self.images):
            return self.images[point - 1]
        return point

    def extended(self, n: int) -> "Permutation":
        """Same permutation with the image array padded to length >= n."""
        if n <= len(self.images):
            return self
        return Permutation(self.images + tuple(range(len(self.images) + 1, n + 1)))

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Left-to-right composition: (p * q)(x) = q(p(x))."""
        if not isinstance(other, Permutation):
            return NotImplemented
        n = max(len(self.images), len(other.images))
        return Permutation(other(self(x)) for x in range(1, n + 1))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for x, y in enumerate(self.images, start=1):
            inv[y - 1] = x
        return Permutation(inv)

    def is_even(self) -> bool:
        """True iff the permutation is a product of an even number of
        transpositions."""
        transpositions = 0
        for cycle in self.cycles():
            transpositions += len(cycle) - 1
        return transpositions % 2 == 0

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles of length >= 2, each starting at its smallest
        point, ordered by smallest point."""
        seen = set()
        out = []
        for start in range(1, len(self.images) + 1):
            if start in seen or self.images[start - 1] == start:
                continue
            cycle = [start]
            x = self.images[start - 1]
            while x != start:
                seen.add(x)
                cycle.append(x)
                x = self.images[x - 1]
            out.append(tuple(cycle))
        return out

    def cycle_string(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cycles)

    def one_line_string(self) -> str:
        return "[" + ",".join(map(str, self.images)) + "]"

    def _trimmed(self) -> tuple[int, ...]:
        n = self.max_moved()
        return self.images[:n]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._trimmed() == other._trimmed()

    def __hash__(self) -> int:
        return hash(self._trimmed())

    def __repr__(self) -> str:
        return f"Permutation.parse({self.cycle_string()!r})"


def nat_to_perm(m: int) -> Permutation:
    """The m-th permutation (m >= 1) in the swap-decoding of factorial-base
    digits.

    Digits (d_1,...,d_k) of m-1 build a permutation of degree k+1: start
    from the identity array and, for i = k down to 1, swap positions i+1
    and i+1-d_i.  Because appending zero digits leaves the result unchanged
    (as a permutation), this is a bijection {1,2,...} <-> S_omega; indices
    in [1, n!] are exactly the permutations fixing every point > n.
    """
    if m < 1:
        raise ValueError("nat_to_perm requires m >= 1")
    digits = factorial_digits(m - 1)
    k = len(digits)
    if k == 0:
        return Permutation.identity()
    arr = list(range(1, k + 2))
    for i in range(k, 0, -1):
        d = digits[i - 1]
        arr[i], arr[i - d] = arr[i - d], arr[i]
    return Permutation(arr)


def perm_to_nat(p: Permutation) -> int:
    """Inverse of nat_to_perm.

    The top digit is exposed by the image of the largest point: the last
    swap that touches position k+1 is the one at step k, so
    d_k = k+1 - p(k+1).  Relabeling the two swapped values peels that step
    off, and the remaining digits follow by descending induction.
    """
    arr = list(p.images)
    k = len(arr) - 1
    pos = [0] * (len(arr) + 1)  # pos[value] = 0-based index into arr
    for idx, val in enumerate(arr):
        pos[val] = idx
    digits = [0] * max(k, 0)
    for i in range(k, 0, -1):
        v_hi = arr[i]
        d = i + 1 - v_hi
        digits[i - 1] = d
        if d:
            v_lo = i + 1 - d
            pi, qi = pos[i + 1], pos[v_lo]
            arr[pi], arr[qi] = arr[qi], arr[pi]
            pos[i + 1], pos[v_lo] = qi, pi
    return digits_to_nat(digits) + 1


def nat_to_perm_pair(m: int) -> tuple[Permutation, Permutation]:
    """Composite map N -> S_omega x S_omega through the pairing function."""
    i, j = nat_to_pair(m)
    return nat_to_perm(i), nat_to_perm(j)


def perm_pair_to_nat(p: Permutation, q: Permutation) -> int:
    """Inverse of nat_to_perm_pair."""
    return pair_to_nat(perm_to_nat(p), perm_to_nat(q))
