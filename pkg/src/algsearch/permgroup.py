"""Permutation-group engine: stabilizer chains, order, membership, giant
recognition, and solvability.

Internally permutations are 0-indexed image lists of a fixed common degree;
the public surface uses :class:`algsearch.codec.Permutation` (1-indexed).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from random import Random
from typing import Iterable, Sequence

from .codec import Permutation

DEFAULT_DEGREE_CAP = 20000

# checks of the random-walk giant certificate before falling back to an
# order computation; failure probability for a true giant is < (0.9)^150
_WITNESS_CHECKS = 150
_WITNESS_BURN_IN = 10


class DegreeOverflowError(RuntimeError):
    """Raised when a classification would exceed the configured degree cap."""

    def __init__(self, degree: int, cap: int):
        super().__init__(f"degree {degree} exceeds cap {cap}")
        self.degree = degree
        self.cap = cap


# ---------------------------------------------------------------------------
# raw permutation helpers (0-indexed image lists)


def _raw(p: Permutation, n: int) -> list[int]:
    img = p.images
    return [img[x] - 1 for x in range(len(img))] + list(range(len(img), n))


def _unraw(p: Sequence[int]) -> Permutation:
    return Permutation(x + 1 for x in p)


def _mul(p: Sequence[int], q: Sequence[int]) -> list[int]:
    """Left-to-right composition: apply p, then q."""
    return [q[v] for v in p]


def _inv(p: Sequence[int]) -> list[int]:
    out = [0] * len(p)
    for x, y in enumerate(p):
        out[y] = x
    return out


def _is_id(p: Sequence[int]) -> bool:
    return all(x == v for x, v in enumerate(p))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Action of p followed by q, extended by fixed points as needed."""
    return p * q


# ---------------------------------------------------------------------------
# orbits and Schreier vectors


def _orbit_vector(raw_gens: Sequence[Sequence[int]], point: int) -> dict[int, int]:
    """BFS orbit of `point`; returns {orbit point: generator label}, with -1
    on the root.  The labelled generator maps the parent onto the point."""
    vector = {point: -1}
    frontier = [point]
    while frontier:
        new = []
        for x in frontier:
            for label, g in enumerate(raw_gens):
                y = g[x]
                if y not in vector:
                    vector[y] = label
                    new.append(y)
        frontier = new
    return vector


def orbit_with_schreier(
    gens: Sequence[Permutation], point: int
) -> tuple[set[int], dict[int, int]]:
    """Orbit of a point (1-indexed) under the generators, plus a Schreier
    vector mapping each orbit point to the label of the generator whose
    inverse steps toward the root (root label -1)."""
    if point < 1:
        raise ValueError("points are 1-indexed")
    n = max([point] + [p.degree for p in gens])
    raw_gens = [_raw(p, n) for p in gens]
    vector = _orbit_vector(raw_gens, point - 1)
    return {x + 1 for x in vector}, {x + 1: l for x, l in vector.items()}


# ---------------------------------------------------------------------------
# stabilizer chain (deterministic Schreier-Sims)


class _Node:
    """One level of the chain: a base point, the strong generators of this
    level's group, and a Schreier tree over the fundamental orbit."""

    __slots__ = ("n", "point", "gens", "invs", "tree", "stab",
                 "_tree_gens", "_tree_invs")

    def __init__(self, n: int):
        self.n = n
        self.point: int | None = None
        self.gens: list[list[int]] = []  # generators moving this base point
        self.invs: list[list[int]] = []
        self.tree: dict[int, int] = {}
        self.stab: _Node | None = None

    # generators of this level's group: own plus everything deeper
    def generators(self) -> list[list[int]]:
        out = list(self.gens)
        node = self.stab
        while node is not None:
            out.extend(node.gens)
            node = node.stab
        return out

    def transversal(self, x: int) -> list[int]:
        """Element u with point^u = x, rebuilt by walking tree labels."""
        all_gens = self._tree_gens
        path = []
        while x != self.point:
            label = self.tree[x]
            g = all_gens[label]
            path.append(g)
            x = self._tree_invs[label][x]
        u = list(range(self.n))
        for g in reversed(path):
            u = _mul(u, g)
        return u

    def _rebuild_tree(self) -> None:
        self._tree_gens = self.generators()
        self._tree_invs = [_inv(g) for g in self._tree_gens]
        self.tree = _orbit_vector(self._tree_gens, self.point)

    def sift(self, p: list[int]) -> list[int]:
        node = self
        while node is not None and node.point is not None:
            x = p[node.point]
            if x not in node.tree:
                return p
            p = _mul(p, _inv(node.transversal(x)))
            node = node.stab
        return p

    def add_gen(self, g: list[int]) -> None:
        g = self.sift(g)
        if not _is_id(g):
            self._add_nonmember(g)

    def _add_nonmember(self, g: list[int]) -> None:
        if self.point is None:
            self.point = min(x for x, v in enumerate(g) if v != x)
            self.stab = _Node(self.n)
        if g[self.point] == self.point:
            self.stab._add_nonmember(g)
        else:
            self.gens.append(g)
            self.invs.append(_inv(g))
        self._rebuild_tree()
        self._add_all_schreier_gens()

    def _add_all_schreier_gens(self) -> None:
        gens = self.generators()
        for x in sorted(self.tree):
            u_x = self.transversal(x)
            for s in gens:
                target = self.transversal(s[x])
                schreier = _mul(_mul(u_x, s), _inv(target))
                self.stab.add_gen(schreier)

    def order(self) -> int:
        total = 1
        node = self
        while node is not None and node.point is not None:
            total *= len(node.tree)
            node = node.stab
        return total


class StabilizerChain:
    """Base and strong generating set for a finite permutation group."""

    def __init__(self, generators: Sequence[Permutation]):
        gens = list(generators)
        n = max([p.degree for p in gens], default=0)
        n = max(n, 1)
        self.degree = n
        self._root = _Node(n)
        for p in gens:
            self._root.add_gen(_raw(p, n))

    @property
    def base(self) -> list[int]:
        out = []
        node = self._root
        while node is not None and node.point is not None:
            out.append(node.point + 1)
            node = node.stab
        return out

    def order(self) -> int:
        return self._root.order()

    def strong_generators(self) -> list[Permutation]:
        return [_unraw(g) for g in self._root.generators()]

    def sift(self, p: Permutation) -> Permutation:
        """Residue of factoring p through the chain; identity iff member."""
        if p.max_moved() > self.degree:
            return p
        return _unraw(self._root.sift(_raw(p, self.degree)))

    def contains(self, p: Permutation) -> bool:
        if p.max_moved() > self.degree:
            return False
        return _is_id(self._root.sift(_raw(p, self.degree)))

    def extend(self, p: Permutation) -> None:
        """Add a generator, updating the chain (degree must not grow)."""
        if p.max_moved() > self.degree:
            raise ValueError("generator exceeds chain degree")
        self._root.add_gen(_raw(p, self.degree))


def schreier_sims(gens: Sequence[Permutation]) -> StabilizerChain:
    """Build a verified stabilizer chain for the group the generators span."""
    if not gens:
        raise ValueError("need at least one generator")
    return StabilizerChain(gens)


def is_member(chain: StabilizerChain, p: Permutation) -> bool:
    return chain.contains(p)


class PermGroup:
    """A finite permutation group given by generators, with a cached chain."""

    def __init__(self, generators: Iterable[Permutation]):
        self.generators = tuple(generators)
        if not self.generators:
            raise ValueError("need at least one generator (identity is fine)")
        self._chain: StabilizerChain | None = None

    @classmethod
    def parse(cls, *cycle_strings: str) -> "PermGroup":
        return cls(Permutation.parse(s) for s in cycle_strings)

    @property
    def degree(self) -> int:
        return max(p.max_moved() for p in self.generators)

    def support(self) -> set[int]:
        out: set[int] = set()
        for p in self.generators:
            out.update(p.support())
        return out

    def chain(self) -> StabilizerChain:
        if self._chain is None:
            self._chain = StabilizerChain(self.generators)
        return self._chain

    def order(self) -> int:
        return self.chain().order()

    def __contains__(self, p: Permutation) -> bool:
        return self.chain().contains(p)

    def orbits(self) -> list[list[int]]:
        """Orbits of the group on 1..degree (singletons included)."""
        n = self.degree
        raw_gens = [_raw(p, n) for p in self.generators]
        seen = [False] * n
        out = []
        for x in range(n):
            if seen[x]:
                continue
            orbit = sorted(_orbit_vector(raw_gens, x))
            for y in orbit:
                seen[y] = True
            out.append([y + 1 for y in orbit])
        return out


def order(group: PermGroup) -> int:
    return group.order()


# ---------------------------------------------------------------------------
# giant recognition


@lru_cache(maxsize=8)
def _prime_sieve(limit: int) -> frozenset[int]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = b"\x00" * len(sieve[p * p :: p])
    return frozenset(i for i, b in enumerate(sieve) if b)


def _has_jordan_cycle(p: Sequence[int], n: int, primes: frozenset[int]) -> bool:
    """True if p contains a cycle of prime length q with n/2 < q <= n-3.

    A transitive subgroup of S_n containing such a cycle contains A_n: the
    cycle length exceeding n/2 rules out blocks of imprimitivity, and
    Jordan's theorem applies to primitive groups containing a prime cycle
    fixing at least three points.
    """
    seen = bytearray(n)
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = 1
            x = p[x]
            length += 1
        if 2 * length > n and length <= n - 3 and length in primes:
            return True
    return False


def _giant_witness(raw_gens: list[list[int]], n: int, rng: Random) -> bool:
    """Random-walk search for a Jordan-cycle element.  A hit certifies that
    the (transitive) group contains A_n; a miss certifies nothing."""
    if n < 8:
        return False
    primes = _prime_sieve(n)
    steps = [g for g in raw_gens if not _is_id(g)]
    steps = steps + [_inv(g) for g in steps]
    if not steps:
        return False
    for g in raw_gens:
        if _has_jordan_cycle(g, n, primes):
            return True
    x = steps[0]
    for i in range(_WITNESS_BURN_IN + _WITNESS_CHECKS):
        x = _mul(x, rng.choice(steps))
        if i >= _WITNESS_BURN_IN and _has_jordan_cycle(x, n, primes):
            return True
    return False


def _has_isolated_prime_cycle(p: Sequence[int], n: int, primes: frozenset[int]) -> bool:
    """True if some power of p is a q-cycle for a prime q <= n-3: p has
    exactly one cycle of length divisible by q, of length exactly q.
    (Raising p to the lcm of its other cycle lengths then kills everything
    but that q-cycle.)"""
    lengths: dict[int, int] = {}
    seen = bytearray(n)
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = 1
            x = p[x]
            length += 1
        lengths[length] = lengths.get(length, 0) + 1
    for q in primes:
        if q > n - 3:
            continue
        if lengths.get(q, 0) == 1 and all(
            d % q for d in lengths if d != q
        ):
            return True
    return False


def _primitive_giant_witness(raw_gens: list[list[int]], n: int, rng: Random) -> bool:
    """Random-walk search for an element powering to a short prime cycle.
    Valid only once the group is known to be primitive: by Jordan's
    theorem a primitive group containing a q-cycle with q <= n-3 contains
    A_n.  Hits are near-certain for giants, unlike the long-prime-cycle
    certificate, which random words can miss."""
    if n < 8:
        return False
    primes = _prime_sieve(n)
    steps = [g for g in raw_gens if not _is_id(g)]
    steps = steps + [_inv(g) for g in steps]
    if not steps:
        return False
    x = steps[0]
    for i in range(_WITNESS_BURN_IN + _WITNESS_CHECKS):
        x = _mul(x, rng.choice(steps))
        if i >= _WITNESS_BURN_IN and _has_isolated_prime_cycle(x, n, primes):
            return True
    return False


def _blocks_seeded(raw_gens: list[list[int]], n: int, alpha: int) -> list[list[int]]:
    """Finest block system of a transitive group in which 0 and alpha share
    a block (Atkinson's algorithm: close the partition {{0, alpha}} under
    the generators with a union-find)."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> bool:
        rx, ry = find(x), find(y)
        if rx == ry:
            return False
        parent[rx] = ry
        return True

    queue = [(0, alpha)]
    union(0, alpha)
    while queue:
        x, y = queue.pop()
        for g in raw_gens:
            a, b = g[x], g[y]
            if union(a, b):
                queue.append((a, b))
    classes: dict[int, list[int]] = {}
    for x in range(n):
        classes.setdefault(find(x), []).append(x)
    return sorted(classes.values())


def _min_block_system(raw_gens: list[list[int]], n: int) -> list[list[int]] | None:
    """Some nontrivial block system of a transitive group, or None when the
    group is primitive."""
    for alpha in range(1, n):
        blocks = _blocks_seeded(raw_gens, n, alpha)
        if 1 < len(blocks) < n:
            return blocks
    return None


def _block_action(
    raw_gens: list[list[int]], blocks: list[list[int]]
) -> tuple[list[list[int]], list[int]]:
    """Induced permutations of the blocks, plus the point -> block map."""
    which = [0] * (max(b[-1] for b in blocks) + 1)
    for idx, block in enumerate(blocks):
        for x in block:
            which[x] = idx
    action = [[which[g[block[0]]] for block in blocks] for g in raw_gens]
    return action, which


def _block_stabilizer_on_block(
    raw_gens: list[list[int]], blocks: list[list[int]]
) -> list[list[int]]:
    """Action induced on blocks[0] by its setwise stabilizer, generated by
    the Schreier generators of the block-0 stabilizer in the block action."""
    action, which = _block_action(raw_gens, blocks)
    m = len(blocks)
    transversal: list[list[int] | None] = [None] * m
    transversal[0] = list(range(len(raw_gens[0])))
    frontier = [0]
    while frontier:
        nxt = []
        for idx in frontier:
            u = transversal[idx]
            for g_blocks, g in zip(action, raw_gens):
                image = g_blocks[idx]
                if transversal[image] is None:
                    transversal[image] = _mul(u, g)
                    nxt.append(image)
        frontier = nxt
    seen: set[tuple[int, ...]] = set()
    restricted: list[list[int]] = []
    block0 = blocks[0]
    for idx in range(m):
        u = transversal[idx]
        for g in raw_gens:
            t = _mul(u, g)
            back = transversal[which[t[block0[0]]]]
            stab = _mul(t, _inv(back))
            r = _restriction(stab, block0)
            key = tuple(r)
            if not _is_id(r) and key not in seen:
                seen.add(key)
                restricted.append(r)
    return restricted


@lru_cache(maxsize=None)
def _is_prime_power(k: int) -> bool:
    if k < 2:
        return False
    p = k
    for d in range(2, math.isqrt(k) + 1):
        if k % d == 0:
            p = d
            break
    while k % p == 0:
        k //= p
    return k == 1


@dataclass(frozen=True)
class GroupClass:
    """Outcome of classifying a 2-generator group: symmetric_giant,
    alternating_giant, trivial, or other; degree is the largest moved
    point; order is filled when the classification computed it."""

    label: str
    degree: int
    order: int | None = None

    @property
    def is_giant(self) -> bool:
        return self.label in ("symmetric_giant", "alternating_giant")


def classify(
    g: Permutation,
    h: Permutation,
    rng: Random | None = None,
    degree_cap: int = DEFAULT_DEGREE_CAP,
) -> GroupClass:
    """Decide whether <g, h> is S_n or A_n in its natural action on
    {1,...,n}, the trivial group, or anything else ("other").

    A giant must have support exactly {1,...,n} and be transitive on it.
    The random-walk Jordan certificate pre-certifies most giants; when it
    fails the verdict falls back to the exact chain order.
    """
    support = set(g.support()) | set(h.support())
    if not support:
        return GroupClass("trivial", 0, 1)
    n = max(support)
    if n > degree_cap:
        raise DegreeOverflowError(n, degree_cap)
    if support != set(range(1, n + 1)):
        return GroupClass("other", n)

    raw_gens = [_raw(g, n), _raw(h, n)]
    if len(_orbit_vector(raw_gens, 0)) < n:
        return GroupClass("other", n)

    all_even = g.is_even() and h.is_even()
    if _giant_witness(raw_gens, n, rng or Random(0)):
        label = "alternating_giant" if all_even else "symmetric_giant"
        return GroupClass(label, n)

    # giants are primitive, so a block system settles the question without
    # a chain; once primitivity is known, any short prime cycle certifies
    # a giant, and the remaining primitive non-giants have small order
    if n >= 3 and _min_block_system(raw_gens, n) is not None:
        return GroupClass("other", n)
    if _primitive_giant_witness(raw_gens, n, rng or Random(0)):
        label = "alternating_giant" if all_even else "symmetric_giant"
        return GroupClass(label, n)

    grp_order = StabilizerChain([g, h]).order()
    full = math.factorial(n)
    if grp_order == full:
        return GroupClass("symmetric_giant", n, grp_order)
    if 2 * grp_order == full and all_even:
        # all generators even puts the group inside A_n; equal order forces
        # equality, at every degree
        return GroupClass("alternating_giant", n, grp_order)
    return GroupClass("other", n, grp_order)


# ---------------------------------------------------------------------------
# derived series and solvability


def derived_subgroup(group: PermGroup) -> PermGroup:
    """Commutator subgroup: normal closure of the generator commutators."""
    n = max(group.degree, 1)
    raw_gens = [_raw(p, n) for p in group.generators]
    invs = [_inv(g) for g in raw_gens]

    closure: list[list[int]] = []
    root = _Node(n)

    def add(candidate: list[int]) -> bool:
        residue = root.sift(candidate)
        if _is_id(residue):
            return False
        root.add_gen(residue)
        closure.append(candidate)
        return True

    queue: list[list[int]] = []
    for i in range(len(raw_gens)):
        for j in range(i + 1, len(raw_gens)):
            comm = _mul(_mul(invs[i], invs[j]), _mul(raw_gens[i], raw_gens[j]))
            if add(comm):
                queue.append(comm)
    while queue:
        x = queue.pop()
        for s, s_inv in zip(raw_gens, invs):
            conj = _mul(_mul(s_inv, x), s)
            if add(conj):
                queue.append(conj)
    if not closure:
        return PermGroup([Permutation.identity()])
    return PermGroup([_unraw(p) for p in closure])


def _restriction(raw: Sequence[int], orbit: Sequence[int]) -> list[int]:
    """Restrict a raw permutation to an invariant point set, relabelled to
    0..len(orbit)-1."""
    index = {x: i for i, x in enumerate(orbit)}
    return [index[raw[x]] for x in orbit]


def _solvable_transitive(raw_gens: list[list[int]], k: int, rng: Random) -> bool:
    """Solvability of a transitive group on {0,...,k-1}.

    Imprimitive groups split: with a block system, the group embeds in the
    wreath product of the block stabilizer's action on a block by the
    action on the blocks, and both factors are (subgroup or quotient)
    images, so the group is solvable iff both actions are.  Primitive
    groups of non-prime-power degree are never solvable (a solvable
    primitive group has an elementary abelian regular normal subgroup);
    the remaining primitive cases have small order and go through the
    derived series directly.
    """
    raw_gens = [g for g in raw_gens if not _is_id(g)]
    if k <= 4 or len(raw_gens) <= 1:
        return True  # degree <= 4 or cyclic
    if _giant_witness(raw_gens, k, rng):
        return False
    blocks = _min_block_system(raw_gens, k)
    if blocks is None:
        if _primitive_giant_witness(raw_gens, k, rng):
            return False
        if not _is_prime_power(k):
            return False
        return _derived_series_solvable([_unraw(g) for g in raw_gens])
    action, _ = _block_action(raw_gens, blocks)
    if not _solvable_transitive(action, len(blocks), rng):
        return False
    on_block = _block_stabilizer_on_block(raw_gens, blocks)
    return _solvable_transitive(on_block, len(blocks[0]), rng)


def _derived_series_solvable(gens: list[Permutation]) -> bool:
    group = PermGroup(gens)
    current_order = group.order()
    if current_order == 1:
        return True
    # orders strictly decrease until the series stabilizes
    max_steps = 2 * current_order.bit_length() + 2
    for _ in range(max_steps):
        group = derived_subgroup(group)
        next_order = group.order()
        if next_order == 1:
            return True
        if next_order == current_order:
            return False
        current_order = next_order
    raise RuntimeError("derived series failed to stabilize")  # pragma: no cover


def is_solvable(group: PermGroup, rng: Random | None = None) -> bool:
    """Solvability via the derived series.

    The group embeds in the direct product of its transitive constituents,
    each a quotient, so it is solvable iff every constituent is.  On a
    constituent, a Jordan-cycle witness (contains A_k, k >= 8) certifies
    non-solvability without building a chain.
    """
    n = max(group.degree, 1)
    raw_gens = [g for g in (_raw(p, n) for p in group.generators) if not _is_id(g)]
    if not raw_gens:
        return True
    rng = rng or Random(0)

    seen = [False] * n
    for start in range(n):
        if seen[start]:
            continue
        orbit = sorted(_orbit_vector(raw_gens, start))
        for y in orbit:
            seen[y] = True
        if len(orbit) <= 2:
            continue
        restricted = [_restriction(g, orbit) for g in raw_gens]
        if not _solvable_transitive(restricted, len(orbit), rng):
            return False
    return True


# ---------------------------------------------------------------------------
# uniform sampling and the random-pair bound


def random_permutation(n: int, rng: Random) -> Permutation:
    """Uniform element of S_n via an explicit Fisher-Yates shuffle (kept
    independent of random.shuffle so streams are reproducible)."""
    arr = list(range(1, n + 1))
    for i in range(n - 1, 0, -1):
        j = rng.randrange(i + 1)
        arr[i], arr[j] = arr[j], arr[i]
    return Permutation(arr)


def random_sn_pair(n: int, rng: Random) -> tuple[Permutation, Permutation]:
    """Two independent uniform elements of S_n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return random_permutation(n, rng), random_permutation(n, rng)


def theorem3_bound(n: int) -> float:
    """Upper bound 1/n + 8.8/n^2 on the probability that two uniform
    elements of S_n generate neither S_n nor A_n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return 1.0 / n + 8.8 / (n * n)
