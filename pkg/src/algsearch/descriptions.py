"""Short program-like descriptions and uniform samplers over them.

Two formats are supported:

* word descriptions: a sequence of monoid homomorphisms applied to a seed
  word over the generator alphabet {a, A, b, B, ...};
* polynomial descriptions: a sequence of polynomials with non-negative
  integer coefficients applied to a seed natural number.

In both cases the last listed transformation is applied first, so a
description (f; g; v) evaluates to f(g(v)).
"""

from __future__ import annotations

import string
from dataclasses import dataclass, field
from random import Random
from typing import Sequence

from .codec import word_to_nat


@dataclass(frozen=True)
class GenAlphabet:
    """Semigroup generator alphabet of rank r: letters x_1, X_1, ..., x_r, X_r.

    For rank 2 the letters are written a, A, b, B, where the capital letter
    stands for the formal inverse of its lowercase partner.
    """

    rank: int = 2

    def __post_init__(self):
        if not 1 <= self.rank <= 26:
            raise ValueError("rank must be between 1 and 26")

    @property
    def letters(self) -> str:
        """All 2r letters in the fixed order a, A, b, B, ..."""
        out = []
        for i in range(self.rank):
            out.append(string.ascii_lowercase[i])
            out.append(string.ascii_uppercase[i])
        return "".join(out)

    def index(self, letter: str) -> int:
        idx = self.letters.find(letter)
        if idx < 0:
            raise ValueError(f"letter {letter!r} not in alphabet of rank {self.rank}")
        return idx

    def inverse(self, letter: str) -> str:
        self.index(letter)
        return letter.swapcase()

    def check_word(self, w: str) -> str:
        for ch in w:
            self.index(ch)
        return w


@dataclass(frozen=True)
class MonoidHom:
    """A monoid endomorphism of the free monoid over a GenAlphabet, given by
    the image of each letter in the fixed letter order."""

    alphabet: GenAlphabet
    images: tuple[str, ...]

    def __post_init__(self):
        if len(self.images) != 2 * self.alphabet.rank:
            raise ValueError(
                f"need {2 * self.alphabet.rank} image words, got {len(self.images)}"
            )
        for img in self.images:
            self.alphabet.check_word(img)

    def apply(self, w: str) -> str:
        letters = self.alphabet.letters
        table = {letters[i]: img for i, img in enumerate(self.images)}
        try:
            return "".join(table[ch] for ch in w)
        except KeyError as exc:
            raise ValueError(f"letter {exc.args[0]!r} not in alphabet") from None


def apply_hom(h: MonoidHom, w: str) -> str:
    return h.apply(w)


@dataclass(frozen=True)
class WordDescription:
    """A sequence of homomorphisms plus a seed word; evaluates to
    h_1(h_2(...h_d(seed)...))."""

    homs: tuple[MonoidHom, ...]
    seed: str
    alphabet: GenAlphabet = field(default_factory=GenAlphabet)

    def evaluate(self) -> str:
        w = self.alphabet.check_word(self.seed)
        for h in reversed(self.homs):
            w = h.apply(w)
        return w


def eval_word_description(desc: WordDescription) -> str:
    return desc.evaluate()


@dataclass(frozen=True)
class WordDescSpace:
    """Parameter space for word descriptions: d homomorphisms whose image
    words all have length exactly c, and a seed of length at most M."""

    d: int
    c: int
    M: int
    rank: int = 2

    def __post_init__(self):
        if self.d < 0 or self.c < 1 or self.M < 0:
            raise ValueError("need d >= 0, c >= 1, M >= 0")


@dataclass(frozen=True)
class Poly:
    """Polynomial with non-negative integer coefficients, highest degree
    first; the leading coefficient is positive when the degree is."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a polynomial needs at least one coefficient")
        if any(c < 0 for c in self.coeffs):
            raise ValueError("coefficients must be non-negative")
        if len(self.coeffs) > 1 and self.coeffs[0] < 1:
            raise ValueError("leading coefficient must be >= 1")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: int) -> int:
        acc = 0
        for c in self.coeffs:
            acc = acc * x + c
        return acc


def eval_poly(p: Poly, x: int) -> int:
    return p(x)


@dataclass(frozen=True)
class PolyDescription:
    """A sequence of polynomials plus an integer seed >= 1; evaluates to
    p_1(p_2(...p_k(seed)...))."""

    polys: tuple[Poly, ...]
    seed: int

    def __post_init__(self):
        if self.seed < 1:
            raise ValueError("seed must be >= 1")

    def evaluate(self) -> int:
        x = self.seed
        for p in reversed(self.polys):
            x = p(x)
        return x


def eval_poly_description(desc: PolyDescription) -> int:
    return desc.evaluate()


@dataclass(frozen=True)
class PolyDescSpace:
    """Parameter space for polynomial descriptions.

    count polynomials of a common degree, leading coefficient in lead_range,
    all other coefficients in coeff_range (both inclusive), and a seed that
    is the rank of a binary word of length at most M.
    """

    count: int
    degree: int = 2
    lead_range: tuple[int, int] = (1, 20)
    coeff_range: tuple[int, int] = (0, 20)
    M: int = 1000

    def __post_init__(self):
        if self.count < 0 or self.degree < 0 or self.M < 0:
            raise ValueError("need count, degree, M >= 0")
        if self.lead_range[0] < 1 or self.lead_range[0] > self.lead_range[1]:
            raise ValueError("lead_range must be an interval with minimum >= 1")
        if self.coeff_range[0] < 0 or self.coeff_range[0] > self.coeff_range[1]:
            raise ValueError("coeff_range must be an interval with minimum >= 0")


def uniform_bounded_word(letters: str, max_len: int, rng: Random) -> str:
    """A word drawn uniformly from the set of all words over `letters` of
    length <= max_len (so length l has probability proportional to s^l)."""
    s = len(letters)
    total = (s ** (max_len + 1) - 1) // (s - 1) if s > 1 else max_len + 1
    n = rng.randrange(total)
    length = 0
    count = 1  # number of words of the current length
    while n >= count:
        n -= count
        count *= s
        length += 1
    out = []
    for _ in range(length):
        out.append(letters[n % s])
        n //= s
    return "".join(reversed(out))


def sample_word_description(space: WordDescSpace, rng: Random) -> WordDescription:
    """Uniform draw from the finite set of descriptions with d homomorphisms
    (image words of length exactly c) and seed length <= M."""
    alphabet = GenAlphabet(space.rank)
    letters = alphabet.letters
    homs = tuple(
        MonoidHom(
            alphabet,
            tuple(
                "".join(rng.choice(letters) for _ in range(space.c))
                for _ in range(len(letters))
            ),
        )
        for _ in range(space.d)
    )
    seed = uniform_bounded_word(letters, space.M, rng)
    return WordDescription(homs, seed, alphabet)


def sample_poly_description(space: PolyDescSpace, rng: Random) -> PolyDescription:
    """Uniform draw: coefficients independent uniform in their ranges, seed
    the rank of a uniform binary word of length <= M."""
    polys = []
    for _ in range(space.count):
        if space.degree == 0:
            coeffs = (rng.randint(*space.coeff_range),)
        else:
            coeffs = (rng.randint(*space.lead_range),) + tuple(
                rng.randint(*space.coeff_range) for _ in range(space.degree)
            )
        polys.append(Poly(coeffs))
    seed = word_to_nat(uniform_bounded_word("01", space.M, rng))
    return PolyDescription(tuple(polys), seed)


def format_word_description(desc: WordDescription) -> str:
    """Text form: image tuples joined by ';', seed last, e.g.
    "ab,bB,aB,AA;bb,BA,BB,AB;abAA"."""
    sections = [",".join(h.images) for h in desc.homs]
    sections.append(desc.seed)
    return ";".join(sections)


def parse_word_description(text: str, rank: int = 2) -> WordDescription:
    alphabet = GenAlphabet(rank)
    sections = text.split(";")
    homs = tuple(
        MonoidHom(alphabet, tuple(sec.split(","))) for sec in sections[:-1]
    )
    seed = alphabet.check_word(sections[-1])
    return WordDescription(homs, seed, alphabet)


def format_poly_description(desc: PolyDescription) -> str:
    """Text form: coefficient lists joined by ';', seed last, e.g.
    "8,2,3,1;6,7,4,2;15"."""
    sections = [",".join(map(str, p.coeffs)) for p in desc.polys]
    sections.append(str(desc.seed))
    return ";".join(sections)


def parse_poly_description(text: str) -> PolyDescription:
    sections = text.split(";")
    polys = tuple(
        Poly(tuple(int(tok) for tok in sec.split(","))) for sec in sections[:-1]
    )
    return PolyDescription(polys, int(sections[-1]))
