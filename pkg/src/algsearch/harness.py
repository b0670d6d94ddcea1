"""Experiment driver: seeded, reproducible search runs with aggregation.

Every trial draws its randomness from a private substream derived from
(master_seed, trial index), so results are independent of worker count and
scheduling.  Output files are fully determined by (config, master_seed).
"""

from __future__ import annotations

import csv
import io
import json
import math
import multiprocessing
import time
from dataclasses import dataclass, field
from random import Random
import hashlib
from typing import Iterable, Sequence

from .codec import factorial_digit_count, nat_to_pair, nat_to_perm
from .descriptions import (
    PolyDescSpace,
    WordDescSpace,
    format_poly_description,
    format_word_description,
    sample_poly_description,
    sample_word_description,
)
from .descriptions import GenAlphabet
from .freewords import is_identity_abelian, is_identity_free
from .permgroup import (
    DEFAULT_DEGREE_CAP,
    GroupClass,
    PermGroup,
    classify,
    is_solvable,
    random_sn_pair,
    theorem3_bound,
)

RNG_ALGORITHM = "mt19937(sha256(master_seed:index))"

CSV_HEADER = ["bin_lo", "bin_hi", "trials", "hits", "freq", "ci_lo", "ci_hi", "series"]
SERIES_NAMES = (
    "free_identity",
    "abelian_identity",
    "word_baseline",
    "non_giant",
    "solvable",
    "sn_baseline",
    "theorem3_bound",
)

# threshold below which a bin is considered under-sampled
MIN_BIN_TRIALS = 1000

_Z95 = 1.959963984540054


def substream(master_seed: int, index: int) -> Random:
    """Deterministic per-trial RNG, independent of evaluation order."""
    digest = hashlib.sha256(f"{master_seed}:{index}".encode("ascii")).digest()
    return Random(int.from_bytes(digest, "big"))


def wilson_interval(hits: int, trials: int) -> tuple[float, float, float]:
    """(point estimate, lower, upper) 95% Wilson score interval."""
    if trials <= 0:
        raise ValueError("need at least one trial")
    p = hits / trials
    z2 = _Z95 * _Z95
    denom = 1.0 + z2 / trials
    center = (p + z2 / (2 * trials)) / denom
    half = _Z95 * math.sqrt(p * (1 - p) / trials + z2 / (4 * trials * trials)) / denom
    return p, max(0.0, center - half), min(1.0, center + half)


@dataclass(frozen=True)
class BinRow:
    bin_lo: int
    bin_hi: int
    trials: int
    hits: int
    freq: float
    ci_lo: float
    ci_hi: float
    series: str

    @property
    def under_sampled(self) -> bool:
        return self.trials < MIN_BIN_TRIALS


@dataclass
class FrequencyTable:
    rows: list[BinRow] = field(default_factory=list)

    def series(self, name: str) -> list[BinRow]:
        return [r for r in self.rows if r.series == name]

    def extend(self, other: "FrequencyTable") -> None:
        self.rows.extend(other.rows)

    def total_trials(self, series: str) -> int:
        return sum(r.trials for r in self.series(series))

    def write_csv(self, fp) -> None:
        writer = csv.writer(fp, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for r in self.rows:
            writer.writerow(
                [r.bin_lo, r.bin_hi, r.trials, r.hits,
                 repr(r.freq), repr(r.ci_lo), repr(r.ci_hi), r.series]
            )

    def to_csv(self) -> str:
        buf = io.StringIO()
        self.write_csv(buf)
        return buf.getvalue()

    @classmethod
    def read_csv(cls, fp) -> "FrequencyTable":
        reader = csv.reader(fp)
        header = next(reader)
        if header != CSV_HEADER:
            raise ValueError(f"unexpected CSV header: {header}")
        rows = []
        for rec in reader:
            rows.append(
                BinRow(int(rec[0]), int(rec[1]), int(rec[2]), int(rec[3]),
                       float(rec[4]), float(rec[5]), float(rec[6]), rec[7])
            )
        return cls(rows)


def _geometric_bin(size: int) -> tuple[int, int]:
    """Powers-of-two bin [2^k, 2^(k+1)-1]; size 0 gets its own bin."""
    if size <= 0:
        return 0, 0
    lo = 1 << (size.bit_length() - 1)
    return lo, 2 * lo - 1


def aggregate(
    outcomes: Iterable[tuple[int, bool]], binning: str, series: str
) -> FrequencyTable:
    """Bin (size, hit) outcomes and attach Wilson 95% intervals.

    binning is "exact" (one bin per size) or "geometric" (powers of two).
    """
    if binning not in ("exact", "geometric"):
        raise ValueError(f"unknown binning {binning!r}")
    counts: dict[tuple[int, int], list[int]] = {}
    for size, hit in outcomes:
        key = (size, size) if binning == "exact" else _geometric_bin(size)
        cell = counts.setdefault(key, [0, 0])
        cell[0] += 1
        cell[1] += int(hit)
    rows = []
    for (lo, hi) in sorted(counts):
        trials, hits = counts[(lo, hi)]
        freq, ci_lo, ci_hi = wilson_interval(hits, trials)
        rows.append(BinRow(lo, hi, trials, hits, freq, ci_lo, ci_hi, series))
    return FrequencyTable(rows)


# ---------------------------------------------------------------------------
# trial records


@dataclass(frozen=True)
class TrialRecord:
    """Outcome of one sampled description (word or permutation trial)."""

    trial: int
    kind: str  # "word" | "perm"
    description: str
    size: int  # word length, or largest degree of the permutation pair
    identity_free: bool | None = None
    identity_abelian: bool | None = None
    label: str | None = None  # GroupClass label or "degree_overflow"
    solvable: bool | None = None
    order_bits: int | None = None
    # in-memory only; excluded from serialized output and from equality
    elapsed: float = field(default=0.0, compare=False)

    def to_json(self) -> str:
        # elapsed is deliberately dropped: output bytes are a pure function
        # of (config, master_seed)
        payload = {
            "trial": self.trial,
            "kind": self.kind,
            "description": self.description,
            "size": self.size,
            "identity_free": self.identity_free,
            "identity_abelian": self.identity_abelian,
            "label": self.label,
            "solvable": self.solvable,
            "order_bits": self.order_bits,
        }
        return json.dumps(payload, separators=(",", ":"))

    @classmethod
    def from_json(cls, line: str) -> "TrialRecord":
        data = json.loads(line)
        return cls(**data)


def write_jsonl(records: Sequence[TrialRecord], fp) -> None:
    for rec in records:
        fp.write(rec.to_json())
        fp.write("\n")


def read_jsonl(fp) -> list[TrialRecord]:
    return [TrialRecord.from_json(line) for line in fp if line.strip()]


# ---------------------------------------------------------------------------
# configurations


@dataclass(frozen=True)
class WordExperimentConfig:
    """samples descriptions are drawn from each listed space."""

    spaces: tuple[WordDescSpace, ...]
    samples: int
    rank: int = 2
    master_seed: int = 0

    def __post_init__(self):
        if self.samples < 1:
            raise ValueError("samples must be >= 1")
        if not self.spaces:
            raise ValueError("need at least one description space")

    @classmethod
    def single(cls, space: WordDescSpace, samples: int, **kw) -> "WordExperimentConfig":
        return cls((space,), samples, **kw)


@dataclass(frozen=True)
class PermExperimentConfig:
    space: PolyDescSpace
    samples: int
    degree_cap: int = DEFAULT_DEGREE_CAP
    master_seed: int = 0

    def __post_init__(self):
        if self.samples < 1:
            raise ValueError("samples must be >= 1")


# ---------------------------------------------------------------------------
# word search


def _word_trial(cfg: WordExperimentConfig, index: int) -> TrialRecord:
    started = time.perf_counter()
    space = cfg.spaces[index // cfg.samples]
    space = WordDescSpace(space.d, space.c, space.M, cfg.rank)
    rng = substream(cfg.master_seed, index)
    desc = sample_word_description(space, rng)
    word = desc.evaluate()
    free = is_identity_free(word, desc.alphabet)
    abelian = free or is_identity_abelian(word, desc.alphabet)
    return TrialRecord(
        trial=index,
        kind="word",
        description=format_word_description(desc),
        size=len(word),
        identity_free=free,
        identity_abelian=abelian,
        elapsed=time.perf_counter() - started,
    )


def _run_trials(worker, cfg, count: int, workers: int) -> list:
    indices = range(count)
    if workers <= 1:
        return [worker(cfg, i) for i in indices]
    with multiprocessing.Pool(workers) as pool:
        chunk = max(1, count // (workers * 8))
        return pool.starmap(worker, ((cfg, i) for i in indices), chunksize=chunk)


def run_word_search(
    cfg: WordExperimentConfig, workers: int = 1
) -> tuple[list[TrialRecord], FrequencyTable]:
    """Sample descriptions, evaluate, and test the words in F_r and Z^r.

    Returns the per-trial records and a table with exact word-length bins
    for the series free_identity and abelian_identity.
    """
    records = _run_trials(_word_trial, cfg, cfg.samples * len(cfg.spaces), workers)
    table = aggregate(
        ((r.size, bool(r.identity_free)) for r in records), "exact", "free_identity"
    )
    table.extend(
        aggregate(
            ((r.size, bool(r.identity_abelian)) for r in records),
            "exact",
            "abelian_identity",
        )
    )
    return records, table


def run_word_baseline(
    lengths: Sequence[int],
    samples: int,
    rank: int = 2,
    master_seed: int = 0,
) -> FrequencyTable:
    """Uniform random words of each exact length, tested in the free group
    (series word_baseline)."""
    alphabet = GenAlphabet(rank)
    letters = alphabet.letters
    outcomes = []
    index = 0
    for length in lengths:
        for _ in range(samples):
            rng = substream(master_seed, index)
            word = "".join(rng.choice(letters) for _ in range(length))
            outcomes.append((length, is_identity_free(word, alphabet)))
            index += 1
    return aggregate(outcomes, "exact", "word_baseline")


# ---------------------------------------------------------------------------
# permutation search


def _pair_degrees(value: int) -> tuple[int, int]:
    """Degrees of the two permutations value decodes to, without decoding."""
    i, j = nat_to_pair(value)
    deg_i = factorial_digit_count(i - 1)
    deg_j = factorial_digit_count(j - 1)
    return (deg_i + 1 if deg_i else 0), (deg_j + 1 if deg_j else 0)


def _solvable_verdict(group_class: GroupClass, g, h, rng) -> bool:
    """Solvability of the classified pair.  Giants are solvable exactly up
    to degree 4; only class "other" needs a derived-series computation."""
    if group_class.label == "trivial":
        return True
    if group_class.is_giant:
        if group_class.degree <= 3:
            return True
        return group_class.degree == 4  # S_4/A_4 solvable, degree >= 5 not
    return is_solvable(PermGroup([g, h]), rng)


def _perm_trial(cfg: PermExperimentConfig, index: int) -> TrialRecord:
    started = time.perf_counter()
    rng = substream(cfg.master_seed, index)
    desc = sample_poly_description(cfg.space, rng)
    value = desc.evaluate()
    deg_i, deg_j = _pair_degrees(value)
    size = max(deg_i, deg_j)
    text = format_poly_description(desc)
    if size > cfg.degree_cap:
        return TrialRecord(
            trial=index, kind="perm", description=text, size=size,
            label="degree_overflow", elapsed=time.perf_counter() - started,
        )
    i, j = nat_to_pair(value)
    g, h = nat_to_perm(i), nat_to_perm(j)
    group_class = classify(g, h, rng, degree_cap=cfg.degree_cap)
    solvable = _solvable_verdict(group_class, g, h, rng)
    return TrialRecord(
        trial=index,
        kind="perm",
        description=text,
        size=size,
        label=group_class.label,
        solvable=solvable,
        order_bits=(group_class.order.bit_length() if group_class.order else None),
        elapsed=time.perf_counter() - started,
    )


def perm_tables(records: Sequence[TrialRecord]) -> FrequencyTable:
    """non_giant and solvable frequencies in geometric degree bins, plus the
    random-pair bound evaluated at each bin's geometric midpoint."""
    classified = [r for r in records if r.label != "degree_overflow"]
    table = aggregate(
        ((r.size, r.label == "other") for r in classified), "geometric", "non_giant"
    )
    table.extend(
        aggregate(
            ((r.size, bool(r.solvable)) for r in classified), "geometric", "solvable"
        )
    )
    bound_rows = []
    for row in table.series("non_giant"):
        if row.bin_lo < 2:
            continue
        mid = max(2, math.isqrt(row.bin_lo * row.bin_hi))
        bound = theorem3_bound(mid)
        bound_rows.append(
            BinRow(row.bin_lo, row.bin_hi, 0, 0, bound, bound, bound,
                   "theorem3_bound")
        )
    table.rows.extend(bound_rows)
    return table


def run_perm_search(
    cfg: PermExperimentConfig, workers: int = 1
) -> tuple[list[TrialRecord], FrequencyTable]:
    """Sample polynomial descriptions, decode to permutation pairs, classify,
    and test solvability.  Degree overflows are recorded, not fatal."""
    records = _run_trials(_perm_trial, cfg, cfg.samples, workers)
    return records, perm_tables(records)


def run_perm_baseline(
    n_list: Sequence[int],
    samples: int,
    master_seed: int = 0,
    workers: int = 1,
) -> FrequencyTable:
    """Uniform pairs from S_n for each n: observed fraction generating
    neither S_n nor A_n (series sn_baseline, trivial pairs included in the
    hits) next to the theorem3_bound reference values."""
    if not n_list or min(n_list) < 2:
        raise ValueError("baseline degrees must be >= 2")
    cfg = _SnBaselineConfig(tuple(n_list), samples, master_seed)
    outcomes = _run_trials(_sn_trial, cfg, samples * len(cfg.n_list), workers)
    table = aggregate(outcomes, "exact", "sn_baseline")
    for n in n_list:
        bound = theorem3_bound(n)
        table.rows.append(BinRow(n, n, 0, 0, bound, bound, bound, "theorem3_bound"))
    return table


@dataclass(frozen=True)
class _SnBaselineConfig:
    n_list: tuple[int, ...]
    samples: int
    master_seed: int


def _sn_trial(cfg: _SnBaselineConfig, index: int) -> tuple[int, bool]:
    n = cfg.n_list[index // cfg.samples]
    rng = substream(cfg.master_seed, index)
    g, h = random_sn_pair(n, rng)
    label = classify(g, h, rng).label
    return n, label in ("other", "trivial")


def overflow_count(records: Sequence[TrialRecord]) -> int:
    return sum(1 for r in records if r.label == "degree_overflow")
