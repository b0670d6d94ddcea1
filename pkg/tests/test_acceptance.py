"""Acceptance gate: one check per headline criterion, each printing a
single PASS line (run with -s to see them).  The heavy reproduction runs
use fixed seeds, so their outcomes are exact reruns, not statistical
flakes."""

import io
import itertools
import math
import statistics
import time
from random import Random

from algsearch.codec import (
    Permutation,
    nat_to_pair,
    nat_to_perm,
    nat_to_perm_pair,
    nat_to_word,
    pair_to_nat,
    perm_to_nat,
    word_to_nat,
)
from algsearch.cli import main as cli_main
from algsearch.descriptions import (
    PolyDescSpace,
    WordDescSpace,
    parse_poly_description,
)
from algsearch.harness import (
    PermExperimentConfig,
    WordExperimentConfig,
    overflow_count,
    run_perm_baseline,
    run_perm_search,
    run_word_baseline,
    run_word_search,
)
from algsearch.permgroup import (
    PermGroup,
    StabilizerChain,
    classify,
    is_solvable,
    random_permutation,
    theorem3_bound,
)
from test_permgroup import brute_force_closure, oracle_classify, oracle_solvable

WORKERS = 8


def test_codec_golden_tables():
    started = time.perf_counter()
    words = ["", "0", "1", "00", "01", "10", "11", "000"]
    for value, word in enumerate(words, start=1):
        assert word_to_nat(word) == value
        assert nat_to_word(value) == word
    pairs = [(1, 1), (1, 2), (2, 1), (1, 3), (2, 2), (3, 1), (1, 4), (2, 3)]
    for value, pair in enumerate(pairs, start=1):
        assert nat_to_pair(value) == pair
        assert pair_to_nat(*pair) == value
    elapsed = time.perf_counter() - started
    assert elapsed < 1.0
    print(f"\nPASS codec golden tables: 8+8 entries exact ({elapsed:.3f}s)")


def test_polynomial_example():
    started = time.perf_counter()
    value = parse_poly_description("8,2,3,1;6,7,4,2;15").evaluate()
    assert value == 83879080636024
    elapsed = time.perf_counter() - started
    assert elapsed < 1.0
    print(f"PASS polynomial example: 8,2,3,1;6,7,4,2;15 -> {value} ({elapsed:.3f}s)")


def test_pair_decode_degree_11():
    g, h = nat_to_perm_pair(83879080636024)
    assert g.max_moved() == 11
    assert h.max_moved() == 11
    assert h == Permutation.parse("(1,2,6,5,7,3,4,10,11,9,8)")
    # the decoding convention is pinned here; the README documents the
    # alternatives that were considered and rejected
    assert g == Permutation.parse("(1,3,7,8,11,10,6,2,4,9,5)")
    print("PASS pair decode: 83879080636024 -> two degree-11 permutations, "
          "cycles pinned under the documented convention")


def test_bijection_suites():
    started = time.perf_counter()
    # words up to length 14
    value = 1
    for length in range(15):
        for k in range(2**length):
            word = format(k, "b").zfill(length) if length else ""
            assert word_to_nat(word) == value and nat_to_word(value) == word
            value += 1
    # pairing to 1e5 plus 100 random 1000-bit values
    for m in range(1, 100001):
        assert pair_to_nat(*nat_to_pair(m)) == m
    rng = Random(1000)
    for _ in range(100):
        m = rng.getrandbits(1000) | (1 << 999)
        assert pair_to_nat(*nat_to_pair(m)) == m
    # permutation enumeration bijective and prefix-consistent to 6!
    perms = [nat_to_perm(m) for m in range(1, 721)]
    assert len(set(perms)) == 720
    assert all(perm_to_nat(p) == m for m, p in enumerate(perms, start=1))
    for k in (2, 3, 4, 5):
        assert perms[: math.factorial(k)] == [
            nat_to_perm(m) for m in range(1, math.factorial(k) + 1)
        ]
    elapsed = time.perf_counter() - started
    print(f"PASS bijection suites: words<=14, pairs to 1e5 + 100x1000-bit, "
          f"perms to 6!, zero failures ({elapsed:.1f}s)")


def test_group_engine_oracle_equivalence():
    started = time.perf_counter()
    rng = Random(42)
    s4 = [Permutation(list(p)) for p in itertools.permutations((1, 2, 3, 4))]
    for g in s4:
        for h in s4:
            assert classify(g, h, rng).label == oracle_classify(g, h)
            assert is_solvable(PermGroup([g, h]), rng) == oracle_solvable([g, h])
    named = {
        "S5": ([Permutation.parse("(1,2)"), Permutation.parse("(1,2,3,4,5)")],
               "symmetric_giant", False),
        "A5": ([Permutation.parse("(1,2,3)"), Permutation.parse("(3,4,5)")],
               "alternating_giant", False),
        "C5": ([Permutation.parse("(1,2,3,4,5)"), Permutation(())],
               "other", True),
        "Klein": ([Permutation.parse("(1,2)(3,4)"), Permutation.parse("(1,3)(2,4)")],
                  "other", True),
    }
    for name, (gens, label, solvable) in named.items():
        assert classify(gens[0], gens[1], rng).label == label, name
        assert is_solvable(PermGroup(gens), rng) == solvable, name
    for _ in range(50):
        gens = [random_permutation(7, rng) for _ in range(rng.randint(1, 3))]
        elems, _ = brute_force_closure(gens)
        assert StabilizerChain(gens).order() == len(elems)
    elapsed = time.perf_counter() - started
    assert elapsed < 120
    print(f"PASS group engine vs oracles: 576 S4 pairs + named groups + "
          f"50 random S7 subgroups, zero disagreements ({elapsed:.1f}s)")


def test_theorem3_consistency():
    started = time.perf_counter()
    samples = 10000
    table = run_perm_baseline([10, 20, 50], samples, master_seed=11,
                              workers=WORKERS)
    for row in table.series("sn_baseline"):
        n = row.bin_lo
        bound = theorem3_bound(n)
        sigma = math.sqrt(bound * (1 - bound) / samples)
        assert row.freq <= bound + 3 * sigma, (n, row.freq, bound)
    elapsed = time.perf_counter() - started
    assert elapsed < 600
    freqs = {r.bin_lo: round(r.freq, 4) for r in table.series("sn_baseline")}
    print(f"PASS random-pair bound: observed {freqs} all within bound + 3 sigma "
          f"({elapsed:.0f}s)")


def test_figure2_desk_scale():
    started = time.perf_counter()
    cfg = PermExperimentConfig(PolyDescSpace(7, M=64), samples=10000,
                               master_seed=0)
    records, _ = run_perm_search(cfg, workers=WORKERS)
    classified = len(records) - overflow_count(records)
    others = [r for r in records if r.label == "other"]
    fraction = len(others) / classified
    assert 0.03 <= fraction <= 0.30, fraction
    solvable_others = [r for r in others if r.solvable]
    assert len(solvable_others) >= 3, len(solvable_others)
    median_degree = statistics.median(r.size for r in records)
    assert fraction > 5 * theorem3_bound(int(median_degree))
    elapsed = time.perf_counter() - started
    assert elapsed < 3600
    print(f"PASS degree-search reproduction: non-giant fraction "
          f"{fraction:.3f} in [0.03, 0.30], {len(solvable_others)} solvable, "
          f"median degree {median_degree:.0f}, fraction > 5x bound "
          f"({elapsed:.0f}s)")


def test_figure1_desk_scale():
    started = time.perf_counter()
    cfg = WordExperimentConfig(
        (WordDescSpace(1, 2, 16), WordDescSpace(2, 2, 8), WordDescSpace(3, 2, 5)),
        samples=10000, master_seed=0)
    _, table = run_word_search(cfg, workers=WORKERS)
    qualifying = [r for r in table.series("free_identity")
                  if r.trials >= 1000 and r.hits > 0]
    assert len(qualifying) >= 3, [(r.bin_lo, r.trials, r.hits) for r in qualifying]
    baseline = run_word_baseline([50, 60, 70, 80], 10000, master_seed=0)
    assert all(r.hits == 0 for r in baseline.rows)
    elapsed = time.perf_counter() - started
    assert elapsed < 1800
    bins = sorted(r.bin_lo for r in qualifying)
    print(f"PASS word-search reproduction: identity hits in bins {bins} "
          f"(each >= 1000 samples); uniform baseline at lengths 50-80: "
          f"0 identities in 4x10^4 words ({elapsed:.0f}s)")


def test_run_perms_determinism(tmp_path):
    outputs = []
    for workers in (1, 8):
        path = tmp_path / f"out-{workers}.jsonl"
        code = cli_main(["run-perms", "--samples", "200", "--seed", "17",
                         "--M", "32", "--poly-count", "3",
                         "--workers", str(workers),
                         "--format", "jsonl", "--out", str(path)])
        assert code == 0
        outputs.append(path.read_bytes())
    assert outputs[0] == outputs[1]
    print("PASS determinism: run-perms with 1 and 8 workers produced "
          "byte-identical output files")
