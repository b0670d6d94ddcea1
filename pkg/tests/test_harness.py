import io
import math
from random import Random

import pytest

from algsearch.descriptions import PolyDescSpace, WordDescSpace
from algsearch.harness import (
    BinRow,
    FrequencyTable,
    PermExperimentConfig,
    TrialRecord,
    WordExperimentConfig,
    aggregate,
    overflow_count,
    read_jsonl,
    run_perm_baseline,
    run_perm_search,
    run_word_baseline,
    run_word_search,
    substream,
    wilson_interval,
    write_jsonl,
)


class TestWilson:
    def test_zero_hits_of_1000(self):
        freq, lo, hi = wilson_interval(0, 1000)
        assert freq == 0.0
        assert lo == pytest.approx(0.0, abs=1e-12)
        assert hi == pytest.approx(0.00383, abs=2e-4)

    def test_all_hits_of_1000(self):
        freq, lo, hi = wilson_interval(1000, 1000)
        assert freq == 1.0
        assert hi == 1.0
        assert lo == pytest.approx(0.99617, abs=2e-4)

    def test_half(self):
        freq, lo, hi = wilson_interval(50, 100)
        assert lo < 0.5 < hi
        assert hi - lo == pytest.approx(2 * 1.96 * 0.05, rel=0.1)

    def test_empty_raises(self):
        with pytest.raises(ValueError):
            wilson_interval(0, 0)


class TestAggregate:
    def test_empty(self):
        assert aggregate([], "exact", "free_identity").rows == []

    def test_exact_bins(self):
        table = aggregate([(3, True), (3, False), (5, False)], "exact", "s")
        assert [(r.bin_lo, r.trials, r.hits) for r in table.rows] == [
            (3, 2, 1), (5, 1, 0)
        ]

    def test_geometric_bins(self):
        table = aggregate(
            [(1, False), (2, False), (3, True), (4, False), (7, False), (0, False)],
            "geometric", "s",
        )
        assert [(r.bin_lo, r.bin_hi, r.trials, r.hits) for r in table.rows] == [
            (0, 0, 1, 0), (1, 1, 1, 0), (2, 3, 2, 1), (4, 7, 2, 0)
        ]

    def test_under_sampled_flag(self):
        row = aggregate([(1, False)] * 999, "exact", "s").rows[0]
        assert row.under_sampled
        row = aggregate([(1, False)] * 1000, "exact", "s").rows[0]
        assert not row.under_sampled

    def test_unknown_binning(self):
        with pytest.raises(ValueError):
            aggregate([], "linear", "s")


class TestSerialization:
    def test_csv_round_trip(self):
        table = FrequencyTable([
            BinRow(1, 1, 10, 3, 0.3, 0.1, 0.6, "free_identity"),
            BinRow(2, 3, 5, 0, 0.0, 0.0, 0.43, "non_giant"),
        ])
        text = table.to_csv()
        assert text.splitlines()[0] == "bin_lo,bin_hi,trials,hits,freq,ci_lo,ci_hi,series"
        back = FrequencyTable.read_csv(io.StringIO(text))
        assert back.rows == table.rows

    def test_csv_rejects_bad_header(self):
        with pytest.raises(ValueError):
            FrequencyTable.read_csv(io.StringIO("a,b,c\n1,2,3\n"))

    def test_jsonl_round_trip(self):
        rec = TrialRecord(0, "word", "a,A,b,B;ab", 4, True, True)
        buf = io.StringIO()
        write_jsonl([rec], buf)
        buf.seek(0)
        back = read_jsonl(buf)
        assert back == [rec]

    def test_elapsed_not_serialized(self):
        rec = TrialRecord(0, "word", "x", 1, False, False, elapsed=1.5)
        assert "elapsed" not in rec.to_json()


class TestSubstreams:
    def test_independent_of_order(self):
        a = [substream(5, i).random() for i in range(10)]
        b = [substream(5, i).random() for i in reversed(range(10))]
        assert a == b[::-1]

    def test_distinct(self):
        assert substream(5, 0).random() != substream(5, 1).random()
        assert substream(5, 0).random() != substream(6, 0).random()


class TestWordSearch:
    def test_deterministic_and_worker_independent(self):
        cfg = WordExperimentConfig((WordDescSpace(1, 2, 8),), 200, master_seed=4)
        recs1, tab1 = run_word_search(cfg)
        recs2, tab2 = run_word_search(cfg, workers=3)
        assert recs1 == recs2
        assert tab1.to_csv() == tab2.to_csv()

    def test_record_consistency(self):
        cfg = WordExperimentConfig((WordDescSpace(2, 2, 8),), 300, master_seed=1)
        recs, table = run_word_search(cfg)
        for r in recs:
            assert r.kind == "word"
            if r.identity_free:
                assert r.identity_abelian
        # conservation: bins cover every trial
        assert table.total_trials("free_identity") == 300
        assert table.total_trials("abelian_identity") == 300

    def test_bad_config(self):
        with pytest.raises(ValueError):
            WordExperimentConfig((), 10)
        with pytest.raises(ValueError):
            WordExperimentConfig((WordDescSpace(1, 2, 8),), 0)


class TestWordBaseline:
    def test_length_one_no_identities(self):
        table = run_word_baseline([1], 500, master_seed=2)
        assert table.rows[0].hits == 0

    def test_length_two_quarter(self):
        # 4 of the 16 two-letter words reduce to the identity
        table = run_word_baseline([2], 4000, master_seed=3)
        row = table.rows[0]
        sigma = math.sqrt(0.25 * 0.75 / 4000)
        assert abs(row.freq - 0.25) < 4 * sigma

    def test_odd_length_parity(self):
        table = run_word_baseline([21], 500, master_seed=4)
        assert table.rows[0].hits == 0


class TestPermSearch:
    def test_trivial_space(self):
        cfg = PermExperimentConfig(PolyDescSpace(0, M=0), samples=5, master_seed=0)
        recs, table = run_perm_search(cfg)
        assert all(r.label == "trivial" for r in recs)
        assert all(r.solvable for r in recs)
        assert table.series("non_giant")[0].trials == 5

    def test_deterministic_jsonl(self):
        cfg = PermExperimentConfig(PolyDescSpace(2, M=16), samples=60, master_seed=9)
        recs1, _ = run_perm_search(cfg)
        recs2, _ = run_perm_search(cfg, workers=2)
        a, b = io.StringIO(), io.StringIO()
        write_jsonl(recs1, a)
        write_jsonl(recs2, b)
        assert a.getvalue() == b.getvalue()

    def test_conservation_with_overflow(self):
        cfg = PermExperimentConfig(
            PolyDescSpace(2, M=16), samples=80, degree_cap=30, master_seed=9
        )
        recs, table = run_perm_search(cfg)
        binned = table.total_trials("non_giant")
        assert binned + overflow_count(recs) == 80
        for r in recs:
            if r.label == "degree_overflow":
                assert r.size > 30
                assert r.solvable is None

    def test_no_giant_marked_solvable_above_degree_4(self):
        cfg = PermExperimentConfig(PolyDescSpace(2, M=16), samples=60, master_seed=9)
        recs, _ = run_perm_search(cfg)
        for r in recs:
            if r.label in ("symmetric_giant", "alternating_giant") and r.size > 4:
                assert r.solvable is False


class TestPermBaseline:
    def test_n2_exact(self):
        # every pair from S_2 generates S_2 or the trivial group; the
        # trivial pair (id, id) appears with probability 1/4
        table = run_perm_baseline([2], 2000, master_seed=5)
        row = table.series("sn_baseline")[0]
        sigma = math.sqrt(0.25 * 0.75 / 2000)
        assert abs(row.freq - 0.25) < 4 * sigma

    def test_n4_against_oracle(self):
        # exhaustive enumeration: 576 pairs, count those generating
        # something other than S_4 / A_4 / trivial... including trivial
        import itertools
        from algsearch.codec import Permutation
        from algsearch.permgroup import classify
        rng = Random(6)
        s4 = [Permutation(list(p)) for p in itertools.permutations((1, 2, 3, 4))]
        truth = sum(
            classify(g, h, rng).label in ("other", "trivial")
            for g in s4 for h in s4
        ) / 576
        table = run_perm_baseline([4], 3000, master_seed=6)
        row = table.series("sn_baseline")[0]
        sigma = math.sqrt(truth * (1 - truth) / 3000)
        assert abs(row.freq - truth) < 4 * sigma

    def test_bound_rows_present(self):
        table = run_perm_baseline([10, 20], 50, master_seed=7)
        bounds = {r.bin_lo: r.freq for r in table.series("theorem3_bound")}
        assert bounds[10] == pytest.approx(0.188)
        assert bounds[20] == pytest.approx(0.072)

    def test_rejects_small_degree(self):
        with pytest.raises(ValueError):
            run_perm_baseline([1], 10)
