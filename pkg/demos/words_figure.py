"""Desk-scale word search: sample short descriptions from three parameter
spaces, test the evaluated words in the rank-2 free group and its
abelianization, and compare with uniform random words of fixed lengths.

Writes demos/out/words.csv, which frontend's plot-words renders.
"""

import pathlib

from algsearch import WordDescSpace, WordExperimentConfig
from algsearch.harness import run_word_baseline, run_word_search

SAMPLES = 10000
SEED = 0

out_dir = pathlib.Path(__file__).parent / "out"
out_dir.mkdir(exist_ok=True)

cfg = WordExperimentConfig(
    spaces=(
        WordDescSpace(d=1, c=2, M=16),
        WordDescSpace(d=2, c=2, M=8),
        WordDescSpace(d=3, c=2, M=5),
    ),
    samples=SAMPLES,
    master_seed=SEED,
)
records, table = run_word_search(cfg, workers=8)

free_hits = sum(r.identity_free for r in records)
abelian_hits = sum(r.identity_abelian for r in records)
print(f"{len(records)} descriptions sampled")
print(f"free-group identities: {free_hits}")
print(f"abelianized identities: {abelian_hits}")

# uniform words of the same letter alphabet, for the flat baseline
baseline = run_word_baseline([50, 60, 70, 80], SAMPLES, master_seed=SEED)
print("baseline identities:", sum(r.hits for r in baseline.rows),
      f"in {baseline.total_trials('word_baseline')} uniform words")

table.extend(baseline)
csv_path = out_dir / "words.csv"
with open(csv_path, "w", newline="") as fp:
    table.write_csv(fp)
print(f"wrote {csv_path}")
