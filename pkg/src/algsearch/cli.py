"""Command line entry point.

Subcommands: encode, decode, eval-desc, run-words, run-words-baseline,
run-perms, run-perms-baseline, classify, report.  Exit code 0 on success,
2 on a configuration or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .codec import (
    Permutation,
    nat_to_pair,
    nat_to_perm,
    nat_to_word,
    word_to_nat,
)
from .descriptions import (
    PolyDescSpace,
    WordDescSpace,
    parse_poly_description,
    parse_word_description,
)
from .freewords import is_identity_abelian, is_identity_free
from .harness import (
    FrequencyTable,
    PermExperimentConfig,
    WordExperimentConfig,
    aggregate,
    overflow_count,
    perm_tables,
    read_jsonl,
    run_perm_baseline,
    run_perm_search,
    run_word_baseline,
    run_word_search,
    write_jsonl,
)
from .permgroup import DEFAULT_DEGREE_CAP, PermGroup, classify, is_solvable
from random import Random


def _int_list(text: str) -> list[int]:
    return [int(tok) for tok in text.split(",") if tok.strip()]


def _parse_spaces(text: str, rank: int) -> tuple[WordDescSpace, ...]:
    spaces = []
    for section in text.split(";"):
        d, c, m = _int_list(section)
        spaces.append(WordDescSpace(d, c, m, rank))
    return tuple(spaces)


def _open_out(path: str | None):
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w", encoding="utf-8", newline=""), True


def _emit_table(table: FrequencyTable, path: str | None) -> None:
    fp, close = _open_out(path)
    try:
        table.write_csv(fp)
    finally:
        if close:
            fp.close()


def _emit_records(records, path: str | None) -> None:
    fp, close = _open_out(path)
    try:
        write_jsonl(records, fp)
    finally:
        if close:
            fp.close()


def _add_run_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--seed", type=int, default=0, help="master seed")
    sub.add_argument("--samples", type=int, default=10000)
    sub.add_argument("--workers", type=int, default=1)
    sub.add_argument("--out", default=None, help="output path (default stdout)")
    sub.add_argument("--format", choices=("csv", "jsonl"), default="csv",
                     help="csv: frequency table; jsonl: per-trial records")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="algsearch",
        description="Short-description search over words and permutation "
        "groups, with seeded reproducible experiment runs.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("encode", help="binary word -> natural number")
    p.add_argument("word", help="word over {0,1}; use '' for the empty word")

    p = subs.add_parser(
        "decode", help="natural number -> word, pair, and permutation pair"
    )
    p.add_argument("value", type=int)

    p = subs.add_parser("eval-desc", help="evaluate a description")
    p.add_argument("--type", choices=("word", "poly"), required=True)
    p.add_argument("text", help="e.g. \"ab,bB,aB,AA;ba\" or \"8,2,3,1;15\"")
    p.add_argument("--rank", type=int, default=2)

    p = subs.add_parser("run-words", help="word-description search (figure 1)")
    _add_run_common(p)
    p.add_argument("--spaces", default="1,2,16;2,2,8;3,2,5",
                   help="semicolon-separated d,c,M triples")
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--c", type=int, default=None)
    p.add_argument("--M", type=int, default=None)
    p.add_argument("--rank", type=int, default=2)

    p = subs.add_parser("run-words-baseline",
                        help="uniform random words of fixed lengths")
    _add_run_common(p)
    p.add_argument("--lengths", default="50,60,70,80",
                   help="comma-separated word lengths")
    p.add_argument("--rank", type=int, default=2)

    p = subs.add_parser("run-perms", help="polynomial-description search (figure 2)")
    _add_run_common(p)
    p.add_argument("--poly-count", type=int, default=7)
    p.add_argument("--poly-degree", type=int, default=2)
    p.add_argument("--lead-min", type=int, default=1)
    p.add_argument("--lead-max", type=int, default=20)
    p.add_argument("--coeff-max", type=int, default=20)
    p.add_argument("--M", type=int, default=64)
    p.add_argument("--degree-cap", type=int, default=DEFAULT_DEGREE_CAP)

    p = subs.add_parser("run-perms-baseline",
                        help="uniform S_n pairs against the random-pair bound")
    _add_run_common(p)
    p.add_argument("--n-list", default="10,20,50")

    p = subs.add_parser("classify", help="classify the group two permutations generate")
    p.add_argument("g", help="cycle or one-line notation, e.g. \"(1,2,3)(4,5)\"")
    p.add_argument("h")
    p.add_argument("--seed", type=int, default=0)

    p = subs.add_parser("report", help="rebuild frequency tables from a JSONL record file")
    p.add_argument("--records", required=True)
    p.add_argument("--out", default=None)
    return parser


def _cmd_encode(args) -> None:
    word = args.word.strip()
    if word and set(word) - {"0", "1"}:
        raise ValueError(f"not a binary word: {word!r}")
    print(word_to_nat(word))


def _cmd_decode(args) -> None:
    m = args.value
    if m < 1:
        raise ValueError("value must be >= 1")
    i, j = nat_to_pair(m)
    g, h = nat_to_perm(i), nat_to_perm(j)
    print(f"word: {nat_to_word(m) or '(empty)'}")
    print(f"pair: ({i}, {j})")
    print(f"perm1: {g.cycle_string()}  degree {g.max_moved()}")
    print(f"perm2: {h.cycle_string()}  degree {h.max_moved()}")


def _cmd_eval_desc(args) -> None:
    if args.type == "word":
        desc = parse_word_description(args.text, args.rank)
        word = desc.evaluate()
        print(word or "(empty)")
        print(f"free identity: {is_identity_free(word, desc.alphabet)}")
        print(f"abelian identity: {is_identity_abelian(word, desc.alphabet)}")
    else:
        print(parse_poly_description(args.text).evaluate())


def _cmd_run_words(args) -> None:
    if args.d is not None or args.c is not None or args.M is not None:
        if None in (args.d, args.c, args.M):
            raise ValueError("--d, --c and --M must be given together")
        spaces = (WordDescSpace(args.d, args.c, args.M, args.rank),)
    else:
        spaces = _parse_spaces(args.spaces, args.rank)
    cfg = WordExperimentConfig(spaces, args.samples, args.rank, args.seed)
    records, table = run_word_search(cfg, workers=args.workers)
    if args.format == "jsonl":
        _emit_records(records, args.out)
    else:
        _emit_table(table, args.out)


def _cmd_run_words_baseline(args) -> None:
    if args.format != "csv":
        raise ValueError("run-words-baseline only emits csv")
    lengths = _int_list(args.lengths)
    if not lengths or min(lengths) < 1:
        raise ValueError("lengths must be positive")
    table = run_word_baseline(lengths, args.samples, args.rank, args.seed)
    _emit_table(table, args.out)


def _cmd_run_perms(args) -> None:
    space = PolyDescSpace(
        args.poly_count,
        args.poly_degree,
        (args.lead_min, args.lead_max),
        (0, args.coeff_max),
        args.M,
    )
    cfg = PermExperimentConfig(space, args.samples, args.degree_cap, args.seed)
    records, table = run_perm_search(cfg, workers=args.workers)
    if args.format == "jsonl":
        _emit_records(records, args.out)
    else:
        _emit_table(table, args.out)
    skipped = overflow_count(records)
    if skipped:
        print(f"degree overflows: {skipped} of {len(records)} trials",
              file=sys.stderr)


def _cmd_run_perms_baseline(args) -> None:
    if args.format != "csv":
        raise ValueError("run-perms-baseline only emits csv")
    n_list = _int_list(args.n_list)
    table = run_perm_baseline(n_list, args.samples, args.seed, workers=args.workers)
    _emit_table(table, args.out)


def _cmd_classify(args) -> None:
    g = Permutation.parse(args.g)
    h = Permutation.parse(args.h)
    rng = Random(args.seed)
    verdict = classify(g, h, rng)
    solvable = is_solvable(PermGroup([g, h]), rng)
    print(json.dumps({
        "label": verdict.label,
        "degree": verdict.degree,
        "order": str(verdict.order) if verdict.order is not None else None,
        "solvable": solvable,
    }))


def _cmd_report(args) -> None:
    with open(args.records, encoding="utf-8") as fp:
        records = read_jsonl(fp)
    if not records:
        raise ValueError("no records in input")
    kinds = {r.kind for r in records}
    if kinds == {"perm"}:
        table = perm_tables(records)
    elif kinds == {"word"}:
        table = aggregate(
            ((r.size, bool(r.identity_free)) for r in records),
            "exact", "free_identity",
        )
        table.extend(aggregate(
            ((r.size, bool(r.identity_abelian)) for r in records),
            "exact", "abelian_identity",
        ))
    else:
        raise ValueError(f"mixed or unknown record kinds: {sorted(kinds)}")
    _emit_table(table, args.out)


_COMMANDS = {
    "encode": _cmd_encode,
    "decode": _cmd_decode,
    "eval-desc": _cmd_eval_desc,
    "run-words": _cmd_run_words,
    "run-words-baseline": _cmd_run_words_baseline,
    "run-perms": _cmd_run_perms,
    "run-perms-baseline": _cmd_run_perms_baseline,
    "classify": _cmd_classify,
    "report": _cmd_report,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _COMMANDS[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
