"""Command line front end.

Exit codes: 0 success (documented exceptions allowed), 1 verification
failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Sequence

from . import analysis, theorems
from .bijections import BINARY_MAPS, MAPS, get_map
from .families import FAMILY_TAGS, FamilyBoundError, enumerate_family
from .partitions import durfee, lambda_of
from .words import (
    WordError, block_form, des, exc, format_word, inv, is_binary, is_compact_text, maj,
    ones_count, parse_word, permutation, standardize, trailing_twos,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def word_json(w: Sequence[int]):
    """Compact string when every letter is a digit, else a list of ints."""
    if all(a <= 9 for a in w):
        return "".join(map(str, w))
    return list(w)


def _emit_json(obj, out):
    json.dump(obj, out, indent=2)
    out.write("\n")


def _emit_csv(header, rows, out):
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def _parse_range(text: str | None) -> tuple[int, int] | None:
    if text is None:
        return None
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return int(lo), int(hi)
        return int(text), int(text)
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected LO..HI or N") from None


def _parse_stat(text: str):
    parts = tuple(p.strip() for p in text.replace(":", ",").split(","))
    if len(parts) == 1:
        if parts[0] not in analysis.STATS:
            raise UsageError(f"unknown statistic {parts[0]!r}")
        return parts[0]
    if parts not in analysis.JOINT_PAIRS:
        raise UsageError(f"joint statistic must be one of "
                         f"{', '.join(','.join(p) for p in analysis.JOINT_PAIRS)}")
    return parts


def cmd_stat(args, out):
    w = parse_word(args.word)
    report = {
        "word": word_json(w),
        "length": len(w),
        "des": des(w), "maj": maj(w), "inv": inv(w), "exc": exc(w),
        "standardization": word_json(standardize(w)) if w else None,
    }
    if is_binary(w):
        b = block_form(w)
        lam = lambda_of(w)
        dd = durfee(lam)
        report.update({
            "ones": ones_count(w),
            "trailing_twos": trailing_twos(w),
            "block_form": {"d": b.d, "m": list(b.m), "n": list(b.n_exp)},
            "lambda": list(lam.parts),
            "durfee": dd.d,
            "below_durfee": list(dd.below.parts),
        })
    if args.format == "json":
        _emit_json(report, out)
    elif args.format == "csv":
        _emit_csv(["key", "value"], [(k, json.dumps(v) if isinstance(v, (list, dict)) else v)
                                      for k, v in report.items()], out)
    else:
        for k, v in report.items():
            if isinstance(v, dict):
                v = " ".join(f"{a}={b}" for a, b in v.items())
            elif isinstance(v, list):
                v = "(" + ",".join(map(str, v)) + ")"
            out.write(f"{k}={'' if v is None else v}\n")
    return EXIT_OK


def cmd_map(args, out):
    w = parse_word(args.word)
    f = get_map(args.name)
    if args.name in BINARY_MAPS and not is_binary(w):
        raise UsageError(f"map {args.name} is defined on binary words only")
    if args.name == "stein":
        permutation(w)
    result = f(w)
    compact = is_compact_text(args.word)
    if args.format == "json":
        _emit_json({"map": args.name, "input": word_json(w), "output": word_json(result)}, out)
    elif args.format == "csv":
        _emit_csv(["map", "input", "output"],
                  [(args.name, format_word(w, compact), format_word(result, compact))], out)
    else:
        out.write(format_word(result, compact) + "\n")
    return EXIT_OK


def _word_listing(args, out, header: dict, words):
    if args.format == "json":
        _emit_json({**header, "count": len(words), "words": [word_json(w) for w in words]}, out)
    elif args.format == "csv":
        _emit_csv(["word"], [(format_word(w),) for w in words], out)
    else:
        for w in words:
            out.write(format_word(w) + "\n")


def cmd_enum(args, out):
    words = enumerate_family(args.family, args.n, max_n=args.max_n)
    _word_listing(args, out, {"family": args.family, "n": args.n}, words)
    return EXIT_OK


def _dist_payload(dist: analysis.DistPolynomial):
    return [[list(e) if isinstance(e, tuple) else e, c] for e, c in sorted(dist.coeffs.items())]


def cmd_dist(args, out):
    stat = _parse_stat(args.stat)
    label, words = analysis.resolve_set(args.set, args.n, args.max_n)
    if isinstance(stat, tuple):
        dist = analysis.joint_distribution(words, stat)
        header = list(stat) + ["count"]
        stat_label = ",".join(stat)
    else:
        dist = analysis.distribution(words, stat)
        header = [stat, "count"]
        stat_label = stat
    if args.format == "json":
        _emit_json({"set": label, "n": args.n, "stat": stat_label, "total": dist.total,
                    "coeffs": _dist_payload(dist)}, out)
    elif args.format == "csv":
        _emit_csv(header, dist.rows(), out)
    else:
        for row in dist.rows():
            out.write(" ".join(map(str, row)) + "\n")
    return EXIT_OK


def cmd_image(args, out):
    res = analysis.image(args.map, args.family, args.n, args.max_n)
    header = {"map": args.map, "family": args.family, "n": args.n,
              "multiset_size": res.multiset_size}
    _word_listing(args, out, header, res.words)
    if args.format == "text":
        out.write(f"# {len(res.words)} distinct images of {res.multiset_size} words\n")
    return EXIT_OK


def cmd_preimage(args, out):
    target = parse_word(args.target)
    found = analysis.find_preimages(args.map, args.family, args.n, target, args.max_n)
    _word_listing(args, out, {"map": args.map, "family": args.family, "n": args.n,
                              "target": word_json(target)}, found)
    if not found and args.format == "text":
        sys.stderr.write("no preimage\n")
    return EXIT_OK


def cmd_pair(args, out):
    rep = analysis.check_pair(args.kind, args.left, args.right, args.n, args.max_n)
    witness = list(rep.witness) if isinstance(rep.witness, tuple) else rep.witness
    if args.format == "json":
        _emit_json({"kind": rep.kind, "left": rep.left, "right": rep.right, "n": rep.n,
                    "equal": rep.equal, "left_dist": _dist_payload(rep.left_dist),
                    "right_dist": _dist_payload(rep.right_dist), "witness": witness}, out)
    else:
        out.write(f"{rep.kind} {rep.left} vs {rep.right} n={rep.n}: "
                  f"{'equal' if rep.equal else 'unequal'}\n")
        out.write(f"left  {rep.left_dist}\nright {rep.right_dist}\n")
        if not rep.equal:
            out.write(f"witness exponent {rep.witness}\n")
    return EXIT_OK if rep.equal else EXIT_FAIL


def _report_json(rep: theorems.TheoremReport, timing: bool):
    return {
        "theorem": rep.theorem,
        "range": [rep.lo, rep.hi],
        "results": [{"n": r.n, "status": r.status,
                     "counterexample": None if r.counterexample is None
                     else word_json(r.counterexample),
                     "note": r.note} for r in rep.results],
        "elapsed_ms": rep.elapsed_ms if timing else 0,
    }


def cmd_verify(args, out):
    n_range = _parse_range(args.range)
    if args.theorem == "all":
        ids = theorems.THEOREM_IDS
        plan = [(tid, *theorems.resolve_range(tid, n_range, args.max_n, args.max_perm_n,
                                              clip=True)) for tid in ids]
    else:
        plan = [(args.theorem, *theorems.resolve_range(args.theorem, n_range, args.max_n,
                                                       args.max_perm_n))]
    reports = theorems.run_many(plan, seed=args.seed, jobs=args.jobs)
    if args.format == "json":
        payload = [_report_json(r, args.timing) for r in reports]
        _emit_json(payload[0] if args.theorem != "all" else payload, out)
    elif args.format == "csv":
        rows = [(r.theorem, x.n, x.status,
                 "" if x.counterexample is None else format_word(x.counterexample))
                for r in reports for x in r.results]
        _emit_csv(["theorem", "n", "status", "counterexample"], rows, out)
    else:
        for rep in reports:
            tally = {}
            for x in rep.results:
                tally[x.status] = tally.get(x.status, 0) + 1
            summary = ", ".join(f"{v} {k}" for k, v in sorted(tally.items()))
            timing = f" [{rep.elapsed_ms} ms]" if args.timing else ""
            out.write(f"{rep.theorem} n={rep.lo}..{rep.hi}: {summary}{timing}\n")
            for x in rep.results:
                if x.status != theorems.PASS:
                    cx = "-" if x.counterexample is None else format_word(x.counterexample)
                    out.write(f"  n={x.n} {x.status} counterexample={cx} ({x.note})\n")
    return EXIT_FAIL if any(r.failed for r in reports) else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--max-n", type=int, default=theorems.BINARY_GUARD,
                        help="bound on word length for enumeration and verification "
                             "(default %(default)s)")
    common.add_argument("--max-perm-n", type=int, default=theorems.PERM_GUARD,
                        help="bound on permutation length for verification (default %(default)s)")
    common.add_argument("--seed", type=int, default=theorems.DEFAULT_SEED,
                        help="seed for randomized checks (default %(default)s)")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for verify")
    common.add_argument("--timing", action="store_true",
                        help="report elapsed times (otherwise output is run-independent)")

    parser = argparse.ArgumentParser(
        prog="eulerian-words",
        description="Statistics, bijections and Eulerian pairs on Fibonacci words.",
        parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stat", parents=[common], help="statistics of a word")
    p.add_argument("word", help='e.g. 21221 or "10 2"')
    p.set_defaults(func=cmd_stat)

    p = sub.add_parser("map", parents=[common], help="apply a map to a word")
    p.add_argument("name", choices=tuple(MAPS))
    p.add_argument("word")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("enum", parents=[common], help="list a word family")
    p.add_argument("family", choices=FAMILY_TAGS)
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("dist", parents=[common], help="statistic distribution over a set")
    p.add_argument("set", help="family tag or MAP(FAMILY), e.g. phi2(fib)")
    p.add_argument("n", type=int)
    p.add_argument("stat", help="des, maj, inv, exc, des,maj or exc,inv")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("image", parents=[common], help="image of a family under a map")
    p.add_argument("map", choices=tuple(MAPS))
    p.add_argument("family", choices=FAMILY_TAGS)
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_image)

    p = sub.add_parser("preimage", parents=[common], help="family members mapping to a word")
    p.add_argument("map", choices=tuple(MAPS))
    p.add_argument("family", choices=FAMILY_TAGS)
    p.add_argument("n", type=int)
    p.add_argument("target")
    p.set_defaults(func=cmd_preimage)

    p = sub.add_parser("pair", parents=[common], help="compare distributions of two sets")
    p.add_argument("kind", choices=analysis.PAIR_KINDS)
    p.add_argument("left", help="family tag or MAP(FAMILY)")
    p.add_argument("right", help="family tag or MAP(FAMILY)")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("verify", parents=[common], help="run theorem checks",
                       description="theorems: " + ", ".join(theorems.THEOREM_IDS))
    p.add_argument("theorem", choices=theorems.THEOREM_IDS + ("all",))
    p.add_argument("range", nargs="?", help="LO..HI or N (default: per-theorem range)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return int(err.code) if err.code is not None else EXIT_OK
    if args.jobs < 1:
        sys.stderr.write("error: --jobs must be >= 1\n")
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except (UsageError, WordError, FamilyBoundError, theorems.RangeError,
            KeyError, ValueError) as err:
        msg = err.args[0] if isinstance(err, KeyError) and err.args else err
        sys.stderr.write(f"error: {msg}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
