"""Command-line front end.

Subcommands reproduce the count tables, run the verification battery, build
witness trees from sign patterns, and cross-check the closed formulas against
a locally supplied OEIS b-file. Exit codes: 0 success, 1 verification or
comparison failure, 2 usage/parse error. All output is deterministic.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Callable, Iterator

from . import admissible, double_minus, generic_op, series_tools, tree_core


class BFileError(ValueError):
    """Malformed b-file; the message carries the offending line number."""


def parse_bfile(path: str) -> dict[int, int]:
    """Parse OEIS b-file text: '#' comment lines and blank lines are
    skipped, data lines are '<index><whitespace><value>' with indices
    strictly increasing."""
    entries: dict[int, int] = {}
    last: int | None = None
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split()
            if len(fields) != 2:
                raise BFileError(
                    f"{path}:{lineno}: expected '<index> <value>', got {raw.rstrip()!r}"
                )
            try:
                index, value = int(fields[0]), int(fields[1])
            except ValueError:
                raise BFileError(
                    f"{path}:{lineno}: non-integer field in {raw.rstrip()!r}"
                ) from None
            if last is not None and index <= last:
                raise BFileError(f"{path}:{lineno}: index {index} does not increase")
            entries[index] = value
            last = index
    return entries


def _cmd_count(args) -> int:
    if args.method == "formula":
        print(double_minus.count_formula(args.n))
    else:
        print(double_minus.count_distinct_bruteforce(args.n, cap=args.cap))
    return 0


FORMULA_TABLE_LIMIT = 10_000


def _cmd_table(args) -> int:
    if args.method == "formula" and args.max_n > FORMULA_TABLE_LIMIT:
        print(f"error: --max-n above formula-mode limit {FORMULA_TABLE_LIMIT}", file=sys.stderr)
        return 2
    table = double_minus.count_table(args.max_n, method=args.method, cap=args.cap)
    render = {
        "md": double_minus.table_to_markdown,
        "csv": double_minus.table_to_csv,
        "json": double_minus.table_to_json,
    }[args.format]
    sys.stdout.write(render(table))
    return 0


def _cmd_trees(args) -> int:
    for t in tree_core.enumerate_trees(args.n, cap=args.cap):
        if args.render == "expr":
            print(tree_core.render_expression(t, "*"))
        elif args.render == "bits":
            print(tree_core.encode_bits(t))
        else:
            print("(" + ",".join(str(d) for d in tree_core.depth_sequence(t)) + ")")
    return 0


def _cmd_admissible(args) -> int:
    seqs = admissible.enumerate_admissible(args.n)
    if args.list:
        for bits in seqs:
            print("".join(str(b) for b in bits))
    else:
        print(sum(1 for _ in seqs))
    return 0


def _cmd_construct(args) -> int:
    seq = args.seq
    if not seq or any(c not in "01" for c in seq):
        print("error: sequence must be a nonempty string over 0/1", file=sys.stderr)
        return 2
    bits = tuple(int(c) for c in seq)
    n = len(bits) - 1
    problems = []
    if n >= 1 and all(bits[j] != bits[j + 1] for j in range(n)):
        problems.append("not admissible: alternating (no adjacent equal pair)")
    zeros = bits.count(0)
    if (n + zeros) % 3 != 1:
        problems.append(
            f"not admissible: n + zeros = {n} + {zeros} = {n + zeros}, "
            f"{(n + zeros)} mod 3 = {(n + zeros) % 3}, need 1"
        )
    if problems:
        for p in problems:
            print(p)
        return 1
    t = admissible.admissible_to_tree(bits)
    print(f"bits: {tree_core.encode_bits(t)}")
    print(f"expr: {tree_core.render_expression(t, '#')}")
    print("depths: (" + ",".join(str(d) for d in tree_core.depth_sequence(t)) + ")")
    return 0


def _cmd_gf(args) -> int:
    print(" ".join(str(c) for c in series_tools.gf_coeffs(args.terms)))
    return 0


def _cmd_genop(args) -> int:
    op = generic_op.LinearOp(args.k, args.u, args.v)
    for n in range(args.max_n + 1):
        count = generic_op.count_distinct_generic(op, n, cap=args.cap)
        print(f"{n} {count} {tree_core.catalan(n)}")
    depth = generic_op.nonassociativity_depth(op, args.max_n, cap=args.cap)
    print(f"depth {depth if depth is not None else 'none'}")
    return 0


def _cmd_stats(args) -> int:
    print(series_tools.average_leaf_depth(args.n, cap=args.cap))
    return 0


def _cmd_oeis(args) -> int:
    entries = parse_bfile(args.bfile)
    good = 0
    bad = 0
    for n in range(1, args.max_n + 1):
        expected = double_minus.count_formula(n)
        if n not in entries:
            print(f"missing index n={n} in b-file")
            bad += 1
        elif entries[n] != expected:
            print(f"mismatch at n={n}: bfile={entries[n]} formula={expected}")
            bad += 1
        else:
            good += 1
    print(f"{good}/{args.max_n} match")
    return 0 if bad == 0 else 1


Check = tuple[str, Callable[[], tuple[bool, str]]]


def _verify_checks(max_n: int, cap: int | None) -> Iterator[Check]:
    tree_core.ensure_within_cap(max_n, cap)
    hi = max_n

    def counts_match():
        for n in range(1, hi + 1):
            brute = double_minus.count_distinct_bruteforce(n, cap)
            formula = double_minus.count_formula(n)
            if brute != formula:
                return False, f"n={n}: brute {brute} != formula {formula}"
        return True, f"n=1..{hi}"

    yield "counts: brute force equals closed formula", counts_match

    def refined_match():
        if double_minus.refined_counts_bruteforce(0, cap) != {1: 1}:
            return False, "n=0 row"
        for n in range(1, hi + 1):
            brute = double_minus.refined_counts_bruteforce(n, cap)
            formula = {
                r: v
                for r in range(n + 2)
                if (v := double_minus.refined_count_formula(n, r))
            }
            if brute != formula:
                return False, f"n={n}"
        return True, f"n=0..{hi}"

    yield "refined rows: brute force equals closed formula", refined_match

    def row_sums():
        for n in range(hi + 1):
            row = double_minus.refined_counts_bruteforce(n, cap)
            if sum(row.values()) != double_minus.count_formula(n):
                return False, f"n={n}"
        return True, f"n=0..{hi}"

    yield "refinement identity: row sums equal totals", row_sums

    def depth_laws():
        top = min(hi, 10)
        for n in range(top + 1):
            for t in tree_core.enumerate_trees(n, cap):
                depths = tree_core.depth_sequence(t)
                evens = sum(1 for d in depths if d % 2 == 0)
                if (n + evens) % 3 != 1:
                    return False, f"mod-3 fails for {t!r}"
                if n >= 1 and all(
                    depths[j] != depths[j + 1] for j in range(n)
                ):
                    return False, f"no adjacent equal pair in {t!r}"
        return True, f"n=0..{top}, exhaustive"

    yield "leaf-depth laws: mod-3 and adjacent equal pair", depth_laws

    def admissible_cardinality():
        top = min(max_n, 16)
        for n in range(1, top + 1):
            seen = sum(1 for _ in admissible.enumerate_admissible(n))
            if seen != double_minus.count_formula(n):
                return False, f"n={n}"
        return True, f"n=1..{top}"

    yield "admissible sequences: cardinality equals counts", admissible_cardinality

    def roundtrip():
        top = min(max_n, 10)
        for n in range(top + 1):
            for bits in admissible.enumerate_admissible(n):
                t = admissible.admissible_to_tree(bits)
                if double_minus.sign_parity(t) != bits:
                    return False, f"seq {bits}"
        return True, f"n=0..{top}, every admissible sequence"

    yield "bijection: sequence -> tree -> sign pattern roundtrips", roundtrip

    def skipping():
        for n in range(65):
            for k in range(3):
                if series_tools.skipping_sum_direct(n, k) != series_tools.skipping_sum_closed(n, k):
                    return False, f"n={n}, k={k}"
        return True, "n=0..64, k=0..2"

    yield "skipping sums: direct equals roots-of-unity closed form", skipping

    def methods_agree():
        for n in range(1, 513):
            values = {
                double_minus.a000975(n, m) for m in double_minus.A000975_METHODS
            }
            if len(values) != 1:
                return False, f"n={n}: {values}"
        return True, "n=1..512, six methods"

    yield "recurrences: all A000975 characterizations agree", methods_agree

    def complement_recurrence():
        for n in range(2, 513):
            if (
                double_minus.count_formula(n) + double_minus.count_formula(n - 1) + 1
                != 1 << n
            ):
                return False, f"n={n}"
        return True, "n=2..512"

    yield "recurrence: count(n) + count(n-1) + 1 = 2^n", complement_recurrence

    def cprime_identity():
        for n in range(1, 65):
            expect = double_minus.count_formula(n) + (1 if n % 2 == 0 else 0)
            if series_tools.cprime(n) != expect:
                return False, f"n={n}"
            if 3 * series_tools.cprime(n) != (1 << (n + 1)) + (-1) ** n:
                return False, f"n={n} closed form"
        return True, "n=1..64"

    yield "skipping-sum identity for the refined totals", cprime_identity

    def gf_shift():
        coeffs = series_tools.gf_coeffs(31)
        for m in range(31):
            if coeffs[m] != double_minus.count_formula(m + 1):
                return False, f"m={m}"
        return True, "31 terms, index-shifted"

    yield "generating function: coefficient m equals count(m+1)", gf_shift


def _cmd_verify(args) -> int:
    failures = 0
    total = 0
    for name, check in _verify_checks(args.max_n, args.cap):
        ok, detail = check()
        total += 1
        if not ok:
            failures += 1
        print(f"{'PASS' if ok else 'FAIL'}  {name}  [{detail}]")
    if failures:
        print(f"{failures} of {total} checks failed")
        return 1
    print(f"all {total} checks passed")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nonassoc",
        description="Count distinct parenthesization results of a (-) b = -a - b "
        "and verify the identities behind the counts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_cap(p):
        p.add_argument(
            "--cap",
            type=int,
            default=None,
            help="enumeration size cap (default: $NONASSOC_ENUM_CAP or "
            f"{tree_core.DEFAULT_ENUM_CAP})",
        )

    p = sub.add_parser("count", help="distinct results for n operations")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=["brute", "formula"], default="formula")
    add_cap(p)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("table", help="refined-count triangle rows 0..max-n")
    p.add_argument("--max-n", dest="max_n", type=int, required=True)
    p.add_argument("--format", choices=["md", "csv", "json"], default="md")
    p.add_argument("--method", choices=["brute", "formula"], default="formula")
    add_cap(p)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("verify", help="run the identity/bijection check battery")
    p.add_argument("--max-n", dest="max_n", type=int, required=True)
    add_cap(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("oeis", help="compare counts against an A000975 b-file")
    p.add_argument("--bfile", required=True)
    p.add_argument("--max-n", dest="max_n", type=int, default=16)
    p.set_defaults(func=_cmd_oeis)

    p = sub.add_parser("construct", help="build a witness tree from a sign pattern")
    p.add_argument("--seq", required=True, help="binary string, leftmost = leaf 0")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("trees", help="list all trees with n internal nodes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--render", choices=["expr", "bits", "depths"], default="expr")
    add_cap(p)
    p.set_defaults(func=_cmd_trees)

    p = sub.add_parser("admissible", help="count or list admissible sequences")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--list", action="store_true")
    p.set_defaults(func=_cmd_admissible)

    p = sub.add_parser("gf", help="series coefficients of 1/((1+x)(1-x)(1-2x))")
    p.add_argument("--terms", type=int, required=True)
    p.set_defaults(func=_cmd_gf)

    p = sub.add_parser("genop", help="distinct-result counts for a*b = z^u a + z^v b")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--u", type=int, required=True)
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--max-n", dest="max_n", type=int, required=True)
    add_cap(p)
    p.set_defaults(func=_cmd_genop)

    p = sub.add_parser("stats", help="average leaf depth over all trees, exact")
    p.add_argument("--n", type=int, required=True)
    add_cap(p)
    p.set_defaults(func=_cmd_stats)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except tree_core.EnumerationCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    console_main()
