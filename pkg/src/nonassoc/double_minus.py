"""Counting distinct results of parenthesizing x0 (-) x1 (-) ... (-) xn,
where a (-) b = -a - b.

Expanding any parenthesization leaves a signed sum: xi carries a minus sign
exactly when leaf i of the corresponding tree has odd depth. The number of
distinct sign patterns is counted three ways here: brute force over all
trees, a closed-form binomial triangle refined by the number of plus signs,
and the closed formulas/recurrences of OEIS A000975.
"""

from __future__ import annotations

import json
import math

import numpy as np

from . import kernels, tree_core
from .tree_core import Tree

CountRow = dict[int, int]
CountTable = dict[int, CountRow]


def sign_parity(t: Tree) -> tuple[int, ...]:
    """Sign pattern of a tree: bit i is the depth of leaf i mod 2,
    so 0 means xi keeps a plus sign."""
    return tuple(d & 1 for d in tree_core.depth_sequence(t))


def pack_parity(bits: tuple[int, ...]) -> int:
    """Pack a sign pattern into an int, leaf 0 at the high bit."""
    value = 0
    for b in bits:
        value = (value << 1) | b
    return value


def unpack_parity(mask: int, length: int) -> tuple[int, ...]:
    return tuple((mask >> (length - 1 - i)) & 1 for i in range(length))


def count_distinct_bruteforce(n: int, cap: int | None = None) -> int:
    """Distinct sign patterns over all trees with n internal nodes, found by
    deduplicating one pattern per enumerated tree."""
    tree_core.ensure_within_cap(n, cap)
    return int(kernels.distinct_parity_masks(n).shape[0])


def refined_counts_bruteforce(n: int, cap: int | None = None) -> CountRow:
    """Brute-force row of the (n, r) triangle: for each r, the number of
    distinct sign patterns with exactly r plus signs (zeros). Only nonzero
    counts appear in the returned mapping."""
    tree_core.ensure_within_cap(n, cap)
    masks = kernels.distinct_parity_masks(n)
    minus_counts, multiplicities = np.unique(np.bitwise_count(masks), return_counts=True)
    row = {n + 1 - int(m): int(c) for m, c in zip(minus_counts, multiplicities)}
    return dict(sorted(row.items()))


def refined_count_formula(n: int, r: int) -> int:
    """Closed form for the number of distinct results with exactly r plus
    signs: binom(n+1, r) when n+r = 1 (mod 3), one less on the diagonal
    n = 2r-2, and zero otherwise. Defined for n >= 1."""
    if n < 1:
        raise ValueError("n must be >= 1; the n=0 row is not covered by the formula")
    if r < 0 or r > n + 1:
        raise ValueError("r out of range")
    if (n + r) % 3 != 1:
        return 0
    value = math.comb(n + 1, r)
    if n == 2 * r - 2:
        value -= 1
    return value


def count_formula(n: int) -> int:
    """Closed form floor(2^(n+1)/3) for n >= 1; the empty product gives 1 at
    n=0, where the OEIS offset convention differs."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return 1
    return (1 << (n + 1)) // 3


A000975_METHODS = (
    "floor",
    "sixth",
    "parity_recurrence",
    "complement_recurrence",
    "step2_recurrence",
    "alternating_binary",
)


def a000975(n: int, method: str = "floor") -> int:
    """A000975 (1, 2, 5, 10, 21, 42, 85, ...) by any of six equivalent
    characterizations; n starts at 1."""
    if n < 1:
        raise ValueError("n must be >= 1 (conventions for the 0th term differ)")
    if method == "floor":
        return (1 << (n + 1)) // 3
    if method == "sixth":
        numerator = (1 << (n + 2)) - 3 - (-1) ** n
        assert numerator % 6 == 0
        return numerator // 6
    if method == "parity_recurrence":
        value = 1
        for m in range(1, n):
            value = 2 * value + (1 if m % 2 == 0 else 0)
        return value
    if method == "complement_recurrence":
        value = 1
        for m in range(2, n + 1):
            value = (1 << m) - 1 - value
        return value
    if method == "step2_recurrence":
        if n <= 2:
            return n
        prev2, prev1 = 1, 2
        for m in range(3, n + 1):
            prev2, prev1 = prev1, prev2 + (1 << (m - 1))
        return prev1
    if method == "alternating_binary":
        return int("10" * (n // 2) + "1" * (n % 2), 2)
    raise ValueError(f"unknown method {method!r}")


def count_table(max_n: int, method: str = "formula", cap: int | None = None) -> CountTable:
    """Rows 0..max_n of the refined-count triangle, keyed n -> r -> count
    with zero cells omitted. ``method`` is "formula" or "brute"."""
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    table: CountTable = {}
    for n in range(max_n + 1):
        if method == "brute":
            table[n] = refined_counts_bruteforce(n, cap)
        elif method == "formula":
            if n == 0:
                table[n] = {1: 1}
            else:
                row = {}
                for r in range(n + 2):
                    value = refined_count_formula(n, r)
                    if value:
                        row[r] = value
                table[n] = row
        else:
            raise ValueError(f"unknown method {method!r}")
    return table


def table_to_csv(table: CountTable) -> str:
    """``n,r,count`` lines for every nonzero cell, ordered by n then r."""
    lines = []
    for n in sorted(table):
        for r in sorted(table[n]):
            lines.append(f"{n},{r},{table[n][r]}")
    return "\n".join(lines) + "\n"


def table_to_markdown(table: CountTable) -> str:
    """Markdown triangle with one row per n and blank cells for zeros."""
    max_n = max(table)
    columns = range(max_n + 2)
    lines = ["| n\\r | " + " | ".join(str(r) for r in columns) + " |"]
    lines.append("| --- |" + " --- |" * len(columns))
    for n in sorted(table):
        cells = [str(table[n].get(r, "") or "") for r in columns]
        lines.append(f"| {n} | " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"


def table_to_json(table: CountTable) -> str:
    """Nested map {n: {r: count}} with zero cells omitted."""
    nested = {
        str(n): {str(r): table[n][r] for r in sorted(table[n])}
        for n in sorted(table)
    }
    return json.dumps(nested, indent=2) + "\n"
