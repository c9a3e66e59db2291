"""Nonassociativity measurement for linear operations a * b = za + wb whose
coefficients are k-th roots of unity.

With z = zeta^u and w = zeta^v for a primitive k-th root of unity zeta, every
parenthesization of x0 * ... * xn expands to sum_i zeta^(e_i) x_i, where
e_i = u*(left steps) + v*(right steps) along the root-to-leaf path, mod k.
Two parenthesizations give the same function over an infinite field exactly
when their exponent vectors agree, so counting distinct results reduces to
deduplicating exponent vectors; no complex arithmetic is ever needed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import tree_core
from .tree_core import Tree


@dataclass(frozen=True)
class LinearOp:
    """a * b = zeta^u * a + zeta^v * b with zeta a primitive k-th root of
    unity; exponents are normalized into [0, k)."""

    k: int
    u: int
    v: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be >= 1")
        object.__setattr__(self, "u", self.u % self.k)
        object.__setattr__(self, "v", self.v % self.k)


DOUBLE_MINUS = LinearOp(2, 1, 1)


def coeff_vector(op: LinearOp, t: Tree) -> tuple[int, ...]:
    """Exponent of xi's coefficient for each leaf i in preorder."""
    out: list[int] = []
    stack = [(t, 0, 0)]
    while stack:
        node, left_steps, right_steps = stack.pop()
        if node.is_leaf:
            out.append((op.u * left_steps + op.v * right_steps) % op.k)
        else:
            stack.append((node.right, left_steps, right_steps + 1))
            stack.append((node.left, left_steps + 1, right_steps))
    return tuple(out)


def _coeff_levels(op: LinearOp, n: int) -> list[np.ndarray]:
    # row i of level m = exponent vector of the i-th tree of enumerate_trees(m)
    levels = [np.zeros((1, 1), dtype=np.int64)]
    for m in range(1, n + 1):
        parts = []
        for split in range(m):
            left = (levels[split] + op.u) % op.k
            right = (levels[m - 1 - split] + op.v) % op.k
            parts.append(
                np.hstack(
                    [
                        np.repeat(left, right.shape[0], axis=0),
                        np.tile(right, (left.shape[0], 1)),
                    ]
                )
            )
        levels.append(np.vstack(parts))
    return levels


def count_distinct_generic(op: LinearOp, n: int, cap: int | None = None) -> int:
    """Number of distinct results over all trees with n internal nodes,
    by deduplicating one exponent vector per tree."""
    tree_core.ensure_within_cap(n, cap)
    vectors = _coeff_levels(op, n)[n]
    return int(np.unique(vectors, axis=0).shape[0])


def nonassociativity_depth(op: LinearOp, max_n: int, cap: int | None = None) -> int | None:
    """Smallest n+1 with strictly fewer distinct results than trees,
    scanning n = 1..max_n; None when no drop occurs in range."""
    tree_core.ensure_within_cap(max_n, cap)
    for n in range(1, max_n + 1):
        if count_distinct_generic(op, n, cap) < tree_core.catalan(n):
            return n + 1
    return None
