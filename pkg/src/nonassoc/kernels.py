"""Packed-bit kernels behind the brute-force sign-pattern counters.

Each tree with m internal nodes contributes one sign pattern: bit i gives the
parity of leaf i's depth. Patterns are packed into int64 masks with leaf 0 at
the high bit, and built size by size: a tree splits uniquely at the root into
subtrees with k and m-1-k internal nodes, and putting a subtree under a new
root flips the parity of every leaf beneath it. Level m therefore holds
exactly catalan(m) masks, one per tree, in the same order enumerate_trees
yields them.

Two interchangeable backends run the combine loops:

* ``numba`` - @njit-compiled loops, the default when numba imports
* ``numpy`` - pure-numpy broadcasting fallback

Select one explicitly with the NONASSOC_BACKEND environment variable or the
``backend`` argument. benchmarks/bench_backends.py times both. Memory for
level m is 8 * catalan(m) bytes, so counts much past n=16 get expensive.
"""

from __future__ import annotations

import os

import numpy as np

from .tree_core import catalan

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is a declared dependency
    njit = None

BACKEND_ENV = "NONASSOC_BACKEND"


def available_backends() -> tuple[str, ...]:
    return ("numba", "numpy") if njit is not None else ("numpy",)


def active_backend(override: str | None = None) -> str:
    """Backend that will run: ``override``, else $NONASSOC_BACKEND, else
    numba when importable and numpy otherwise."""
    choice = override or os.environ.get(BACKEND_ENV)
    if not choice:
        choice = "numba" if njit is not None else "numpy"
    choice = choice.lower()
    if choice not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {choice!r}: expected 'numba' or 'numpy'")
    if choice == "numba" and njit is None:
        raise RuntimeError("numba backend requested but numba is not installed")
    return choice


def _levels_numpy(n: int) -> list[np.ndarray]:
    levels = [np.zeros(1, dtype=np.int64)]
    for m in range(1, n + 1):
        parts = []
        for k in range(m):
            left, right = levels[k], levels[m - 1 - k]
            left_width, right_width = k + 1, m - k
            flipped_left = (~left) & ((1 << left_width) - 1)
            flipped_right = (~right) & ((1 << right_width) - 1)
            parts.append(
                ((flipped_left[:, None] << right_width) | flipped_right[None, :]).ravel()
            )
        levels.append(np.concatenate(parts))
    return levels


if njit is not None:

    @njit(cache=True)
    def _fill_pairs(out, start, left, right, left_width, right_width):
        left_mask = (1 << left_width) - 1
        right_mask = (1 << right_width) - 1
        pos = start
        for i in range(left.shape[0]):
            hi = ((~left[i]) & left_mask) << right_width
            for j in range(right.shape[0]):
                out[pos] = hi | ((~right[j]) & right_mask)
                pos += 1
        return pos


def _levels_numba(n: int) -> list[np.ndarray]:
    levels = [np.zeros(1, dtype=np.int64)]
    for m in range(1, n + 1):
        out = np.empty(catalan(m), dtype=np.int64)
        pos = 0
        for k in range(m):
            pos = _fill_pairs(out, pos, levels[k], levels[m - 1 - k], k + 1, m - k)
        levels.append(out)
    return levels


def parity_mask_levels(n: int, backend: str | None = None) -> list[np.ndarray]:
    """Per-size mask arrays for sizes 0..n; levels[m][i] is the packed sign
    pattern of the i-th tree of enumerate_trees(m)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if active_backend(backend) == "numba":
        return _levels_numba(n)
    return _levels_numpy(n)


def tree_parity_masks(n: int, backend: str | None = None) -> np.ndarray:
    """One packed sign pattern per tree with n internal nodes, in
    enumeration order (catalan(n) entries, duplicates included)."""
    return parity_mask_levels(n, backend)[n]


def distinct_parity_masks(n: int, backend: str | None = None) -> np.ndarray:
    """Sorted distinct packed sign patterns over all trees with n internal
    nodes, deduplicated through a 2^(n+1)-entry bitmap."""
    masks = tree_parity_masks(n, backend)
    seen = np.zeros(1 << (n + 1), dtype=bool)
    seen[masks] = True
    return np.flatnonzero(seen)
