"""Admissible binary sequences and the constructive sequence-to-tree map.

A sequence (d0, ..., dn) over {0,1} is admissible when it is non-alternating
(some adjacent pair is equal; vacuous for n=0) and n + #zeros = 1 (mod 3).
These are exactly the sign patterns realizable by trees, so every admissible
sequence can be turned back into a witness tree by repeatedly contracting an
adjacent equal pair and expanding the matching leaf on the way out.
"""

from __future__ import annotations

from collections.abc import Iterator

from . import tree_core
from .tree_core import EnumerationCapError, Tree

ADMISSIBLE_SCAN_CAP = 30

Bits = tuple[int, ...]


def is_admissible(seq) -> bool:
    """True iff the sequence is non-alternating and n + #zeros = 1 (mod 3)."""
    bits = tuple(seq)
    if not bits:
        raise ValueError("sequence must be nonempty")
    if any(b not in (0, 1) for b in bits):
        raise ValueError("sequence entries must be 0 or 1")
    n = len(bits) - 1
    non_alternating = n == 0 or any(bits[j] == bits[j + 1] for j in range(n))
    return non_alternating and (n + bits.count(0)) % 3 == 1


def enumerate_admissible(n: int, cap: int = ADMISSIBLE_SCAN_CAP) -> Iterator[Bits]:
    """All admissible sequences of length n+1 in lexicographic order, by a
    full scan of {0,1}^(n+1). The scan is the oracle, so no shortcuts."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > cap:
        raise EnumerationCapError(
            f"admissible enumeration too large: n={n} exceeds scan cap {cap}"
        )
    return _scan(n)


def _scan(n: int) -> Iterator[Bits]:
    length = n + 1
    for value in range(1 << length):
        bits = tuple((value >> (length - 1 - i)) & 1 for i in range(length))
        if is_admissible(bits):
            yield bits


def contract(seq) -> tuple[Bits, int]:
    """Shrink an admissible sequence of length >= 2 by one entry.

    The leftmost maximal run of equal symbols with length >= 2 is located;
    two of its entries are replaced by a single copy of the opposite symbol,
    placed next to an existing copy of that symbol so the result stays
    non-alternating: the first two entries of the run if it is preceded by
    the opposite symbol, else its last two if followed, else (constant
    sequence) the first two. Returns the shorter sequence, which is again
    admissible, and the index where the replacement symbol sits.
    """
    bits = tuple(seq)
    if not is_admissible(bits):
        raise ValueError(f"not admissible: {bits}")
    if len(bits) < 2:
        raise ValueError("cannot contract a length-1 sequence")

    run_start = run_end = -1
    i = 0
    while i < len(bits):
        j = i
        while j + 1 < len(bits) and bits[j + 1] == bits[i]:
            j += 1
        if j > i:
            run_start, run_end = i, j
            break
        i = j + 1
    # non-alternating guarantees the run exists

    opposite = 1 - bits[run_start]
    if run_start > 0:
        at = run_start
    elif run_end < len(bits) - 1:
        at = run_end - 1
    else:
        at = 0
    shorter = bits[:at] + (opposite,) + bits[at + 2:]
    return shorter, at


def admissible_to_tree(seq) -> Tree:
    """A tree whose sign pattern equals the given admissible sequence.

    Contract down to (0), start from the single leaf, and undo each
    contraction by replacing leaf ``at`` with an internal node carrying two
    leaves; that expansion flips the parity under the new node, matching the
    pair the contraction removed.
    """
    bits = tuple(seq)
    if not is_admissible(bits):
        raise ValueError(f"not admissible: {bits}")
    if len(bits) == 1:
        return tree_core.leaf()
    shorter, at = contract(bits)
    return _expand_leaf(admissible_to_tree(shorter), at)


def _expand_leaf(t: Tree, i: int) -> Tree:
    if t.is_leaf:
        return tree_core.wedge(tree_core.leaf(), tree_core.leaf())
    left_leaves = t.left.leaves
    if i < left_leaves:
        return tree_core.wedge(_expand_leaf(t.left, i), t.right)
    return tree_core.wedge(t.left, _expand_leaf(t.right, i - left_leaves))
