"""Full binary trees: construction, enumeration, encoding, leaf depths.

Every tree here is full (each node has zero or two ordered children), so a
tree with n internal nodes has n+1 leaves and corresponds to exactly one way
of parenthesizing an (n+1)-term expression x0 * x1 * ... * xn.
"""

from __future__ import annotations

import math
import os
from collections.abc import Iterator

DEFAULT_ENUM_CAP = 18
ENUM_CAP_ENV = "NONASSOC_ENUM_CAP"


class EnumerationCapError(ValueError):
    """Raised when a brute-force enumeration would exceed the size cap."""


class Tree:
    """Immutable full binary tree. A leaf has no children, an internal node two."""

    __slots__ = ("left", "right", "leaves")

    def __init__(self, left: Tree | None = None, right: Tree | None = None):
        if (left is None) != (right is None):
            raise ValueError("a node has either zero or two children")
        self.left = left
        self.right = right
        self.leaves = 1 if left is None else left.leaves + right.leaves

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tree):
            return NotImplemented
        stack = [(self, other)]
        while stack:
            a, b = stack.pop()
            if a.is_leaf != b.is_leaf or a.leaves != b.leaves:
                return False
            if not a.is_leaf:
                stack.append((a.left, b.left))
                stack.append((a.right, b.right))
        return True

    def __hash__(self) -> int:
        return hash(encode_bits(self))

    def __repr__(self) -> str:
        return f"Tree({encode_bits(self)!r})"


def leaf() -> Tree:
    """The single-node tree, the unique tree with one leaf."""
    return Tree()


def wedge(s: Tree, t: Tree) -> Tree:
    """Join two trees under a new root with s on the left, t on the right.

    The result has leaf_count(s) + leaf_count(t) leaves, and its depth
    sequence is the concatenation of both inputs' depth sequences with every
    entry incremented by one.
    """
    return Tree(s, t)


def leaf_count(t: Tree) -> int:
    return t.leaves


def depth_sequence(t: Tree) -> tuple[int, ...]:
    """Leaf depths in preorder (left to right); entry i is the edge count
    from the root down to leaf i."""
    out: list[int] = []
    stack = [(t, 0)]
    while stack:
        node, depth = stack.pop()
        if node.left is None:
            out.append(depth)
        else:
            stack.append((node.right, depth + 1))
            stack.append((node.left, depth + 1))
    return tuple(out)


def catalan(n: int) -> int:
    """Number of full binary trees with n+1 leaves, binom(2n,n)/(n+1), exact."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return math.comb(2 * n, n) // (n + 1)


def enumeration_cap(cap: int | None = None) -> int:
    """Resolve the enumeration cap: explicit argument, then the
    NONASSOC_ENUM_CAP environment variable, then the default of 18."""
    if cap is not None:
        return cap
    env = os.environ.get(ENUM_CAP_ENV)
    if env is not None:
        return int(env)
    return DEFAULT_ENUM_CAP


def ensure_within_cap(n: int, cap: int | None = None) -> None:
    if n < 0:
        raise ValueError("n must be >= 0")
    limit = enumeration_cap(cap)
    if n > limit:
        raise EnumerationCapError(
            f"enumeration too large: n={n} exceeds cap {limit}"
        )


def enumerate_trees(n: int, cap: int | None = None) -> Iterator[Tree]:
    """Yield every tree with n internal nodes exactly once.

    Order is deterministic: left subtree size k = 0..n-1 ascending, and for
    each k the left subtrees cycle in this same recursive order with the
    right subtrees innermost. Refuses n above the enumeration cap.
    """
    ensure_within_cap(n, cap)
    return _gen_trees(n)


def _gen_trees(n: int) -> Iterator[Tree]:
    if n == 0:
        yield Tree()
        return
    for k in range(n):
        for left_sub in _gen_trees(k):
            for right_sub in _gen_trees(n - 1 - k):
                yield Tree(left_sub, right_sub)


def encode_bits(t: Tree) -> str:
    """Preorder code: '1' for an internal node followed by both children's
    codes, '0' for a leaf. A tree with n internal nodes yields 2n+1 bits."""
    parts: list[str] = []
    stack = [t]
    while stack:
        node = stack.pop()
        if node.left is None:
            parts.append("0")
        else:
            parts.append("1")
            stack.append(node.right)
            stack.append(node.left)
    return "".join(parts)


def decode_bits(code: str) -> Tree:
    """Inverse of encode_bits. Raises ValueError on malformed codes."""
    if not code:
        raise ValueError("malformed tree code: empty")
    pos = 0

    def parse() -> Tree:
        nonlocal pos
        if pos >= len(code):
            raise ValueError("malformed tree code: truncated")
        c = code[pos]
        pos += 1
        if c == "0":
            return Tree()
        if c == "1":
            left_sub = parse()
            return Tree(left_sub, parse())
        raise ValueError(f"malformed tree code: invalid character {c!r}")

    t = parse()
    if pos != len(code):
        raise ValueError("malformed tree code: trailing bits")
    return t


def render_expression(t: Tree, operator_symbol: str = "*") -> str:
    """Fully parenthesized infix expression over x0..xn matching the tree
    shape; the outermost parentheses are omitted."""
    counter = iter(range(t.leaves))

    def go(node: Tree, top: bool) -> str:
        if node.left is None:
            return f"x{next(counter)}"
        s = go(node.left, False) + operator_symbol + go(node.right, False)
        return s if top else f"({s})"

    return go(t, True)
