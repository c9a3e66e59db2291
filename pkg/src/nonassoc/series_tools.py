"""Exact series and roots-of-unity machinery: skipping sums of binomial
coefficients over residue classes mod 3, the ordinary generating function of
the counts, and the brute-force average leaf depth.

All arithmetic is exact: integers, Fractions, and the ring Z[w] with w a
primitive cube root of unity (w^2 = -1 - w). Divisibility assertions stand
in for floating-point tolerances throughout.
"""

from __future__ import annotations

import math
from fractions import Fraction

from . import double_minus, tree_core


class EisensteinInt:
    """a + b*w with integer a, b and w a primitive cube root of unity."""

    __slots__ = ("a", "b")

    def __init__(self, a: int, b: int = 0):
        self.a = int(a)
        self.b = int(b)

    @classmethod
    def omega_power(cls, e: int) -> EisensteinInt:
        """w^e reduced via w^3 = 1; w^2 = -1 - w keeps coordinates integral."""
        return (cls(1, 0), cls(0, 1), cls(-1, -1))[e % 3]

    @property
    def is_rational_integer(self) -> bool:
        return self.b == 0

    def __add__(self, other: int | EisensteinInt) -> EisensteinInt:
        if isinstance(other, int):
            other = EisensteinInt(other)
        if isinstance(other, EisensteinInt):
            return EisensteinInt(self.a + other.a, self.b + other.b)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> EisensteinInt:
        return EisensteinInt(-self.a, -self.b)

    def __sub__(self, other: int | EisensteinInt) -> EisensteinInt:
        if isinstance(other, int):
            other = EisensteinInt(other)
        if isinstance(other, EisensteinInt):
            return EisensteinInt(self.a - other.a, self.b - other.b)
        return NotImplemented

    def __rsub__(self, other: int | EisensteinInt) -> EisensteinInt:
        return (-self) + other

    def __mul__(self, other: int | EisensteinInt) -> EisensteinInt:
        if isinstance(other, int):
            return EisensteinInt(self.a * other, self.b * other)
        if isinstance(other, EisensteinInt):
            # (a + bw)(c + dw) with w^2 = -1 - w
            return EisensteinInt(
                self.a * other.a - self.b * other.b,
                self.a * other.b + self.b * other.a - self.b * other.b,
            )
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> EisensteinInt:
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = EisensteinInt(1)
        base = self
        e = exponent
        while e > 0:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.b == 0 and self.a == other
        if isinstance(other, EisensteinInt):
            return self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __repr__(self) -> str:
        return f"EisensteinInt({self.a}, {self.b})"

    def __str__(self) -> str:
        return f"{self.a}{self.b:+}w"


def skipping_sum_direct(n: int, k: int) -> int:
    """Sum of binom(n, i) over 0 <= i <= n with i = k (mod 3), term by term."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return sum(math.comb(n, i) for i in range(k % 3, n + 1, 3))


def skipping_sum_closed(n: int, k: int) -> int:
    """The same skipping sum via (2^n + w^(-k)(1+w)^n + w^k(1+w^2)^n)/3,
    evaluated exactly in Z[w] using 1+w = -w^2 and 1+w^2 = -w. The total must
    come out a rational integer divisible by 3; anything else is a bug."""
    if n < 0:
        raise ValueError("n must be >= 0")
    one_plus_w = -EisensteinInt.omega_power(2)
    one_plus_w_sq = -EisensteinInt.omega_power(1)
    total = (
        EisensteinInt(1 << n)
        + EisensteinInt.omega_power(-k) * one_plus_w**n
        + EisensteinInt.omega_power(k) * one_plus_w_sq**n
    )
    assert total.is_rational_integer
    assert total.a % 3 == 0
    return total.a // 3


def cprime(n: int) -> int:
    """Skipping sum of binom(n+1, r) over r = 1-n (mod 3), which equals the
    distinct-result count for n odd and one more than it for n even, i.e.
    (2^(n+1) + (-1)^n)/3."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return skipping_sum_direct(n + 1, (1 - n) % 3)


def gf_coeffs(terms: int) -> list[int]:
    """First ``terms`` power-series coefficients of 1/((1+x)(1-x)(1-2x)),
    from the denominator recurrence c_m = 2c_{m-1} + c_{m-2} - 2c_{m-3}.

    Note the index shift: c_m equals the distinct-result count for m+1
    operands (1, 2, 5, 10, 21, ...), not the count for m, whose own series
    starts 1, 1, 2, 5, ... and equals 1 + x/((1+x)(1-x)(1-2x)).
    """
    if terms < 1:
        raise ValueError("terms must be >= 1")
    coeffs: list[int] = []
    for m in range(terms):
        c = 1 if m == 0 else 2 * coeffs[m - 1]
        if m >= 2:
            c += coeffs[m - 2]
        if m >= 3:
            c -= 2 * coeffs[m - 3]
        coeffs.append(c)
    return coeffs


def gf_bivariate_table(max_n: int) -> double_minus.CountTable:
    """Coefficient table of sum_n sum_r count(n, r) x^n y^r up to x^max_n;
    identical to the refined-count triangle."""
    return double_minus.count_table(max_n, method="formula")


def average_leaf_depth(n: int, cap: int | None = None) -> Fraction:
    """Average leaf depth over all trees with n internal nodes, as an exact
    reduced fraction, by brute-force enumeration."""
    tree_core.ensure_within_cap(n, cap)
    total = 0
    for t in tree_core.enumerate_trees(n, cap):
        total += sum(tree_core.depth_sequence(t))
    return Fraction(total, (n + 1) * tree_core.catalan(n))
