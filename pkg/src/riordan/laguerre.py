"""Construction routes for the one- and two-parameter Laguerre families.

Each family can be built several independent ways (explicit factorial-binomial
sums, the three-term recurrence, Rodrigues-style differentiation, and products
of Riordan arrays); the verification harness cross-checks the routes against
each other, so none of them is allowed to borrow from another.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .algebra import Polynomial, X, Y, exact_divide_by_power, rodrigues_step_biv, rodrigues_step_uni
from .array2 import RiordanArray
from .array3 import ColumnFamily, RiordanTriple
from .series import DEFAULT_ORDER, geom, neg_t_geom


def binomial(a: int, b: int) -> int:
    """C(a, b), zero outside 0 <= b <= a; sums below rely on the vanishing."""
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


factorial = math.factorial


@dataclass(frozen=True)
class LaguerrePolynomial:
    """A constructed family member: the polynomial itself plus the indices
    and the route that produced it, so disagreements are attributable."""

    value: Polynomial
    indices: tuple[int, int]
    route: str


def _checked(value: Polynomial, indices, route: str, ydeg: int) -> LaguerrePolynomial:
    # every route must land on integer coefficients with the exact degrees
    for _, c in value.items():
        if c.denominator != 1:
            raise ValueError(f"route {route} produced non-integer coefficient {c} at {indices}")
    if value.degree_x() != indices[0] or value.degree_y() != ydeg:
        raise ValueError(f"route {route} produced wrong degrees at {indices}: {value}")
    return LaguerrePolynomial(value=value, indices=indices, route=route)


# ---------------------------------------------------------------------------
# univariate family

def uni_explicit(n: int, alpha: int) -> LaguerrePolynomial:
    """Sum over k of (n!/k!) C(n+alpha, n-k) (-x)^k."""
    value = Polynomial()
    for k in range(n + 1):
        coeff = (factorial(n) // factorial(k)) * binomial(n + alpha, n - k)
        value = value + coeff * (-X) ** k
    return _checked(value, (n, alpha), "explicit", 0)


def uni_recurrence(n: int, alpha: int) -> LaguerrePolynomial:
    """Three-term recurrence seeded with 1 and alpha + 1 - x."""
    prev = Polynomial.constant(1)
    if n == 0:
        return _checked(prev, (n, alpha), "recurrence", 0)
    cur = (alpha + 1) - X
    for i in range(1, n):
        prev, cur = cur, ((2 * i + 1 + alpha) - X) * cur - (i * i + alpha * i) * prev
    return _checked(cur, (n, alpha), "recurrence", 0)


@lru_cache(maxsize=None)
def signed_pascal_pair(order: int, flavor: str = "ordinary") -> RiordanArray:
    """The pair (1/(1-t), -t/(1-t)) whose entries are signed binomials."""
    return RiordanArray(geom(order), neg_t_geom(order), flavor)


@lru_cache(maxsize=None)
def signed_pascal_triple(order: int, flavor: str = "ordinary") -> RiordanTriple:
    """The triple (1/(1-t), -t/(1-t), 1/(1-t)); layer k stacks k extra
    geometric factors onto the signed Pascal pair."""
    return RiordanTriple(geom(order), neg_t_geom(order), geom(order), flavor)


@lru_cache(maxsize=None)
def y_weighted_pascal_triple(order: int, flavor: str = "exponential") -> RiordanTriple:
    """The triple (1/(1-t), -ty/(1-t), 1/(1-t)) that moves the second
    variable into the array itself."""
    return RiordanTriple(geom(order), neg_t_geom(order, scale=Y), geom(order), flavor)


def uni_riordan(n: int, alpha: int, order: int | None = None) -> LaguerrePolynomial:
    """Row n of layer alpha of the exponential signed Pascal triple, applied
    to the powers of x."""
    order = max(DEFAULT_ORDER, n + 1) if order is None else order
    triple = signed_pascal_triple(order, "exponential")
    value = Polynomial()
    for j in range(n + 1):
        value = value + triple.entry(n, j, alpha) * X**j
    return _checked(value, (n, alpha), "riordan", 0)


def uni_rodrigues(n: int, alpha: int) -> LaguerrePolynomial:
    """n weight-conjugated derivative steps on x^(n+alpha), then division by
    x^alpha (which the construction guarantees, and the division verifies)."""
    p = X ** (n + alpha)
    for _ in range(n):
        p = rodrigues_step_uni(p)
    value = exact_divide_by_power(p, "x", alpha)
    return _checked(value, (n, alpha), "rodrigues", 0)


# ---------------------------------------------------------------------------
# bivariate family

def biv_explicit(n: int, m: int) -> LaguerrePolynomial:
    """Double factorial-binomial sum over powers of -x and -y."""
    value = Polynomial()
    for i in range(m + 1):
        for s in range(n + 1):
            coeff = (
                (factorial(n) // factorial(s))
                * (factorial(m) // factorial(i))
                * binomial(m + n, m - i)
                * binomial(n + i, n - s)
            )
            value = value + coeff * (-X) ** s * (-Y) ** i
    return _checked(value, (n, m), "explicit", m)


def biv_via_uni(n: int, m: int, form: str = "x") -> LaguerrePolynomial:
    """Single sum through the univariate family: the x form weights
    L_n^(i)(x) by powers of -y, the y form is the mirror image."""
    if form not in ("x", "y"):
        raise ValueError(f"form must be 'x' or 'y', got {form!r}")
    value = Polynomial()
    if form == "x":
        for i in range(m + 1):
            coeff = (factorial(m) // factorial(i)) * binomial(m + n, m - i)
            value = value + coeff * uni_explicit(n, i).value * (-Y) ** i
    else:
        for i in range(n + 1):
            coeff = (factorial(n) // factorial(i)) * binomial(n + m, n - i)
            value = value + coeff * uni_explicit(m, i).value.substitute(x=Y) * (-X) ** i
    return _checked(value, (n, m), "via-univariate", m)


def biv_rodrigues(n: int, m: int) -> LaguerrePolynomial:
    """n+m two-variable weight-conjugated derivative steps on x^n y^m."""
    p = X**n * Y**m
    for _ in range(n + m):
        p = rodrigues_step_biv(p)
    return _checked(p, (n, m), "rodrigues", m)


def biv_riordan_table(max_n: int, max_m: int, order: int | None = None) -> list:
    """The full table via two bullet products: first the exponential signed
    Pascal triple turns the powers of x into the univariate family, then the
    y-weighted triple consumes the transposed table.  The bullet output keeps
    the family in its columns, so the result is transposed once more to put
    entry (n, m) at row n."""
    order = max(DEFAULT_ORDER, max_n + 1, max_m + 1) if order is None else order
    if order < max(max_n, max_m) + 1:
        raise ValueError(f"truncation order {order} too small for table {max_n} x {max_m}")
    pascal = signed_pascal_triple(order, "exponential")
    powers = ColumnFamily.constant([X**j for j in range(max_n + 1)], max_m + 1)
    uni_table = pascal.bullet(powers, rows=max_n + 1, cols=max_m + 1)
    weighted = y_weighted_pascal_triple(order)
    product = weighted.bullet(ColumnFamily(uni_table), rows=max_m + 1, cols=max_n + 1)
    return [
        [_checked(product[m][n], (n, m), "riordan", m) for m in range(max_m + 1)]
        for n in range(max_n + 1)
    ]
