"""Exact scalar and polynomial arithmetic.

Everything downstream computes over arbitrary-precision rationals; there is
no floating-point path anywhere.  Polynomials live in the fixed variable set
{x, y} (univariate values simply never touch y), which keeps substitution and
rendering simple.
"""

from __future__ import annotations

from fractions import Fraction

# The scalar ring: arbitrary-precision, always normalized (gcd 1, positive
# denominator), courtesy of the standard library.
Rational = Fraction

_I64_MAX = 2**63 - 1


class NotDivisibleError(ValueError):
    """Raised when a requested monomial quotient does not exist in the ring."""


def _coerce(value) -> Fraction:
    if isinstance(value, float):
        raise TypeError(f"floats are not allowed in exact arithmetic: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"cannot use {type(value).__name__} as a coefficient")


class Polynomial:
    """Sparse polynomial in x and y over exact rationals.

    Terms map exponent pairs (dx, dy) to nonzero coefficients; the zero
    polynomial stores nothing.  Instances are immutable and hashable, and
    arithmetic promotes ints and Fractions on either side:

        >>> str(2 - 2*X - 2*Y + X*Y)
        '2 - 2*x - 2*y + x*y'
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        data = {}
        for key, value in (terms or {}).items():
            dx, dy = key
            if not isinstance(dx, int) or not isinstance(dy, int) or dx < 0 or dy < 0:
                raise ValueError(f"bad exponent pair {key!r}")
            value = _coerce(value)
            if value:
                data[(dx, dy)] = value
        self._terms = data

    @classmethod
    def constant(cls, value) -> "Polynomial":
        return cls({(0, 0): value})

    def items(self):
        """Terms in graded-lexicographic order (degree ascending, x before y)."""
        return tuple(sorted(self._terms.items(), key=lambda t: (t[0][0] + t[0][1], t[0][1])))

    def coefficient(self, dx: int, dy: int) -> Fraction:
        return self._terms.get((dx, dy), Fraction(0))

    def constant_term(self) -> Fraction:
        return self._terms.get((0, 0), Fraction(0))

    def is_constant(self) -> bool:
        return all(k == (0, 0) for k in self._terms)

    def total_degree(self) -> int:
        return max((dx + dy for dx, dy in self._terms), default=0)

    def degree_x(self) -> int:
        return max((dx for dx, _ in self._terms), default=0)

    def degree_y(self) -> int:
        return max((dy for _, dy in self._terms), default=0)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __neg__(self):
        return Polynomial({k: -c for k, c in self._terms.items()})

    def __add__(self, other):
        other = as_polynomial(other)
        merged = dict(self._terms)
        for k, c in other._terms.items():
            merged[k] = merged.get(k, Fraction(0)) + c
        return Polynomial(merged)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-as_polynomial(other))

    def __rsub__(self, other):
        return as_polynomial(other) + (-self)

    def __mul__(self, other):
        other = as_polynomial(other)
        prod: dict = {}
        for (ax, ay), ac in self._terms.items():
            for (bx, by), bc in other._terms.items():
                key = (ax + bx, ay + by)
                prod[key] = prod.get(key, Fraction(0)) + ac * bc
        return Polynomial(prod)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        scalar = _coerce(scalar)
        if not scalar:
            raise ZeroDivisionError("polynomial division by zero scalar")
        return Polynomial({k: c / scalar for k, c in self._terms.items()})

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"polynomial exponent must be a non-negative integer: {exponent!r}")
        result = Polynomial.constant(1)
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def diff(self, var: str) -> "Polynomial":
        """Exact partial derivative with respect to 'x' or 'y'."""
        if var not in ("x", "y"):
            raise ValueError(f"unknown variable {var!r}")
        out = {}
        for (dx, dy), c in self._terms.items():
            if var == "x" and dx:
                out[(dx - 1, dy)] = c * dx
            elif var == "y" and dy:
                out[(dx, dy - 1)] = c * dy
        return Polynomial(out)

    def substitute(self, x=None, y=None) -> "Polynomial":
        """Evaluate at x=..., y=... (ints, Fractions, or Polynomials); omitted
        variables are left in place."""
        at_x = X if x is None else as_polynomial(x)
        at_y = Y if y is None else as_polynomial(y)
        xpow = {0: Polynomial.constant(1)}
        ypow = {0: Polynomial.constant(1)}
        total = Polynomial()
        for (dx, dy), c in self._terms.items():
            for power, cache, base in ((dx, xpow, at_x), (dy, ypow, at_y)):
                if power not in cache:
                    high = max(cache)
                    acc = cache[high]
                    for e in range(high + 1, power + 1):
                        acc = acc * base
                        cache[e] = acc
            total = total + xpow[dx] * ypow[dy] * c
        return total

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for (dx, dy), c in self.items():
            mono = "*".join(
                s
                for s in (_power_str("x", dx), _power_str("y", dy))
                if s
            )
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(parts)

    __repr__ = __str__

    def latex(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (dx, dy), c in self.items():
            mono = _latex_power("x", dx) + _latex_power("y", dy)
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            else:
                coeff = str(mag) if mag.denominator == 1 else rf"\frac{{{mag.numerator}}}{{{mag.denominator}}}"
                body = coeff + mono
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(parts)


def _power_str(var: str, exp: int) -> str:
    if exp == 0:
        return ""
    if exp == 1:
        return var
    return f"{var}^{exp}"


def _latex_power(var: str, exp: int) -> str:
    if exp == 0:
        return ""
    if exp == 1:
        return var
    return f"{var}^{{{exp}}}"


def as_polynomial(value) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    return Polynomial.constant(_coerce(value))


X = Polynomial({(1, 0): 1})
Y = Polynomial({(0, 1): 1})


def rodrigues_step_uni(p: Polynomial) -> Polynomial:
    """One weight-conjugated derivative step for the weight e^(-x): q -> q' - q."""
    p = as_polynomial(p)
    if p.degree_y():
        raise ValueError("univariate step requires a polynomial in x alone")
    return p.diff("x") - p


def rodrigues_step_biv(p: Polynomial) -> Polynomial:
    """One step for the weight e^(-(x+y)/2) under d/dx + d/dy: p -> p_x + p_y - p.

    Each variable's weight factor contributes -p/2, so the conjugation costs a
    single -p in total.
    """
    p = as_polynomial(p)
    return p.diff("x") + p.diff("y") - p


def exact_divide_by_power(p: Polynomial, var: str, k: int) -> Polynomial:
    """Divide p by var**k, which must be exact term by term."""
    if var not in ("x", "y"):
        raise ValueError(f"unknown variable {var!r}")
    if not isinstance(k, int) or k < 0:
        raise ValueError(f"power must be a non-negative integer: {k!r}")
    p = as_polynomial(p)
    out = {}
    for (dx, dy), c in p._terms.items():
        exp = dx if var == "x" else dy
        if exp < k:
            raise NotDivisibleError(f"term {var}^{exp} is not divisible by {var}^{k}")
        out[(dx - k, dy) if var == "x" else (dx, dy - k)] = c
    return Polynomial(out)


def scalar_str(value) -> str:
    """Plain-text rendering shared by matrix and report output."""
    if isinstance(value, Polynomial) and value.is_constant():
        value = value.constant_term()
    if isinstance(value, Fraction) and value.denominator == 1:
        return str(value.numerator)
    return str(value)


def scalar_json(value):
    """JSON value for an exact scalar: ints while they fit 64 bits, else strings."""
    if isinstance(value, Polynomial):
        if not value.is_constant():
            return str(value)
        value = value.constant_term()
    if isinstance(value, Fraction):
        if value.denominator != 1:
            return f"{value.numerator}/{value.denominator}"
        value = value.numerator
    return value if abs(value) <= _I64_MAX else str(value)


def scalar_latex(value) -> str:
    if isinstance(value, Polynomial) and value.is_constant():
        value = value.constant_term()
    if isinstance(value, Polynomial):
        return value.latex()
    value = _coerce(value)
    if value.denominator == 1:
        return str(value.numerator)
    sign = "-" if value < 0 else ""
    return rf"{sign}\frac{{{abs(value.numerator)}}}{{{value.denominator}}}"
