"""The identity harness: every generating-function identity, product formula,
orthogonality relation, and summation identity the library implements, as an
executable exact check.

Every check returns a CheckReport; a failing report always carries a witness
naming the first mismatching index together with both values, so a red run
localizes the defect.  There are no tolerances anywhere.
"""

from __future__ import annotations

import json
import random
from contextlib import contextmanager, nullcontext
from dataclasses import dataclass, field
from fractions import Fraction

from . import laguerre
from .algebra import Polynomial, X, Y, scalar_str
from .array2 import RiordanArray
from .laguerre import (
    LaguerrePolynomial,
    binomial,
    biv_explicit,
    biv_riordan_table,
    biv_rodrigues,
    biv_via_uni,
    factorial,
    signed_pascal_pair,
    signed_pascal_triple,
    uni_recurrence,
    uni_riordan,
    uni_rodrigues,
    y_weighted_pascal_triple,
)
from .series import BiSeries, Series, geom, neg_t_geom, t_series


@dataclass(frozen=True)
class Witness:
    index: str
    lhs: str
    rhs: str


@dataclass
class CheckReport:
    name: str
    params: dict
    passed: bool
    witness: Witness | None = None
    details: dict = field(default_factory=dict)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        line = f"{status} {self.name}" + (f" [{params}]" if params else "")
        if self.witness is not None:
            line += f" @ {self.witness.index}: lhs={self.witness.lhs} rhs={self.witness.rhs}"
        if self.details:
            line += " " + " ".join(f"{k}={v}" for k, v in self.details.items())
        return line

    def to_json(self) -> str:
        payload = {"name": self.name, "params": self.params, "passed": self.passed}
        if self.witness is not None:
            payload["witness"] = {
                "index": self.witness.index,
                "lhs": self.witness.lhs,
                "rhs": self.witness.rhs,
            }
        if self.details:
            payload["details"] = self.details
        return json.dumps(payload)


def _report(name: str, params: dict, mismatches: list, details: dict | None = None) -> CheckReport:
    witness = None
    if mismatches:
        index, lhs, rhs = mismatches[0]
        witness = Witness(index=str(index), lhs=scalar_str(lhs), rhs=scalar_str(rhs))
    return CheckReport(
        name=name,
        params=params,
        passed=not mismatches,
        witness=witness,
        details=details or {},
    )


# ---------------------------------------------------------------------------
# deliberate fault injection

def _sign_flipped_explicit(n: int, alpha: int) -> LaguerrePolynomial:
    # the explicit sum with (+x)^k instead of (-x)^k: a deliberate bug kept
    # around to prove the harness can fail and localize
    value = Polynomial()
    for k in range(n + 1):
        coeff = (factorial(n) // factorial(k)) * binomial(n + alpha, n - k)
        value = value + coeff * X**k
    return LaguerrePolynomial(value=value, indices=(n, alpha), route="explicit")


@contextmanager
def sign_flip_mutation():
    """Swap the explicit univariate constructor for a sign-flipped one, so
    every consumer (including the mixed-route bivariate sum) inherits the
    fault."""
    original = laguerre.uni_explicit
    laguerre.uni_explicit = _sign_flipped_explicit
    try:
        yield
    finally:
        laguerre.uni_explicit = original


# ---------------------------------------------------------------------------
# golden matrices and polynomials, frozen as literals

_SIGNED_PASCAL_5 = [
    [1, 0, 0, 0, 0],
    [1, -1, 0, 0, 0],
    [1, -2, 1, 0, 0],
    [1, -3, 3, -1, 0],
    [1, -4, 6, -4, 1],
]

_RATIONAL_LAGUERRE_COLUMN = [
    Polynomial.constant(1),
    1 - X,
    (2 - 4 * X + X**2) / 2,
    (6 - 18 * X + 9 * X**2 - X**3) / 6,
    (24 - 96 * X + 72 * X**2 - 16 * X**3 + X**4) / 24,
]

_INTEGER_LAGUERRE_4 = [
    [1, 0, 0, 0],
    [1, -1, 0, 0],
    [2, -4, 1, 0],
    [6, -18, 9, -1],
]

_CUBE_LAYERS_5 = {
    0: [
        [1, 0, 0, 0, 0],
        [1, -1, 0, 0, 0],
        [2, -4, 1, 0, 0],
        [6, -18, 9, -1, 0],
        [24, -96, 72, -16, 1],
    ],
    1: [
        [1, 0, 0, 0, 0],
        [2, -1, 0, 0, 0],
        [6, -6, 1, 0, 0],
        [24, -36, 12, -1, 0],
        [120, -240, 120, -20, 1],
    ],
    2: [
        [1, 0, 0, 0, 0],
        [3, -1, 0, 0, 0],
        [12, -8, 1, 0, 0],
        [60, -60, 15, -1, 0],
        [360, -480, 180, -24, 1],
    ],
}

_BIV_GOLDENS = {
    (1, 1): 2 - 2 * X - 2 * Y + X * Y,
    (2, 1): 6 - 6 * Y - 12 * X + 6 * X * Y + 3 * X**2 - X**2 * Y,
    (1, 2): 6 - 6 * X - 12 * Y + 6 * X * Y + 3 * Y**2 - X * Y**2,
    (2, 2): 24 - 48 * X + 12 * X**2 - 48 * Y + 48 * X * Y - 8 * X**2 * Y
    + 12 * Y**2 - 8 * X * Y**2 + X**2 * Y**2,
}

_LAYER2_Y_MATRIX = [
    [1, 0, 0, 0, 0],
    [3, -Y, 0, 0, 0],
    [12, -8 * Y, Y**2, 0, 0],
    [60, -60 * Y, 15 * Y**2, -(Y**3), 0],
    [360, -480 * Y, 180 * Y**2, -24 * Y**3, Y**4],
]

_DEGREE_TWO_COLUMN = [
    2 - 4 * X + X**2,
    6 - 6 * X + X**2,
    12 - 8 * X + X**2,
    20 - 10 * X + X**2,
    30 - 12 * X + X**2,
]


def check_signed_pascal_golden(order: int = 16) -> CheckReport:
    """Ordinary pair 5x5 against the frozen signed binomial rows, and the
    matrix-vector product with {x^n/n!} against the rational family."""
    pair = signed_pascal_pair(order, "ordinary")
    mismatches = []
    matrix = pair.matrix(5, 5)
    for n in range(5):
        for k in range(5):
            if matrix[n][k] != _SIGNED_PASCAL_5[n][k]:
                mismatches.append((f"({n},{k})", matrix[n][k], _SIGNED_PASCAL_5[n][k]))
    for n in range(5):
        got = Polynomial()
        for k in range(n + 1):
            got = got + matrix[n][k] * (X**k / factorial(k))
        if got != _RATIONAL_LAGUERRE_COLUMN[n]:
            mismatches.append((f"column row {n}", got, _RATIONAL_LAGUERRE_COLUMN[n]))
    return _report("signed-pascal-5x5", {"order": order}, mismatches)


def check_integer_rows_golden(order: int = 16) -> CheckReport:
    """Exponential pair 4x4 against the frozen integer rows."""
    matrix = signed_pascal_pair(order, "exponential").matrix(4, 4)
    mismatches = [
        (f"({n},{k})", matrix[n][k], _INTEGER_LAGUERRE_4[n][k])
        for n in range(4)
        for k in range(4)
        if matrix[n][k] != _INTEGER_LAGUERRE_4[n][k]
    ]
    return _report("integer-laguerre-4x4", {"order": order}, mismatches)


def check_cube_layers_golden(order: int = 16) -> CheckReport:
    """Layers 0..2 of the exponential signed Pascal triple, 5x5 each."""
    triple = signed_pascal_triple(order, "exponential")
    mismatches = []
    for k, expected in _CUBE_LAYERS_5.items():
        matrix = triple.layer(k).matrix(5, 5)
        for i in range(5):
            for j in range(5):
                if matrix[i][j] != expected[i][j]:
                    mismatches.append((f"layer {k} ({i},{j})", matrix[i][j], expected[i][j]))
    return _report("cube-layers-5x5", {"order": order, "layers": 3}, mismatches)


def check_bivariate_goldens() -> CheckReport:
    """The four frozen bivariate polynomials via every construction route."""
    mismatches = []
    table = biv_riordan_table(2, 2)
    for (n, m), expected in _BIV_GOLDENS.items():
        routes = {
            "explicit": biv_explicit(n, m).value,
            "via-x": biv_via_uni(n, m, "x").value,
            "via-y": biv_via_uni(n, m, "y").value,
            "rodrigues": biv_rodrigues(n, m).value,
            "riordan": table[n][m].value,
        }
        for route, got in routes.items():
            if got != expected:
                mismatches.append((f"(n={n},m={m},route={route})", got, expected))
    return _report("bivariate-table-goldens", {"entries": len(_BIV_GOLDENS)}, mismatches)


def check_layer2_product_golden(order: int = 16) -> CheckReport:
    """The 5x5 second layer of the y-weighted triple, then its product with
    the frozen degree-two column, against the bivariate family."""
    triple = y_weighted_pascal_triple(order)
    matrix = triple.layer(2).matrix(5, 5)
    mismatches = []
    for i in range(5):
        for j in range(5):
            if matrix[i][j] != _LAYER2_Y_MATRIX[i][j]:
                mismatches.append((f"matrix ({i},{j})", matrix[i][j], _LAYER2_Y_MATRIX[i][j]))
    for k in range(5):
        got = Polynomial()
        for j in range(k + 1):
            got = got + matrix[k][j] * _DEGREE_TWO_COLUMN[j]
        expected = biv_explicit(2, k).value
        if got != expected:
            mismatches.append((f"product row {k}", got, expected))
    return _report("layer2-column-product", {"order": order}, mismatches)


# ---------------------------------------------------------------------------
# generating functions

def check_egf_uni(alpha: int, order: int) -> CheckReport:
    """The exponential generating function of the order-alpha family: the
    series expansion of exp(-xt/(1-t))/(1-t)^(alpha+1) against the explicit
    construction, coefficient by coefficient."""
    expansion = geom(order, alpha + 1) * neg_t_geom(order, scale=X).exp()
    mismatches = []
    for n in range(order + 1):
        lhs = laguerre.uni_explicit(n, alpha).value / factorial(n)
        rhs = expansion.coeff(n)
        if lhs != rhs:
            mismatches.append((f"t^{n}", lhs, rhs))
    return _report("uni-egf", {"alpha": alpha, "order": order}, mismatches)


def _biv_egf(degree: int, x_with_s: bool) -> BiSeries:
    inv = BiSeries({(0, 0): 1, (1, 0): -1, (0, 1): -1}, degree).reciprocal()
    first, second = (X, Y) if x_with_s else (Y, X)
    numerator = BiSeries({(1, 0): -first, (0, 1): -second}, degree)
    return (numerator * inv).exp() * inv


def check_egf_biv(degree: int) -> CheckReport:
    """The bivariate exponential generating function
    exp((-sx - ty)/(1 - s - t))/(1 - s - t) against the explicit double sum,
    for every coefficient up to the total degree.  The variable pairing that
    puts x with s is the asserted one; the swapped pairing is expanded too
    and reported, to document that only one of them matches."""
    expected = {
        (n, m): biv_explicit(n, m).value / (factorial(n) * factorial(m))
        for n in range(degree + 1)
        for m in range(degree + 1 - n)
    }
    details = {}
    mismatches = []
    for label, x_with_s in (("pairing-s-x", True), ("pairing-s-y", False)):
        egf = _biv_egf(degree, x_with_s)
        bad = []
        for (n, m), want in sorted(expected.items()):
            got = egf.coeff(n, m)
            if got != want:
                bad.append((f"s^{n}*t^{m}", got, want))
        details[label] = "match" if not bad else f"mismatch at {bad[0][0]}"
        if x_with_s:
            mismatches = bad
    return _report("biv-egf", {"degree": degree}, mismatches, details)


# ---------------------------------------------------------------------------
# orthogonality

def _moment(p: Polynomial) -> Fraction:
    # integral of e^(-x) x^j over (0, inf) is j!, term by term
    total = Fraction(0)
    for (dx, dy), c in p.items():
        if dy:
            raise ValueError("moment functional is univariate")
        total += c * factorial(dx)
    return total


def check_orthogonality(n: int, m: int, alpha: int) -> CheckReport:
    """Weighted inner product of two family members via the exact moment
    functional, against n! m! alpha! C(n+alpha, n) delta(n, m)."""
    product = laguerre.uni_explicit(n, alpha).value * laguerre.uni_explicit(m, alpha).value * X**alpha
    got = _moment(product)
    expected = Fraction(factorial(n) * factorial(m) * factorial(alpha) * binomial(n + alpha, n)) if n == m else Fraction(0)
    mismatches = [] if got == expected else [(f"(n={n},m={m},alpha={alpha})", got, expected)]
    return _report("orthogonality", {"n": n, "m": m, "alpha": alpha}, mismatches)


# ---------------------------------------------------------------------------
# summation identities along a fixed total degree

def _substitute_reciprocal_y(p: Polynomial, premultiply: int) -> Polynomial:
    """y -> 1/x after scaling by x**premultiply; exponents must stay
    non-negative, which the summands guarantee."""
    terms: dict = {}
    for (dx, dy), c in p.items():
        exponent = dx + premultiply - dy
        if exponent < 0:
            raise ValueError(f"negative power x^{exponent} while clearing denominators")
        key = (exponent, 0)
        terms[key] = terms.get(key, Fraction(0)) + c
    return Polynomial(terms)


def check_diagonal_sum(k: int, which: str) -> CheckReport:
    """The four closed-form sums over all bivariate members of total degree k:

    - 'sum':   binomial-weighted sum equals 2^k times the univariate member
               at the average of the variables,
    - 'asum':  alternating sum equals (y - x)^k,
    - 'xysum': alternating sum at -x equals (y + x)^k,
    - 'xsum':  x-power-weighted sum at y = 1/x collapses to the value at 1
               times (1 + x)^k.
    """
    if which not in ("sum", "asum", "xysum", "xsum"):
        raise ValueError(f"unknown identity {which!r}")
    members = {n: biv_via_uni(n, k - n, "x").value for n in range(k + 1)}
    lhs = Polynomial()
    if which == "sum":
        for n, member in members.items():
            lhs = lhs + binomial(k, n) * member
        half = Fraction(1, 2) * (X + Y)
        rhs = 2**k * laguerre.uni_explicit(k, 0).value.substitute(x=half)
    elif which == "asum":
        for n, member in members.items():
            lhs = lhs + (-1) ** (k - n) * binomial(k, n) * member
        rhs = (Y - X) ** k
    elif which == "xysum":
        for n, member in members.items():
            lhs = lhs + (-1) ** (k - n) * binomial(k, n) * member.substitute(x=-X)
        rhs = (Y + X) ** k
    else:
        for n, member in members.items():
            lhs = lhs + binomial(k, n) * _substitute_reciprocal_y(member, k - n)
        at_one = laguerre.uni_explicit(k, 0).value.substitute(x=1).constant_term()
        rhs = at_one * (1 + X) ** k
    mismatches = [] if lhs == rhs else [(f"k={k}", lhs, rhs)]
    return _report("diagonal-sum", {"k": k, "which": which}, mismatches)


# ---------------------------------------------------------------------------
# the table factorization and its column chain

def check_table_product(max_n: int, max_m: int) -> CheckReport:
    """The double bullet product table against the explicit double sum."""
    table = biv_riordan_table(max_n, max_m)
    mismatches = []
    for n in range(max_n + 1):
        for m in range(max_m + 1):
            got = table[n][m].value
            expected = biv_explicit(n, m).value
            if got != expected:
                mismatches.append((f"(n={n},m={m})", got, expected))
    return _report("table-product", {"max_n": max_n, "max_m": max_m}, mismatches)


def check_ftra_chain(n: int, max_m: int, order: int | None = None) -> CheckReport:
    """Apply the ordinary pair (1/(1-t)^(1+n), -t/(1-t)) to the column whose
    generating function packs L_n^(k)(x) y^k / k! at t^k; coefficient m of
    the image must be the bivariate member over m!."""
    order = max(16, max_m + 1) if order is None else order
    pair = RiordanArray(geom(order, n + 1), neg_t_geom(order), "ordinary")
    packed = Series(
        tuple(
            laguerre.uni_explicit(n, k).value * Y**k / factorial(k)
            for k in range(order + 1)
        )
    )
    image = pair.apply(packed)
    mismatches = []
    for m in range(max_m + 1):
        got = image.coeff(m)
        expected = biv_explicit(n, m).value / factorial(m)
        if got != expected:
            mismatches.append((f"t^{m}", got, expected))
    return _report("ftra-chain", {"n": n, "max_m": max_m}, mismatches)


# ---------------------------------------------------------------------------
# route agreement

def check_uni_routes(max_n: int, max_alpha: int) -> CheckReport:
    mismatches = []
    others = {"recurrence": uni_recurrence, "riordan": uni_riordan, "rodrigues": uni_rodrigues}
    for n in range(max_n + 1):
        for alpha in range(max_alpha + 1):
            reference = laguerre.uni_explicit(n, alpha).value
            for route, constructor in others.items():
                got = constructor(n, alpha).value
                if got != reference:
                    mismatches.append((f"(n={n},alpha={alpha},route={route})", got, reference))
    return _report("uni-routes", {"max_n": max_n, "max_alpha": max_alpha}, mismatches)


def check_biv_routes(max_nm: int) -> CheckReport:
    mismatches = []
    table = biv_riordan_table(max_nm, max_nm)
    for n in range(max_nm + 1):
        for m in range(max_nm + 1):
            reference = biv_explicit(n, m).value
            candidates = {
                "via-x": biv_via_uni(n, m, "x").value,
                "via-y": biv_via_uni(n, m, "y").value,
                "rodrigues": biv_rodrigues(n, m).value,
                "riordan": table[n][m].value,
            }
            for route, got in candidates.items():
                if got != reference:
                    mismatches.append((f"(n={n},m={m},route={route})", got, reference))
    return _report("biv-routes", {"max_nm": max_nm}, mismatches)


# ---------------------------------------------------------------------------
# group laws

def _matmul(a: list, b: list) -> list:
    rows, inner, cols = len(a), len(b), len(b[0])
    return [
        [sum(a[i][x] * b[x][j] for x in range(inner)) for j in range(cols)]
        for i in range(rows)
    ]


def _random_series(rng: random.Random, order: int, first_nonzero: int) -> Series:
    coeffs = [0] * (order + 1)
    for i in range(first_nonzero, order + 1):
        coeffs[i] = rng.randint(-3, 3)
    coeffs[first_nonzero] = rng.choice([1, -1, 2, -2])
    return Series(tuple(coeffs))


def _random_triple(rng: random.Random, order: int, flavor: str):
    from .array3 import RiordanTriple

    return RiordanTriple(
        _random_series(rng, order, 0),
        _random_series(rng, order, 1),
        _random_series(rng, order, 0),
        flavor,
    )


def check_layer_homomorphism(pairs: int = 20, max_k: int = 4, order: int = 12, size: int = 8, seed: int = 1) -> CheckReport:
    """Layer k of a product of triples equals the matrix product of the
    factors' layer-k matrices."""
    rng = random.Random(seed)
    mismatches = []
    for trial in range(pairs):
        flavor = "ordinary" if trial % 2 == 0 else "exponential"
        a = _random_triple(rng, order, flavor)
        b = _random_triple(rng, order, flavor)
        ab = a * b
        for k in range(max_k + 1):
            direct = ab.layer(k).matrix(size, size)
            multiplied = _matmul(a.layer(k).matrix(size, size), b.layer(k).matrix(size, size))
            if direct != multiplied:
                for i in range(size):
                    for j in range(size):
                        if direct[i][j] != multiplied[i][j]:
                            mismatches.append(
                                (f"trial {trial} layer {k} ({i},{j})", direct[i][j], multiplied[i][j])
                            )
                            break
                    else:
                        continue
                    break
    return _report(
        "layer-homomorphism",
        {"pairs": pairs, "max_k": max_k, "order": order, "size": size, "seed": seed},
        mismatches,
    )


def check_pair_matmul(pairs: int = 10, order: int = 10, size: int = 8, seed: int = 2) -> CheckReport:
    """The pair group law against literal matrix multiplication."""
    rng = random.Random(seed)
    mismatches = []
    for trial in range(pairs):
        flavor = "ordinary" if trial % 2 == 0 else "exponential"
        a = RiordanArray(_random_series(rng, order, 0), _random_series(rng, order, 1), flavor)
        b = RiordanArray(_random_series(rng, order, 0), _random_series(rng, order, 1), flavor)
        direct = (a * b).matrix(size, size)
        multiplied = _matmul(a.matrix(size, size), b.matrix(size, size))
        if direct != multiplied:
            for i in range(size):
                for j in range(size):
                    if direct[i][j] != multiplied[i][j]:
                        mismatches.append((f"trial {trial} ({i},{j})", direct[i][j], multiplied[i][j]))
                        break
                else:
                    continue
                break
    return _report("pair-matmul", {"pairs": pairs, "order": order, "size": size, "seed": seed}, mismatches)


def check_pascal_self_inverse(order: int = 16, size: int = 8) -> CheckReport:
    """The signed Pascal pair squares to the identity."""
    pair = signed_pascal_pair(order, "ordinary")
    squared = (pair * pair).matrix(size, size)
    mismatches = []
    for i in range(size):
        for j in range(size):
            expected = 1 if i == j else 0
            if squared[i][j] != expected:
                mismatches.append((f"({i},{j})", squared[i][j], expected))
    return _report("pascal-self-inverse", {"order": order, "size": size}, mismatches)


def check_newton_rule(max_m: int = 6, max_n: int = 6, order: int = 16) -> CheckReport:
    """Coefficient m of (-t)^k/(1-t)^(n+k+1) equals (-1)^k C(m+n, m-k),
    with the left side produced by honest series expansion."""
    mismatches = []
    t = t_series(order)
    for n in range(max_n + 1):
        for k in range(max_m + 1):
            expansion = geom(order, n + k + 1) * t**k * (-1) ** k
            for m in range(k, max_m + 1):
                got = expansion.coeff(m)
                expected = (-1) ** k * binomial(m + n, m - k)
                if got != expected:
                    mismatches.append((f"(m={m},k={k},n={n})", got, expected))
    return _report("newton-rule", {"max_m": max_m, "max_n": max_n}, mismatches)


# ---------------------------------------------------------------------------
# the full harness

@dataclass
class HarnessConfig:
    max_n: int = 10
    max_alpha: int = 6
    max_biv: int = 6
    max_k: int = 10
    egf_alphas: tuple = (0, 1, 3, 5)
    egf_order: int = 12
    biv_degree: int = 8
    orth_max: int = 5
    orth_alphas: tuple = (0, 1, 2, 3)
    ftra_max_n: int = 3
    ftra_max_m: int = 5
    hom_pairs: int = 20
    hom_max_k: int = 4
    hom_order: int = 12
    matmul_size: int = 8
    newton_max: int = 6
    goldens: bool = True
    seed: int = 1
    mutate: bool = False
    only: str | None = None

    @classmethod
    def empty(cls) -> "HarnessConfig":
        return cls(
            max_n=-1,
            max_alpha=-1,
            max_biv=-1,
            max_k=0,
            egf_alphas=(),
            biv_degree=-1,
            orth_max=-1,
            orth_alphas=(),
            ftra_max_n=-1,
            hom_pairs=0,
            matmul_size=0,
            newton_max=-1,
            goldens=False,
        )


def run_all(config: HarnessConfig | None = None) -> list[CheckReport]:
    """Run every check at the configured ranges, in a fixed order."""
    cfg = config or HarnessConfig()

    def golden_checks():
        if not cfg.goldens:
            return []
        return [
            check_signed_pascal_golden(),
            check_integer_rows_golden(),
            check_cube_layers_golden(),
            check_bivariate_goldens(),
            check_layer2_product_golden(),
        ]

    def route_checks():
        out = []
        if cfg.max_n >= 0 and cfg.max_alpha >= 0:
            out.append(check_uni_routes(cfg.max_n, cfg.max_alpha))
        if cfg.max_biv >= 0:
            out.append(check_biv_routes(cfg.max_biv))
        return out

    def egf_checks():
        return [check_egf_uni(alpha, cfg.egf_order) for alpha in cfg.egf_alphas]

    def biv_egf_checks():
        return [check_egf_biv(cfg.biv_degree)] if cfg.biv_degree >= 0 else []

    def orthogonality_checks():
        return [
            check_orthogonality(n, m, alpha)
            for alpha in cfg.orth_alphas
            for n in range(cfg.orth_max + 1)
            for m in range(cfg.orth_max + 1)
        ]

    def diagonal_checks():
        return [
            check_diagonal_sum(k, which)
            for k in range(1, cfg.max_k + 1)
            for which in ("sum", "asum", "xysum", "xsum")
        ]

    def table_checks():
        return [check_table_product(cfg.max_biv, cfg.max_biv)] if cfg.max_biv >= 0 else []

    def ftra_checks():
        return [check_ftra_chain(n, cfg.ftra_max_m) for n in range(cfg.ftra_max_n + 1)]

    def group_checks():
        out = []
        if cfg.hom_pairs > 0:
            out.append(
                check_layer_homomorphism(
                    cfg.hom_pairs, cfg.hom_max_k, cfg.hom_order, cfg.matmul_size, cfg.seed
                )
            )
        if cfg.matmul_size > 0:
            out.append(check_pair_matmul(size=cfg.matmul_size, seed=cfg.seed + 1))
            out.append(check_pascal_self_inverse(size=cfg.matmul_size))
        return out

    def newton_checks():
        return [check_newton_rule(cfg.newton_max, cfg.newton_max)] if cfg.newton_max >= 0 else []

    families = [
        (
            (
                "signed-pascal-5x5",
                "integer-laguerre-4x4",
                "cube-layers-5x5",
                "bivariate-table-goldens",
                "layer2-column-product",
            ),
            golden_checks,
        ),
        (("uni-routes", "biv-routes"), route_checks),
        (("uni-egf",), egf_checks),
        (("biv-egf",), biv_egf_checks),
        (("orthogonality",), orthogonality_checks),
        (("diagonal-sum",), diagonal_checks),
        (("table-product",), table_checks),
        (("ftra-chain",), ftra_checks),
        (("layer-homomorphism", "pair-matmul", "pascal-self-inverse"), group_checks),
        (("newton-rule",), newton_checks),
    ]

    reports: list[CheckReport] = []
    guard = sign_flip_mutation() if cfg.mutate else nullcontext()
    with guard:
        for names, thunk in families:
            if cfg.only and not any(cfg.only in name for name in names):
                continue
            reports.extend(thunk())
    if cfg.only:
        reports = [r for r in reports if cfg.only in r.name]
    return reports


def all_passed(reports: list[CheckReport]) -> bool:
    return all(r.passed for r in reports)
