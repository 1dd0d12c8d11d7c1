"""Berline-Vergne alpha-values for cubes, simplices and corner-cut cubes.

Only closed forms are implemented. Faces are identified by
``(family, n, k, class flag)``: alpha-values are invariant under orthogonal
unimodular maps, so every face in an orbit shares one value and no cone data
structures are needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from .ehrhart import ParameterError, ehrhart_box_corner, ehrhart_P_corner
from .exactpoly import Polynomial, poly_binomial

FAMILIES = ("cubeFace", "stdSimplexFace", "unimodSimplexFace", "cornerCutFace")


@dataclass(frozen=True)
class AlphaEntry:
    family: str
    n: int
    k: int
    value: Fraction
    flag: bool = False


def _half_power(k: int, n: int) -> Fraction:
    return Fraction(1, 2 ** (n - k))


def alpha_value(family: str, n: int, k: int, flag: bool = False) -> Fraction:
    """Closed-form alpha-value of a ``k``-face.

    ``flag`` selects the orbit where a family has two: for
    ``unimodSimplexFace`` it means the face contains the origin, for
    ``cornerCutFace`` it means the face lies on the cut simplex.
    """
    if n < 1:
        raise ParameterError("n must be positive")
    top = n - 1 if family == "stdSimplexFace" else n
    if not 0 <= k <= top:
        raise ParameterError(f"face dimension {k} out of range 0..{top} for {family}")
    if family == "cubeFace":
        return _half_power(k, n)
    if family == "stdSimplexFace":
        return factorial(k) * poly_binomial(1, n - 1, n - 1)[k] / comb(n, k + 1)
    if family == "unimodSimplexFace":
        if flag or k == n:
            return _half_power(k, n)
        return (factorial(k) * poly_binomial(1, n, n)[k] - comb(n, k) * _half_power(k, n)) / comb(
            n, k + 1
        )
    if family == "cornerCutFace":
        # k == n is the polytope itself, whose pointed feasible cone is {0}
        if not flag or k == n:
            return _half_power(k, n)
        return (comb(n, k) * _half_power(k, n) - factorial(k) * poly_binomial(1, n - 1, n)[k]) / comb(
            n, k + 1
        )
    raise ParameterError(f"unknown family {family!r}")


def alpha_table(n_max: int) -> list[list[Fraction]]:
    """Rows ``n = 1..n_max`` of alpha-values on the cut simplex, ``k = 0..n``."""
    if n_max < 1:
        raise ParameterError("n_max must be positive")
    return [[alpha_value("cornerCutFace", n, k, True) for k in range(n + 1)] for n in range(1, n_max + 1)]


@dataclass(frozen=True)
class PositivityScan:
    n: int
    all_positive: bool
    negative_entries: tuple[tuple[int, Fraction], ...]


def scan_alpha_positivity(n: int) -> PositivityScan:
    row = alpha_table(n)[-1]
    neg = tuple((k, v) for k, v in enumerate(row) if v <= 0)
    return PositivityScan(n, not neg, neg)


@dataclass(frozen=True)
class FaceClassSummary:
    label: str
    k: int
    face_count: int
    normalized_volume: Fraction
    alpha: Fraction

    @property
    def contribution(self) -> Fraction:
        return self.face_count * self.normalized_volume * self.alpha


def face_classes(n: int, a: int, b: int, k: int) -> list[FaceClassSummary]:
    """The three orbits of ``k``-faces of ``P_n(a, b)``.

    (i) faces of the cut simplex ``b * Delta_{n-1}``; (ii) cube faces through
    the chiseled corner, which lose a copy of ``b * S_k``; (iii) cube faces
    away from the corner.
    """
    kf = factorial(k)
    return [
        FaceClassSummary(
            "cut", k, comb(n, k + 1), Fraction(b**k, kf), alpha_value("cornerCutFace", n, k, True)
        ),
        FaceClassSummary(
            "corner", k, comb(n, k), a**k - Fraction(b**k, kf), alpha_value("cornerCutFace", n, k)
        ),
        FaceClassSummary(
            "far",
            k,
            comb(n, k) * (2 ** (n - k) - 1),
            Fraction(a**k),
            alpha_value("cornerCutFace", n, k),
        ),
    ]


def reconstruct_ehrhart_from_alpha(n: int, a: int, b: int) -> Polynomial:
    """``[t^k] i = sum over k-faces of alpha * nvol``, for ``P_n(a, b)``."""
    if n < 1 or b < 1 or a <= b:
        raise ParameterError("need n >= 1 and a > b >= 1")
    return Polynomial(
        sum((c.contribution for c in face_classes(n, a, b, k)), Fraction(0)) for k in range(n + 1)
    )


def _elementary(values: Sequence[Fraction], r: int) -> Fraction:
    e = [Fraction(1)] + [Fraction(0)] * r
    for v in values:
        for j in range(r, 0, -1):
            e[j] += e[j - 1] * v
    return e[r]


@dataclass(frozen=True)
class BoxCornerReport:
    sides: tuple[int, ...]
    b: int
    polynomial: Polynomial
    all_positive: bool
    dominates_equal_sides: bool
    subset_expansion_exact: bool
    dominates_lower_bound: bool
    lower_bound_positive: bool

    @property
    def ok(self) -> bool:
        return (
            self.all_positive
            and self.dominates_equal_sides
            and self.subset_expansion_exact
            and self.dominates_lower_bound
            and self.lower_bound_positive
        )


def _geq(f: Polynomial, g: Polynomial, n: int) -> bool:
    return all(f[k] >= g[k] for k in range(n + 1))


def check_box_corner_positivity(sides: Sequence[int], b: int) -> BoxCornerReport:
    """Positivity of a corner-chiseled box and each link of the bounding chain.

    With ``a = min(sides)`` the chain is, coefficientwise,
    ``i(P) >= (at+1)^n - binom(bt+n-1, n)``, whose coefficients equal
    ``a^k C(n,k) - b^k/n * e_{k-1}(1, 1/2, ..., 1/(n-1))``, and these are
    at least ``a^k C(n,k) - b^k k^2/n^2 C(n,k)/k!``, which is positive.
    """
    sides = tuple(int(s) for s in sides)
    n = len(sides)
    p = ehrhart_box_corner(sides, b)
    a = min(sides)
    g = ehrhart_P_corner(n, a, b)
    recips = [Fraction(1, s) for s in range(1, n)]
    subset = Polynomial(
        [1]
        + [
            a**k * comb(n, k) - Fraction(b**k, n) * _elementary(recips, k - 1)
            for k in range(1, n + 1)
        ]
    )
    lower = Polynomial(
        a**k * comb(n, k) - Fraction(b**k * k * k * comb(n, k), n * n * factorial(k))
        for k in range(n + 1)
    )
    return BoxCornerReport(
        sides=sides,
        b=b,
        polynomial=p,
        all_positive=p.degree == n and all(c > 0 for c in p.coefficients),
        dominates_equal_sides=_geq(p, g, n),
        subset_expansion_exact=subset == g,
        dominates_lower_bound=_geq(g, lower, n),
        lower_bound_positive=lower.degree == n and all(c > 0 for c in lower.coefficients),
    )
