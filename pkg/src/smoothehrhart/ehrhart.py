"""Closed-form Ehrhart polynomials of chiseled cubes and their products.

This module never touches geometry. Each family is a formula in the exact
polynomial algebra of :mod:`smoothehrhart.exactpoly`, which is what makes
instances like ``P^1(28, 498205702352484)`` instantaneous.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, prod
from typing import Optional, Sequence

from .exactpoly import Polynomial, falling_coefficients, poly_binomial


class ParameterError(ValueError):
    """Family parameters outside their valid range."""


def _linear(a: int) -> Polynomial:
    return Polynomial([1, a])


def ehrhart_basic(family: str, n: int) -> Polynomial:
    """Unit cube ``(t+1)^n``, standard simplex, or unimodular simplex.

    For ``"stdSimplex"``, ``n`` is the number of vertices (the simplex has
    dimension ``n - 1``).
    """
    if n < 1:
        raise ParameterError("n must be at least 1")
    if family == "cube":
        return _linear(1) ** n
    if family == "stdSimplex":
        return poly_binomial(1, n - 1, n - 1)
    if family == "unimodSimplex":
        return poly_binomial(1, n, n)
    raise ParameterError(f"unknown basic family {family!r}")


def chisel_stage_terms(dim: int, f0: int, depths: Sequence[int]) -> Polynomial:
    """``sum_i f0 * dim**(i-1) * binom(b_i t + dim - 1, dim)`` over the stages."""
    # accumulate integer numerators and divide by dim! once
    total = [0] * (dim + 1)
    count = f0
    for b in depths:
        for j, c in enumerate(falling_coefficients(b, dim - 1, dim)):
            total[j] += count * c
        count *= dim
    nf = factorial(dim)
    return Polynomial(Fraction(c, nf) for c in total)


def check_chisel_chain(scale: int, depths: Sequence[int], base_min_edge: int = 1) -> int:
    """Track the minimum integer edge length through a chisel plan.

    Returns the final minimum. Each stage with depth ``b`` needs the current
    minimum to be at least ``2b + 1``; afterwards the shortest edge is either
    a cut-simplex edge (length ``b``) or a shortened old edge.
    """
    if scale < 1:
        raise ParameterError("scale must be positive")
    current = scale * base_min_edge
    for stage, b in enumerate(depths, start=1):
        if b < 1:
            raise ParameterError(f"stage {stage}: depth must be positive")
        if current < 2 * b + 1:
            raise ParameterError(
                f"stage {stage}: depth {b} needs edges of length {2 * b + 1}, shortest is {current}"
            )
        current = min(b, current - 2 * b)
    return current


def ehrhart_chisel_series(
    base_poly: Polynomial,
    f0: int,
    dim: int,
    scale: int,
    depths: Sequence[int],
    base_min_edge: int = 1,
) -> Polynomial:
    """Ehrhart polynomial of ``chisel(scale * base, depths)``."""
    check_chisel_chain(scale, depths, base_min_edge)
    return base_poly.scale_variable(scale) - chisel_stage_terms(dim, f0, depths)


def ehrhart_Q(n: int, a: int, b: int) -> Polynomial:
    """``Q_n(a, b)``: every vertex of ``a*C_n`` chiseled at distance ``b``."""
    if n < 1 or b < 1 or a < 2 * b + 1:
        raise ParameterError("Q_n(a, b) requires n >= 1 and a > 2b >= 2")
    return _linear(a) ** n - poly_binomial(b, n - 1, n) * (2**n)


def ehrhart_P_corner(n: int, a: int, b: int) -> Polynomial:
    """``P_n(a, b)``: ``a*C_n`` with only the origin chiseled at distance ``b``."""
    if n < 1 or b < 1 or a <= b:
        raise ParameterError("P_n(a, b) requires n >= 1 and a > b >= 1")
    return _linear(a) ** n - poly_binomial(b, n - 1, n)


def ehrhart_box_corner(sides: Sequence[int], b: int) -> Polynomial:
    """Box ``prod [0, a_i]`` with the origin chiseled at distance ``b``."""
    n = len(sides)
    if n < 1 or b < 1 or any(a <= b for a in sides):
        raise ParameterError("box corner requires every side > b >= 1")
    box = prod((_linear(a) for a in sides), start=Polynomial([1]))
    return box - poly_binomial(b, n, n) + poly_binomial(b, n - 1, n - 1)


def b_depths(k: int) -> list[int]:
    return [3**j for j in range(k - 1, -1, -1)]


def ehrhart_B(k: int) -> Polynomial:
    if k < 1:
        raise ParameterError("k must be at least 1")
    return ehrhart_chisel_series(ehrhart_basic("cube", 3), 8, 3, 3**k, b_depths(k))


HEX_PRISM = Polynomial([1, 4, 6, 3])  # (3t^2 + 3t + 1)(t + 1)


def ehrhart_H(k: int) -> Polynomial:
    """Hexagon-prism analogue of ``B_k``."""
    if k < 1:
        raise ParameterError("k must be at least 1")
    return ehrhart_chisel_series(HEX_PRISM, 12, 3, 3**k, b_depths(k))


def ehrhart_P_prod(n: int, k: int, a: int) -> Polynomial:
    """``P^n(k, a) = B_k x a*C_n``."""
    if a < 1 or n < 0:
        raise ParameterError("need n >= 0 and a >= 1")
    return ehrhart_B(k) * _linear(a) ** n


def ehrhart_Q_prod(n: int, k: int, a: int) -> Polynomial:
    """``Q^n(k, a) = H_k x a*C_n``."""
    if a < 1 or n < 0:
        raise ParameterError("need n >= 0 and a >= 1")
    return ehrhart_H(k) * _linear(a) ** n


def B_coeffs(k: int) -> tuple[Fraction, Fraction, Fraction]:
    """``(q1, q2, q3)`` with ``i(B_k, t) = q3 t^3 + q2 t^2 - q1 t + 1``."""
    if k < 1:
        raise ParameterError("k must be at least 1")
    p = Fraction(3) ** (k - 2)
    q1 = p * (8 * k - 27)
    q2 = Fraction(3) ** (k - 1) * (7 * 3**k + 2)
    q3 = p * (17 * 3 ** (2 * k) + 1) / 2
    return q1, q2, q3


def mu_coeffs(n: int, k: int, a: int) -> list[Fraction]:
    """Coefficients ``mu_0..mu_{n+3}`` of ``i(P^n(k, a), t)`` from closed forms."""
    if n < 1 or k < 1 or a < 1:
        raise ParameterError("need n, k, a >= 1")
    q1, q2, q3 = B_coeffs(k)

    def c(j: int) -> int:
        return comb(n, j) if 0 <= j <= n else 0

    def term(j: int, e: int) -> Fraction:
        return Fraction(a) ** e if e >= 0 else Fraction(0)

    mu = [Fraction(1), n * a - q1]
    for j in range(2, n + 2):
        mu.append(
            c(j) * term(j, j)
            - c(j - 1) * term(j, j - 1) * q1
            + c(j - 2) * term(j, j - 2) * q2
            + c(j - 3) * term(j, j - 3) * q3
        )
    mu.append(Fraction(a) ** (n - 1) * (a * q2 + n * q3))
    mu.append(Fraction(a) ** n * q3)
    return mu


def choose_a(n: int, k: int) -> int:
    """``floor(7 k 3^(k-2) / n)``."""
    if n < 1 or k < 2:
        raise ParameterError("need n >= 1 and k >= 2")
    return (7 * k * 3 ** (k - 2)) // n


@dataclass(frozen=True)
class ChoiceBounds:
    n: int
    k: int
    a: int
    q1_exceeds_na: bool
    q2_bound: bool
    q3_bound: bool
    a_lower_bound: bool

    @property
    def all_hold(self) -> bool:
        return self.q1_exceeds_na and self.q2_bound and self.q3_bound and self.a_lower_bound


def check_choice_k_bounds(n: int, k: int) -> ChoiceBounds:
    q1, q2, q3 = B_coeffs(k)
    a = choose_a(n, k)
    return ChoiceBounds(
        n=n,
        k=k,
        a=a,
        q1_exceeds_na=q1 > n * a,
        q2_bound=q2 < 8 * Fraction(3) ** (2 * k - 1),
        q3_bound=q3 < 3 ** (3 * k),
        a_lower_bound=a >= Fraction(6, n) * k * Fraction(3) ** (k - 2),
    )


@dataclass(frozen=True)
class Witness:
    k: int
    a: Optional[int]
    negative: tuple[int, ...]


def _negatives(coeffs: Sequence[Fraction]) -> tuple[int, ...]:
    return tuple(j for j, c in enumerate(coeffs) if c < 0)


def _is_witness(n: int, k: int, a: int) -> bool:
    mu = mu_coeffs(n, k, a)
    return all(mu[j] < 0 for j in range(1, n + 2))


def search_negative(
    n: int,
    k_max: int,
    a_max: int = 10**6,
    candidates: Optional[Sequence[int]] = None,
    k_min: int = 1,
) -> list[Witness]:
    """Find ``(k, a)`` with ``mu_1, ..., mu_{n+1}`` of ``P^n(k, a)`` all negative.

    With ``candidates``, every listed ``a`` is tested for every ``k``. Without
    them, one witness per ``k`` is reported: the smallest ``a`` found by a
    doubling grid over ``1 <= a < q1/n`` followed by bisection back to the
    boundary of the witness region. ``n = 0`` means ``B_k`` alone, where only
    the linear coefficient matters and ``a`` is ``None``.
    """
    if n < 0:
        raise ParameterError("n must be nonnegative")
    found: list[Witness] = []
    for k in range(k_min, k_max + 1):
        if n == 0:
            p = ehrhart_B(k)
            if p[1] < 0:
                found.append(Witness(k, None, _negatives(p.coefficients)))
            continue
        q1 = B_coeffs(k)[0]
        if q1 <= n:
            continue
        # mu_1 < 0  <=>  n*a < q1
        top = min(a_max, -(-q1.numerator // (n * q1.denominator)) - 1)
        if candidates is not None:
            for a in candidates:
                if 1 <= a <= a_max and _is_witness(n, k, a):
                    found.append(Witness(k, a, _negatives(mu_coeffs(n, k, a))))
            continue
        a, prev = 1, 0
        hit = None
        while a <= top:
            if _is_witness(n, k, a):
                hit = a
                break
            prev, a = a, 2 * a
        if hit is None and top >= 1 and prev < top and _is_witness(n, k, top):
            hit = top
        if hit is None:
            continue
        lo, hi = prev, hit  # lo fails (or is 0), hi is a witness
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if _is_witness(n, k, mid):
                hi = mid
            else:
                lo = mid
        found.append(Witness(k, hi, _negatives(mu_coeffs(n, k, hi))))
    return found
