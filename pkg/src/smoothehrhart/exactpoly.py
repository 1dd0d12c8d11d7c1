"""Exact rational polynomials in one variable.

Coefficients are :class:`fractions.Fraction` values stored densely by degree.
Everything here is exact; there is no floating point anywhere.
"""

from __future__ import annotations

import warnings
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]


class NonIntegralHStarWarning(UserWarning):
    """The h*-vector of a polynomial has non-integer entries."""


class Polynomial:
    """Immutable dense polynomial with rational coefficients.

    ``Polynomial([1, 2, 1])`` is ``t**2 + 2*t + 1``; index ``i`` holds the
    coefficient of ``t**i``. Trailing zeros are stripped so that ``degree``
    is the index of the last nonzero coefficient (``-1`` for zero).
    """

    __slots__ = ("_c",)

    def __init__(self, coefficients: Iterable[Number] = ()):
        c = [x if type(x) is Fraction else Fraction(x) for x in coefficients]
        while c and c[-1] == 0:
            c.pop()
        self._c: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def constant(cls, value: Number) -> "Polynomial":
        return cls([value])

    @classmethod
    def monomial(cls, coeff: Number, degree: int) -> "Polynomial":
        return cls([0] * degree + [coeff])

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    def __getitem__(self, k: int) -> Fraction:
        if k < 0:
            raise IndexError("negative degree")
        return self._c[k] if k < len(self._c) else Fraction(0)

    def __len__(self) -> int:
        return len(self._c)

    def __iter__(self):
        return iter(self._c)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self == Polynomial([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        return f"Polynomial([{', '.join(str(c) for c in self._c)}])"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        terms = []
        for k in range(len(self._c) - 1, -1, -1):
            c = self._c[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if k == 0:
                body = str(mag)
            else:
                coef = "" if mag == 1 else f"{mag}*"
                body = f"{coef}t" if k == 1 else f"{coef}t^{k}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self._c), len(other._c))
        return Polynomial(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self._c)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial(c * other for c in self._c)
        return poly_multiply(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = Polynomial([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, t: Number) -> Fraction:
        return poly_eval(self, t)

    def scale_variable(self, c: Number) -> "Polynomial":
        """Return ``p(c*t)``."""
        c = Fraction(c)
        out = []
        power = Fraction(1)
        for coeff in self._c:
            out.append(coeff * power)
            power *= c
        return Polynomial(out)

    def negate_variable(self) -> "Polynomial":
        """Return ``p(-t)``."""
        return self.scale_variable(-1)


def _coerce(x) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return Polynomial([x])
    raise TypeError(f"cannot combine Polynomial with {type(x).__name__}")


def poly_binomial(b: int, c: int, n: int) -> Polynomial:
    """Expand ``binom(b*t + c, n)`` as a polynomial in ``t``.

    The falling-factorial product ``(bt+c)(bt+c-1)...(bt+c-n+1) / n!``
    agrees with the integer binomial coefficient whenever ``bt + c >= 0``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if b < 1:
        raise ValueError("b must be a positive integer")
    nf = factorial(n)
    return Polynomial(Fraction(a, nf) for a in falling_coefficients(b, c, n))


def falling_coefficients(b: int, c: int, n: int) -> list[int]:
    """Integer coefficients of ``(bt+c)(bt+c-1)...(bt+c-n+1)``."""
    coeffs = [1]
    for i in range(n):
        shift = c - i
        nxt = [0] * (len(coeffs) + 1)
        for k, a in enumerate(coeffs):
            nxt[k] += a * shift
            nxt[k + 1] += a * b
        coeffs = nxt
    return coeffs


def poly_multiply(p: Polynomial, q: Polynomial) -> Polynomial:
    """Exact coefficient convolution."""
    if p.is_zero() or q.is_zero():
        return Polynomial()
    pc, qc = p.coefficients, q.coefficients
    out = [Fraction(0)] * (len(pc) + len(qc) - 1)
    for i, a in enumerate(pc):
        if a == 0:
            continue
        for j, b in enumerate(qc):
            out[i + j] += a * b
    return Polynomial(out)


def poly_eval(p: Polynomial, t: Number) -> Fraction:
    """Horner evaluation at a rational point."""
    t = Fraction(t)
    acc = Fraction(0)
    for c in reversed(p.coefficients):
        acc = acc * t + c
    return acc


def poly_interpolate(samples: Sequence[tuple[int, Number]]) -> Polynomial:
    """Interpolating polynomial through ``(t, value)`` samples.

    Uses Newton divided differences, then expands the Newton form into the
    monomial basis. Raises ``ValueError`` on duplicate abscissae.
    """
    if not samples:
        raise ValueError("need at least one sample")
    xs = [Fraction(t) for t, _ in samples]
    if len(set(xs)) != len(xs):
        raise ValueError("duplicate abscissae in sample set")
    table = [Fraction(v) for _, v in samples]
    m = len(xs)
    newton = [table[0]]
    for level in range(1, m):
        table = [
            (table[i + 1] - table[i]) / (xs[i + level] - xs[i])
            for i in range(m - level)
        ]
        newton.append(table[0])
    # Horner on the Newton form: c0 + (t-x0)(c1 + (t-x1)(c2 + ...))
    result = Polynomial([newton[-1]])
    for i in range(m - 2, -1, -1):
        result = result * Polynomial([-xs[i], 1]) + newton[i]
    return result


def hstar_transform(p: Polynomial) -> list[Fraction]:
    """Coordinates of ``p`` in the basis ``binom(t+n-j, n)``, ``j = 0..n``.

    ``n`` is the degree of ``p``. With ``p(t) = sum_j h_j binom(t+n-j, n)``,
    the values ``p(0), p(1), ...`` form a lower-triangular system in the
    ``h_j`` with unit diagonal, solved by forward substitution. A
    :class:`NonIntegralHStarWarning` is emitted if any entry is fractional,
    which means ``p`` is not the Ehrhart polynomial of a lattice polytope.
    """
    n = max(p.degree, 0)
    basis = [poly_binomial(1, n - j, n) for j in range(n + 1)]
    h: list[Fraction] = []
    for t in range(n + 1):
        acc = poly_eval(p, t)
        for j in range(t):
            acc -= h[j] * poly_eval(basis[j], t)
        # basis[t] evaluated at t is binom(n, n) = 1
        h.append(acc)
    if any(x.denominator != 1 for x in h):
        warnings.warn(
            "h*-vector has non-integer entries", NonIntegralHStarWarning, stacklevel=2
        )
    return h


def hstar_inverse(h: Sequence[Number]) -> Polynomial:
    """Rebuild ``sum_j h_j binom(t+n-j, n)`` with ``n = len(h) - 1``."""
    n = len(h) - 1
    total = Polynomial()
    for j, hj in enumerate(h):
        total = total + poly_binomial(1, n - j, n) * Fraction(hj)
    return total


def is_integral(values: Iterable[Fraction]) -> bool:
    return all(Fraction(v).denominator == 1 for v in values)


def coefficients_positive(p: Polynomial) -> bool:
    """True iff every coefficient up to the degree is strictly positive."""
    return not p.is_zero() and all(c > 0 for c in p.coefficients)
