"""Brute-force lattice-point counting in dilates of polytopes.

Points are enumerated coordinate by coordinate. With ``x_1..x_j`` fixed,
each inequality bounds ``x_{j+1}`` once the unfixed tail is replaced by its
most favourable value inside the bounding box of ``tP``; the last coordinate
is solved as an exact interval, so only prefixes are visited. The first
coordinate's range is cut into slabs which are counted independently and
summed, so the result does not depend on the number of threads.

The inner loop runs in a compiled int64 kernel when it is available and the
input is certified not to overflow; otherwise the pure-Python kernel is used.
"""

from __future__ import annotations

import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, comb, floor
from typing import Optional, Sequence, Union

from . import _kernel_py
from .exactpoly import Polynomial, poly_interpolate
from .polytope import Halfspace, SmoothPolytope, UnboundedError, check_bounded, rational_vertices

log = logging.getLogger(__name__)

try:
    if os.environ.get("SMOOTHEHRHART_PURE_PYTHON"):
        raise ImportError("compiled kernel disabled by environment")
    from . import _kernel as _kernel_c
except ImportError:  # pragma: no cover - depends on the build
    _kernel_c = None

BACKEND = "cython" if _kernel_c is not None else "python"
DEFAULT_BUDGET = 2 * 10**9
DEFAULT_SLABS = 64
_INT64_SAFE = 2**62


class BudgetExceededError(RuntimeError):
    """Enumeration would visit more candidate points than allowed."""


@dataclass(frozen=True)
class CountSample:
    t: int
    count: int
    strict: bool = False


Region = Union[SmoothPolytope, tuple[Sequence[Halfspace], int]]


def _unpack(region: Region):
    if isinstance(region, SmoothPolytope):
        return list(region.halfspaces), region.dim, region.vertices
    halfspaces, dim = region
    return list(halfspaces), dim, None


def _bounding_box(halfspaces, dim, vertices):
    """Integer box containing ``P``; sound, not necessarily tight."""
    if vertices is not None:
        return (
            [min(v[i] for v in vertices) for i in range(dim)],
            [max(v[i] for v in vertices) for i in range(dim)],
        )
    if comb(len(halfspaces), dim) <= 20000:
        check_bounded(halfspaces, dim)
        verts = rational_vertices(halfspaces, dim)
        if not verts:
            return None
        return (
            [floor(min(v[i] for v in verts)) for i in range(dim)],
            [ceil(max(v[i] for v in verts)) for i in range(dim)],
        )
    return _lp_box(halfspaces, dim)


def _lp_box(halfspaces, dim):
    # float LP, widened by one unit: the box only needs to over-approximate
    import numpy as np
    from scipy.optimize import linprog

    A = np.array([h.normal for h in halfspaces], dtype=float)
    b = np.array([h.rhs for h in halfspaces], dtype=float)
    lo, hi = [], []
    for i in range(dim):
        c = np.zeros(dim)
        bounds = []
        for sign in (1, -1):
            c[i] = sign
            res = linprog(c, A_ub=A, b_ub=b, bounds=[(None, None)] * dim, method="highs")
            if res.status == 3:
                raise UnboundedError(f"coordinate {i} is unbounded")
            if res.status == 2:
                return None
            if res.status != 0:
                raise RuntimeError(f"LP for bounding box failed: {res.message}")
            bounds.append(sign * res.fun)
        lo.append(floor(bounds[0]) - 1)
        hi.append(ceil(bounds[1]) + 1)
    return lo, hi


def _tail_minima(A, lo, hi):
    m, n = len(A), len(lo)
    tm = [[0] * n for _ in range(m)]
    for r in range(m):
        acc = 0
        for j in range(n - 1, -1, -1):
            tm[r][j] = acc
            a = A[r][j]
            acc += min(a * lo[j], a * hi[j])
    return tm


def _fits_int64(A, rhs, lo, hi) -> bool:
    mags = [max(abs(l), abs(h)) for l, h in zip(lo, hi)]
    for row, b in zip(A, rhs):
        if abs(b) + 2 * sum(abs(a) * x for a, x in zip(row, mags)) >= _INT64_SAFE:
            return False
    span = 1
    for l, h in zip(lo, hi):
        span *= h - l + 1
    return span < _INT64_SAFE


def _slabs(lo: int, hi: int, k: int) -> list[tuple[int, int]]:
    width = hi - lo + 1
    k = max(1, min(k, width))
    edges = [lo + (width * i) // k for i in range(k + 1)]
    return [(edges[i], edges[i + 1] - 1) for i in range(k)]


def _per_slab(region, t, strict, threads, budget, slabs, backend) -> list[int]:
    if t < 0:
        raise ValueError("dilation factor must be nonnegative")
    halfspaces, dim, vertices = _unpack(region)
    if strict and t == 0:
        return [0]
    box = _bounding_box(halfspaces, dim, vertices)
    if box is None:
        return [0]
    lo = [t * x for x in box[0]]
    hi = [t * x for x in box[1]]
    A = [list(h.normal) for h in halfspaces]
    rhs = [t * h.rhs - (1 if strict else 0) for h in halfspaces]
    tm = _tail_minima(A, lo, hi)

    if backend is None:
        backend = BACKEND
    if backend not in ("cython", "python"):
        raise ValueError(f"unknown backend {backend!r}")
    if backend == "cython" and (_kernel_c is None or not _fits_int64(A, rhs, lo, hi)):
        backend = "python"
    if backend == "cython":
        import numpy as np

        kernel = _kernel_c.count_range
        A_ = np.array(A, dtype=np.int64).reshape(len(A), dim)
        tm_ = np.array(tm, dtype=np.int64).reshape(len(A), dim)
        rhs_, lo_, hi_ = (np.array(x, dtype=np.int64) for x in (rhs, lo, hi))
    else:
        kernel = _kernel_py.count_range
        A_, rhs_, lo_, hi_, tm_ = A, rhs, lo, hi, tm

    parts = _slabs(lo[0], hi[0], slabs)
    workers = threads or os.cpu_count() or 1

    def run(part):
        return kernel(A_, rhs_, lo_, hi_, tm_, part[0], part[1], budget)

    if workers > 1 and len(parts) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, parts))
    else:
        results = [run(p) for p in parts]
    nodes = sum(r[1] for r in results)
    if any(r[0] is None for r in results) or nodes > budget:
        raise BudgetExceededError(
            f"counting t={t} needs more than {budget} candidate evaluations; "
            "use the symbolic engine for this family"
        )
    log.debug("count t=%d strict=%s backend=%s nodes=%d", t, strict, backend, nodes)
    return [r[0] for r in results]


def count_points(
    region: Region,
    t: int,
    strict: bool = False,
    *,
    threads: Optional[int] = None,
    budget: int = DEFAULT_BUDGET,
    slabs: int = DEFAULT_SLABS,
    backend: Optional[str] = None,
) -> CountSample:
    """Count ``x`` in ``Z^n`` with ``<a_i, x> <= t * rhs_i`` (``<`` if strict).

    ``region`` is a :class:`SmoothPolytope` or a ``(halfspaces, dim)`` pair.
    ``budget`` caps the number of enumeration-tree nodes (prefix
    candidates) summed over all slabs. ``backend`` forces ``"cython"`` or
    ``"python"``; the compiled kernel silently falls back to Python when
    the input could overflow int64.
    """
    parts = _per_slab(region, t, strict, threads, budget, slabs, backend)
    return CountSample(t, sum(parts), strict)


def count_interior(region: Region, t: int, **kwargs) -> CountSample:
    return count_points(region, t, strict=True, **kwargs)


def slab_counts(
    region: Region,
    t: int,
    slabs: int,
    *,
    threads: Optional[int] = None,
    budget: int = DEFAULT_BUDGET,
    backend: Optional[str] = None,
) -> list[int]:
    """Per-slab counts of the closed dilate ``tP``; they sum to the total."""
    return _per_slab(region, t, False, threads, budget, slabs, backend)


def ehrhart_via_counting(
    P: SmoothPolytope, progress: bool = False, **kwargs
) -> Polynomial:
    """Interpolate counts of ``tP`` at ``t = 0..dim``."""
    samples = []
    for t in range(P.dim + 1):
        c = count_points(P, t, **kwargs)
        if progress:
            log.info("t=%d: %d points", t, c.count)
        samples.append((t, c.count))
    return poly_interpolate(samples)


def reciprocity_value(p: Polynomial, t: int, dim: int) -> Fraction:
    """``(-1)^dim * p(-t)``, the interior count predicted by reciprocity."""
    return (-1) ** dim * p(-t)
