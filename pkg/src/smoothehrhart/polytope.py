"""Smooth lattice polytopes with explicit vertex, edge and facet data.

A :class:`SmoothPolytope` carries both representations: integer vertices
with the edge graph (primitive directions and integer edge lengths), and the
facet inequalities ``<a, x> <= rhs``. Constructions here (boxes, the hexagon
prism, chiseling, products, dilation) keep both in sync combinatorially, so
no convex-hull computation is needed except in :func:`enumerate_vertices`.

Edge length convention: an edge whose endpoints differ by ``m * u`` with
``u`` primitive has integer length ``m``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Iterable, Optional, Sequence

import numpy as np

from ._linalg import det, kernel_vector, solve

IntVector = tuple[int, ...]


class PolytopeError(ValueError):
    """Structurally invalid polytope data."""


class ChiselError(PolytopeError):
    """A chisel depth is too large for the polytope's edges."""


class UnboundedError(PolytopeError):
    """A halfspace system does not describe a bounded set."""


def _gcd_all(values: Iterable[int]) -> int:
    g = 0
    for v in values:
        g = gcd(g, v)
    return g


@dataclass(frozen=True, order=True)
class Halfspace:
    """The inequality ``<normal, x> <= rhs``."""

    normal: IntVector
    rhs: int

    def __post_init__(self):
        if not any(self.normal):
            raise PolytopeError("halfspace normal must be nonzero")

    def normalized(self) -> "Halfspace":
        """Divide through by the common gcd of normal and rhs."""
        g = _gcd_all(self.normal + (self.rhs,))
        if g <= 1:
            return self
        return Halfspace(tuple(a // g for a in self.normal), self.rhs // g)

    @property
    def is_primitive(self) -> bool:
        return _gcd_all(self.normal) == 1

    def value(self, x: Sequence[int]) -> int:
        return sum(a * v for a, v in zip(self.normal, x))


@dataclass(frozen=True)
class Edge:
    """Edge ``vertices[i] -> vertices[j]`` with ``i < j``.

    ``vertices[j] == vertices[i] + length * direction`` and ``direction`` is
    primitive.
    """

    i: int
    j: int
    direction: IntVector
    length: int


@dataclass(frozen=True)
class ValidationReport:
    is_smooth: bool
    is_reflexive: bool
    min_edge_length: int
    n_vertices: int
    n_edges: int
    n_facets: int
    redundant_halfspaces: int = 0
    problems: tuple[str, ...] = ()


@dataclass(frozen=True, eq=True)
class SmoothPolytope:
    """Lattice polytope with vertices, edges and facet inequalities.

    Instances are canonical: vertices sorted lexicographically, edges sorted
    by endpoint indices, halfspaces sorted. Two polytopes built by different
    routes compare equal iff their data agree.
    """

    dim: int
    vertices: tuple[IntVector, ...]
    edges: tuple[Edge, ...]
    halfspaces: tuple[Halfspace, ...] = field(repr=False)

    @classmethod
    def assemble(
        cls,
        dim: int,
        vertices: Iterable[Sequence[int]],
        edges: Iterable[tuple[Sequence[int], Sequence[int]]],
        halfspaces: Iterable[Halfspace],
    ) -> "SmoothPolytope":
        """Build a canonical polytope; edges are given as coordinate pairs."""
        verts = sorted({tuple(v) for v in vertices})
        index = {v: k for k, v in enumerate(verts)}
        edge_set = {}
        for p, q in edges:
            p, q = tuple(p), tuple(q)
            try:
                i, j = index[p], index[q]
            except KeyError as exc:
                raise PolytopeError(f"edge endpoint {exc.args[0]} is not a vertex") from None
            if i == j:
                raise PolytopeError(f"degenerate edge at vertex {p}")
            if i > j:
                i, j = j, i
            if (i, j) in edge_set:
                continue
            diff = [b - a for a, b in zip(verts[i], verts[j])]
            m = _gcd_all(diff)
            edge_set[(i, j)] = Edge(i, j, tuple(d // m for d in diff), m)
        hs = sorted({h.normalized() for h in halfspaces})
        return cls(dim, tuple(verts), tuple(edge_set[k] for k in sorted(edge_set)), tuple(hs))

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_facets(self) -> int:
        return len(self.halfspaces)

    @cached_property
    def incidence(self) -> tuple[tuple[tuple[int, int, IntVector, int], ...], ...]:
        """Per vertex: ``(edge index, neighbour, outgoing direction, length)``."""
        inc: list[list] = [[] for _ in self.vertices]
        for k, e in enumerate(self.edges):
            inc[e.i].append((k, e.j, e.direction, e.length))
            inc[e.j].append((k, e.i, tuple(-d for d in e.direction), e.length))
        return tuple(tuple(x) for x in inc)

    @property
    def min_edge_length(self) -> int:
        return min((e.length for e in self.edges), default=0)

    def vertex_index(self, v: Sequence[int]) -> int:
        try:
            return self.vertices.index(tuple(v))
        except ValueError:
            raise PolytopeError(f"{tuple(v)} is not a vertex") from None

    def contains(self, x: Sequence[int]) -> bool:
        return all(h.value(x) <= h.rhs for h in self.halfspaces)


# constructors ---------------------------------------------------------------


def make_box(sides: Sequence[int]) -> SmoothPolytope:
    """The box ``[0, a_1] x ... x [0, a_n]``."""
    sides = [int(a) for a in sides]
    if not sides:
        raise PolytopeError("a box needs at least one side")
    if any(a < 1 for a in sides):
        raise PolytopeError("box sides must be positive")
    n = len(sides)
    verts = [tuple(a * bit for a, bit in zip(sides, bits)) for bits in itertools.product((0, 1), repeat=n)]
    edges = []
    for v in verts:
        for i in range(n):
            if v[i] == 0:
                w = list(v)
                w[i] = sides[i]
                edges.append((v, tuple(w)))
    hs = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        hs.append(Halfspace(tuple(e), sides[i]))
        e[i] = -1
        hs.append(Halfspace(tuple(e), 0))
    return SmoothPolytope.assemble(n, verts, edges, hs)


def make_cube(n: int, scale: int = 1) -> SmoothPolytope:
    return make_box([scale] * n)


_HEXAGON = ((1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1), (1, 0))
_HEXAGON_FACETS = ((1, 0), (0, 1), (-1, 0), (0, -1), (1, -1), (-1, 1))


def make_hexagon_prism(scale: int = 1) -> SmoothPolytope:
    """``scale * (H x [0, 1])`` for the smooth hexagon ``H``."""
    if scale < 1:
        raise PolytopeError("scale must be positive")
    verts = []
    edges = []
    for z in (0, scale):
        ring = [(scale * x, scale * y, z) for x, y in _HEXAGON]
        verts += ring
        edges += [(ring[k], ring[(k + 1) % 6]) for k in range(6)]
    edges += [((scale * x, scale * y, 0), (scale * x, scale * y, scale)) for x, y in _HEXAGON]
    hs = [Halfspace((a, b, 0), scale) for a, b in _HEXAGON_FACETS]
    hs += [Halfspace((0, 0, 1), scale), Halfspace((0, 0, -1), 0)]
    return SmoothPolytope.assemble(3, verts, edges, hs)


# operations -----------------------------------------------------------------


def _add(v: Sequence[int], u: Sequence[int], s: int = 1) -> IntVector:
    return tuple(a + s * b for a, b in zip(v, u))


def _cut_halfspace(v: IntVector, directions: Sequence[IntVector], b: int) -> Halfspace:
    # w with <w, u_i> = 1 for all i; integral because the u_i form a lattice basis
    w = solve(directions, [1] * len(directions))
    if w is None or any(x.denominator != 1 for x in w):
        raise ChiselError(f"edge directions at vertex {v} are not a lattice basis")
    w = tuple(int(x) for x in w)
    return Halfspace(tuple(-x for x in w), -(sum(a * c for a, c in zip(w, v)) + b))


def chisel_vertex(P: SmoothPolytope, v: int, b: int) -> SmoothPolytope:
    """Chisel off vertex ``v`` at lattice distance ``b``."""
    if b < 1:
        raise ChiselError("chisel depth must be positive")
    inc = P.incidence[v]
    if len(inc) != P.dim:
        raise ChiselError(f"vertex {P.vertices[v]} has {len(inc)} edges, expected {P.dim}")
    vert = P.vertices[v]
    new = []
    for k, _, u, m in inc:
        if m < b + 1:
            e = P.edges[k]
            raise ChiselError(
                f"edge {P.vertices[e.i]}-{P.vertices[e.j]} has length {m} < {b + 1}"
            )
        new.append(_add(vert, u, b))
    touched = {k for k, *_ in inc}
    edges = [
        (P.vertices[e.i], P.vertices[e.j]) for k, e in enumerate(P.edges) if k not in touched
    ]
    for (_, w, _, _), p in zip(inc, new):
        edges.append((p, P.vertices[w]))
    edges += list(itertools.combinations(new, 2))
    verts = [x for k, x in enumerate(P.vertices) if k != v] + new
    hs = list(P.halfspaces) + [_cut_halfspace(vert, [u for _, _, u, _ in inc], b)]
    return SmoothPolytope.assemble(P.dim, verts, edges, hs)


def chisel_all(P: SmoothPolytope, b: int) -> SmoothPolytope:
    """Full chiseling: cut every vertex at distance ``b`` simultaneously."""
    if b < 1:
        raise ChiselError("chisel depth must be positive")
    for e in P.edges:
        if e.length < 2 * b + 1:
            raise ChiselError(
                f"edge {P.vertices[e.i]}-{P.vertices[e.j]} has length {e.length} < {2 * b + 1}"
            )
    verts = []
    edges = []
    hs = list(P.halfspaces)
    for v, inc in enumerate(P.incidence):
        if len(inc) != P.dim:
            raise ChiselError(f"vertex {P.vertices[v]} has {len(inc)} edges, expected {P.dim}")
        x = P.vertices[v]
        cut = [_add(x, u, b) for _, _, u, _ in inc]
        verts += cut
        edges += list(itertools.combinations(cut, 2))
        hs.append(_cut_halfspace(x, [u for _, _, u, _ in inc], b))
    for e in P.edges:
        p = _add(P.vertices[e.i], e.direction, b)
        q = _add(P.vertices[e.j], e.direction, -b)
        edges.append((p, q))
    return SmoothPolytope.assemble(P.dim, verts, edges, hs)


@dataclass(frozen=True)
class ChiselPlan:
    """A base polytope and the depths ``(b_1, ..., b_k)`` of full chiselings."""

    base: SmoothPolytope
    depths: tuple[int, ...] = ()

    @classmethod
    def cube(cls, n: int, scale: int, depths: Sequence[int]) -> "ChiselPlan":
        return cls(make_cube(n, scale), tuple(depths))

    @classmethod
    def hexagon_prism(cls, scale: int, depths: Sequence[int]) -> "ChiselPlan":
        return cls(make_hexagon_prism(scale), tuple(depths))


def apply_chisel_plan(plan: ChiselPlan) -> SmoothPolytope:
    P = plan.base
    for stage, b in enumerate(plan.depths, start=1):
        try:
            P = chisel_all(P, b)
        except ChiselError as exc:
            raise ChiselError(f"stage {stage} (depth {b}): {exc}") from None
    return P


def b_polytope(k: int) -> SmoothPolytope:
    """``B_k``: the 3-cube scaled by ``3**k`` chiseled by ``3**(k-1), ..., 1``."""
    return apply_chisel_plan(ChiselPlan.cube(3, 3**k, [3**j for j in range(k - 1, -1, -1)]))


def h_polytope(k: int) -> SmoothPolytope:
    """``H_k``: the hexagon prism analogue of :func:`b_polytope`."""
    return apply_chisel_plan(ChiselPlan.hexagon_prism(3**k, [3**j for j in range(k - 1, -1, -1)]))


def product(P: SmoothPolytope, Q: SmoothPolytope) -> SmoothPolytope:
    verts = [p + q for p in P.vertices for q in Q.vertices]
    edges = []
    for e in P.edges:
        for q in Q.vertices:
            edges.append((P.vertices[e.i] + q, P.vertices[e.j] + q))
    for p in P.vertices:
        for e in Q.edges:
            edges.append((p + Q.vertices[e.i], p + Q.vertices[e.j]))
    zq = (0,) * Q.dim
    zp = (0,) * P.dim
    hs = [Halfspace(h.normal + zq, h.rhs) for h in P.halfspaces]
    hs += [Halfspace(zp + h.normal, h.rhs) for h in Q.halfspaces]
    return SmoothPolytope.assemble(P.dim + Q.dim, verts, edges, hs)


def dilate(P: SmoothPolytope, c: int) -> SmoothPolytope:
    if c < 1:
        raise PolytopeError("dilation factor must be positive")
    verts = tuple(tuple(c * x for x in v) for v in P.vertices)
    edges = tuple(Edge(e.i, e.j, e.direction, c * e.length) for e in P.edges)
    hs = tuple(sorted(Halfspace(h.normal, c * h.rhs).normalized() for h in P.halfspaces))
    return SmoothPolytope(P.dim, verts, edges, hs)


# validation -----------------------------------------------------------------


def _slack_matrix(P: SmoothPolytope) -> np.ndarray:
    """``rhs - A v`` for every (vertex, halfspace) pair."""
    A = [h.normal for h in P.halfspaces]
    r = [h.rhs for h in P.halfspaces]
    V = P.vertices
    big = max((abs(x) for row in A for x in row), default=0) * max(
        (abs(x) for v in V for x in v), default=0
    ) * max(P.dim, 1) + max((abs(x) for x in r), default=0)
    dtype = np.int64 if big < 2**62 else object
    An = np.array(A, dtype=dtype).reshape(len(A), P.dim)
    Vn = np.array(V, dtype=dtype).reshape(len(V), P.dim)
    return np.array(r, dtype=dtype)[None, :] - Vn @ An.T


def validate(P: SmoothPolytope) -> ValidationReport:
    """Check structure, smoothness and reflexivity.

    Raises :class:`PolytopeError` if the data are inconsistent: bad edge
    endpoints, an infeasible vertex, or a vertex that is not tight on at
    least ``dim`` halfspaces.
    """
    n = P.dim
    nv = len(P.vertices)
    for e in P.edges:
        if not (0 <= e.i < nv and 0 <= e.j < nv):
            raise PolytopeError(f"edge endpoint out of range: ({e.i}, {e.j})")
        if _add(P.vertices[e.i], e.direction, e.length) != P.vertices[e.j]:
            raise PolytopeError(f"edge ({e.i}, {e.j}) does not match its direction and length")
        if _gcd_all(e.direction) != 1:
            raise PolytopeError(f"edge ({e.i}, {e.j}) direction is not primitive")
    problems = []
    redundant = 0
    if P.halfspaces and nv:
        slack = _slack_matrix(P)
        if (slack < 0).any():
            vi, hi = map(int, np.argwhere(slack < 0)[0])
            raise PolytopeError(
                f"vertex {P.vertices[vi]} violates halfspace {P.halfspaces[hi]}"
            )
        tight = slack == 0
        per_vertex = tight.sum(axis=1)
        if (per_vertex < n).any():
            vi = int(np.argmax(per_vertex < n))
            raise PolytopeError(f"vertex {P.vertices[vi]} is tight on fewer than {n} facets")
        redundant = int((tight.sum(axis=0) < n).sum())
        if redundant:
            problems.append(f"{redundant} halfspaces are not facet-defining")

    smooth = True
    for v, inc in enumerate(P.incidence):
        if len(inc) != n:
            smooth = False
            problems.append(f"vertex {P.vertices[v]} has {len(inc)} edges")
            continue
        if abs(det([u for _, _, u, _ in inc])) != 1:
            smooth = False
            problems.append(f"vertex {P.vertices[v]} is not unimodular")

    reflexive = bool(P.halfspaces) and all(
        h.is_primitive and h.rhs == 1 for h in P.halfspaces
    )
    return ValidationReport(
        is_smooth=smooth,
        is_reflexive=reflexive,
        min_edge_length=P.min_edge_length,
        n_vertices=nv,
        n_edges=len(P.edges),
        n_facets=len(P.halfspaces),
        redundant_halfspaces=redundant,
        problems=tuple(problems),
    )


# vertex enumeration ---------------------------------------------------------


def check_bounded(halfspaces: Sequence[Halfspace], dim: int) -> None:
    """Raise :class:`UnboundedError` unless ``{d : A d <= 0} == {0}``.

    The recession cone is pointed when the normals have full rank; its
    extreme rays are then 1-dimensional kernels of ``dim - 1`` normals, so
    testing each such candidate direction (both signs) is exhaustive.
    """
    A = [h.normal for h in halfspaces]
    if len(A) <= dim:
        raise UnboundedError(f"{len(A)} halfspaces cannot bound a {dim}-dimensional set")
    if dim == 1:
        if not (any(a[0] > 0 for a in A) and any(a[0] < 0 for a in A)):
            raise UnboundedError("one-dimensional system is unbounded")
        return
    for rows in itertools.combinations(A, dim - 1):
        d = kernel_vector(rows, dim)
        if d is None:
            continue
        vals = [sum(a * x for a, x in zip(row, d)) for row in A]
        if all(x <= 0 for x in vals) or all(x >= 0 for x in vals):
            raise UnboundedError(f"direction {tuple(str(x) for x in d)} is a recession direction")


def rational_vertices(halfspaces: Sequence[Halfspace], dim: int) -> list[tuple[Fraction, ...]]:
    """All vertices of ``{x : A x <= rhs}`` as exact rational points."""
    A = [h.normal for h in halfspaces]
    r = [h.rhs for h in halfspaces]
    found = set()
    for idx in itertools.combinations(range(len(A)), dim):
        x = solve([A[i] for i in idx], [r[i] for i in idx])
        if x is None:
            continue
        if all(sum(a * c for a, c in zip(row, x)) <= rr for row, rr in zip(A, r)):
            found.add(tuple(x))
    return sorted(found)


def enumerate_vertices(halfspaces: Sequence[Halfspace], dim: int) -> list[IntVector]:
    """Vertices of a bounded lattice polytope given by halfspaces.

    Every ``dim``-subset of inequalities is solved exactly; feasible
    solutions are kept and deduplicated. Non-integral vertices are an error.
    """
    check_bounded(halfspaces, dim)
    verts = rational_vertices(halfspaces, dim)
    if not verts:
        raise PolytopeError("halfspace system is empty")
    out = []
    for x in verts:
        if any(c.denominator != 1 for c in x):
            raise PolytopeError(f"non-integral vertex {tuple(str(c) for c in x)}")
        out.append(tuple(int(c) for c in x))
    return out


def from_halfspaces(
    halfspaces: Sequence[Halfspace], dim: int, vertices: Optional[Sequence[Sequence[int]]] = None
) -> SmoothPolytope:
    """Build a polytope from facets, reconstructing the edge graph.

    Two vertices are joined when they share ``dim - 1`` tight facets, which
    is exact for simple polytopes.
    """
    halfspaces = [h.normalized() for h in halfspaces]
    if vertices is None:
        vertices = enumerate_vertices(halfspaces, dim)
    vertices = [tuple(v) for v in vertices]
    tight = [frozenset(k for k, h in enumerate(halfspaces) if h.value(v) == h.rhs) for v in vertices]
    edges = []
    for a, b in itertools.combinations(range(len(vertices)), 2):
        if len(tight[a] & tight[b]) >= dim - 1:
            edges.append((vertices[a], vertices[b]))
    return SmoothPolytope.assemble(dim, vertices, edges, halfspaces)
