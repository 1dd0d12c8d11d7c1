"""Plain-text polytope files.

Format (whitespace separated, ``#`` starts a comment)::

    DIM n
    INEQ f
    a_1 ... a_n rhs        # f lines, meaning <a, x> <= rhs
    VERT v                 # optional block
    x_1 ... x_n            # v lines
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

from .polytope import Halfspace, IntVector, PolytopeError, SmoothPolytope, from_halfspaces


class PolyFileError(PolytopeError):
    pass


@dataclass(frozen=True)
class PolyFile:
    dim: int
    halfspaces: tuple[Halfspace, ...]
    vertices: Optional[tuple[IntVector, ...]] = None

    def to_polytope(self) -> SmoothPolytope:
        return from_halfspaces(self.halfspaces, self.dim, self.vertices)


def parse_polytope(text: str) -> PolyFile:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line.split())
    pos = 0

    def header(name: str) -> int:
        nonlocal pos
        if pos >= len(lines) or len(lines[pos]) != 2 or lines[pos][0].upper() != name:
            raise PolyFileError(f"expected '{name} <count>' at record {pos + 1}")
        try:
            val = int(lines[pos][1])
        except ValueError:
            raise PolyFileError(f"bad count in {name} header") from None
        pos += 1
        return val

    def rows(count: int, width: int) -> list[tuple[int, ...]]:
        nonlocal pos
        out = []
        for _ in range(count):
            if pos >= len(lines):
                raise PolyFileError("unexpected end of file")
            toks = lines[pos]
            if len(toks) != width:
                raise PolyFileError(f"expected {width} integers, got {len(toks)}: {' '.join(toks)}")
            try:
                out.append(tuple(int(t) for t in toks))
            except ValueError:
                raise PolyFileError(f"non-integer entry in: {' '.join(toks)}") from None
            pos += 1
        return out

    dim = header("DIM")
    if dim < 1:
        raise PolyFileError("DIM must be positive")
    f = header("INEQ")
    hs = tuple(Halfspace(r[:-1], r[-1]) for r in rows(f, dim + 1))
    verts = None
    if pos < len(lines):
        v = header("VERT")
        verts = tuple(rows(v, dim))
    if pos != len(lines):
        raise PolyFileError(f"trailing content at record {pos + 1}")
    return PolyFile(dim, hs, verts)


def read_polytope(path: Union[str, Path]) -> PolyFile:
    return parse_polytope(Path(path).read_text(encoding="utf-8"))


def format_polytope(P: SmoothPolytope, include_vertices: bool = True) -> str:
    out = [f"DIM {P.dim}", f"INEQ {len(P.halfspaces)}"]
    out += [" ".join(map(str, h.normal + (h.rhs,))) for h in P.halfspaces]
    if include_vertices:
        out.append(f"VERT {len(P.vertices)}")
        out += [" ".join(map(str, v)) for v in P.vertices]
    return "\n".join(out) + "\n"


def write_polytope(P: SmoothPolytope, path: Union[str, Path], include_vertices: bool = True) -> None:
    Path(path).write_text(format_polytope(P, include_vertices), encoding="utf-8")
