"""Reproduction harness for every explicit polynomial, table and count.

Each check compares a computed value with a frozen expected value from
:data:`EXPECTED` and reports the first mismatch.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction as F
from importlib import resources
from typing import Callable, Iterable, Optional, Sequence

from . import bvalpha, counting, ehrhart, polytope
from .exactpoly import Polynomial, hstar_transform
from .polyfile import parse_polytope

# coefficient lists are ordered from t^0 upwards
EXPECTED: dict[str, object] = {
    "B3": [1, 9, 1719, 18591],
    "B4": [1, -45, 15363, 501921],
    "B4.geometry": (648, 972, 326),
    "Q7": {0: 1, 1: F(-11, 7), 2: F(1729, 5), 3: F(182027, 45), 4: F(64729, 3),
           6: F(1640113, 15), 7: F(24608351, 315)},
    "P1_28.a": 498205702352484,
    "P1_28": [
        1,
        -2541865828329,
        -248254149429756452913678525969,
        619688517319652881734980589359332452421773,
        5633398927928862087321748973638659814694960718075062244,
    ],
    "P1_6_730": [1, -971, -1215, 1271473119, 267104933370],
    "P1_6_730.hstar": [1, 268376404299, 2941968690561, 2934339846011, 265833460008],
    "P2_8_8599": [1, -9775, -289492130, -237422178, 12014689492982241, 19723429316570261841],
    "P2_8_8599.hstar": [
        1,
        19735444005536319994,
        512929309125860809290,
        1301746334895061755914,
        512689015334843195945,
        19711414627129339776,
    ],
    "P2_8_8599.points": 19735444005536320000,
    "P2_8_8599.boundary": 24029378406980224,
    "Q1_5_457": [1, -191, -648, 176889015, 19125906543],
    "Q1_5_457.hstar": [1, 19302794715, 210915640245, 209854304999, 18949017072],
    "Q3_9_46099": [
        1,
        -19167,
        -13464323277,
        -615783337806158,
        -340786031913009,
        331568043035736113553429,
        2178889417115552212024508181,
    ],
    "alpha_table": [
        [F(1, 2), 1],
        [F(1, 8), F(1, 2), 1],
        [F(1, 24), F(5, 36), F(1, 2), 1],
        [F(1, 64), F(1, 24), F(7, 48), F(1, 2), 1],
        [F(1, 160), F(9, 800), F(1, 24), F(3, 20), F(1, 2), 1],
        [F(1, 384), F(1, 720), F(127, 14400), F(1, 24), F(11, 72), F(1, 2), 1],
        [F(1, 896), F(-5, 3136), F(-1, 800), F(61, 8400), F(1, 24), F(13, 84), F(1, 2), 1],
    ],
    "ex14": [
        1,
        F(-6673, 630),
        F(11915, 1008),
        F(3838711, 9072),
        F(117857, 64),
        F(19058687, 4320),
        F(630095, 96),
        F(9074291, 1512),
        F(12477727, 4032),
        F(12477727, 18144),
    ],
}


def example14_text() -> str:
    return resources.files("smoothehrhart").joinpath("data/example14.poly").read_text("utf-8")


def example14() -> polytope.SmoothPolytope:
    return parse_polytope(example14_text()).to_polytope()


@dataclass
class CheckResult:
    item: str
    group: str
    ok: bool
    detail: str
    elapsed_s: float = 0.0


class Mismatch(AssertionError):
    pass


def _same(label: str, got: Sequence, want: Sequence) -> None:
    if len(got) != len(want):
        raise Mismatch(f"{label}: length {len(got)} != expected {len(want)}")
    for i, (g, w) in enumerate(zip(got, want)):
        if F(g) != F(w):
            raise Mismatch(f"{label}[{i}]: got {g}, expected {w}")


def _coeffs(p: Polynomial) -> list[F]:
    return list(p.coefficients)


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise Mismatch(msg)


# individual checks ------------------------------------------------------------


def check_b3_b4():
    _same("i(B_3)", _coeffs(ehrhart.ehrhart_B(3)), EXPECTED["B3"])
    p = ehrhart.ehrhart_chisel_series(ehrhart.ehrhart_basic("cube", 3), 8, 3, 81, [27, 9, 3, 1])
    _same("i(B_4)", _coeffs(p), EXPECTED["B4"])
    return "B_3 and B_4 symbolic polynomials match"


def check_b4_counting():
    B4 = polytope.b_polytope(4)
    r = polytope.validate(B4)
    _same("B_4 f-vector", (r.n_vertices, r.n_edges, r.n_facets), EXPECTED["B4.geometry"])
    _require(r.is_smooth, "B_4 is not smooth")
    p = counting.ehrhart_via_counting(B4)
    _same("counted i(B_4)", _coeffs(p), EXPECTED["B4"])
    return "counts of tB_4, t=0..3, interpolate to the printed polynomial"


def check_q7():
    p = ehrhart.ehrhart_Q(7, 5, 2)
    for k, v in EXPECTED["Q7"].items():
        if p[k] != v:
            raise Mismatch(f"[t^{k}] i(Q_7(5,2)): got {p[k]}, expected {v}")
    return f"all printed coefficients match; derived [t^5] = {p[5]}"


def check_giant():
    a = ehrhart.choose_a(1, 28)
    _require(a == EXPECTED["P1_28.a"], f"choose_a(1, 28) = {a}")
    _same("i(P^1(28,a))", _coeffs(ehrhart.ehrhart_P_prod(1, 28, a)), EXPECTED["P1_28"])
    _require(ehrhart.check_choice_k_bounds(1, 28).all_hold, "choice-k bounds fail at (1, 28)")
    return "all five coefficients match; choice bounds hold"


def check_p1_6_730():
    p = ehrhart.ehrhart_P_prod(1, 6, 730)
    _same("i(P^1(6,730))", _coeffs(p), EXPECTED["P1_6_730"])
    _same("mu(1,6,730)", ehrhart.mu_coeffs(1, 6, 730), EXPECTED["P1_6_730"])
    _same("h*(P^1(6,730))", hstar_transform(p), EXPECTED["P1_6_730.hstar"])
    return "polynomial, mu-formulas and h*-vector match"


def check_p2_8_8599():
    p = ehrhart.ehrhart_P_prod(2, 8, 8599)
    _same("i(P^2(8,8599))", _coeffs(p), EXPECTED["P2_8_8599"])
    _same("mu(2,8,8599)", ehrhart.mu_coeffs(2, 8, 8599), EXPECTED["P2_8_8599"])
    h = hstar_transform(p)
    _same("h*(P^2(8,8599))", h, EXPECTED["P2_8_8599.hstar"])
    points = p(1)
    _require(points == EXPECTED["P2_8_8599.points"], f"lattice points {points}")
    # i(P, 1) = h*_0 * C(n+1, n) + h*_1
    _require(h[1] + 6 * h[0] == points, "h*-vector does not give the lattice point count")
    boundary = points - (-1) ** 5 * p(-1)
    _require(boundary == EXPECTED["P2_8_8599.boundary"], f"boundary points {boundary}")
    return "polynomial, h*-vector, lattice and boundary point counts match"


def check_hexagon():
    p = ehrhart.ehrhart_Q_prod(1, 5, 457)
    _same("i(Q^1(5,457))", _coeffs(p), EXPECTED["Q1_5_457"])
    _same("h*(Q^1(5,457))", hstar_transform(p), EXPECTED["Q1_5_457.hstar"])
    _same("i(Q^3(9,46099))", _coeffs(ehrhart.ehrhart_Q_prod(3, 9, 46099)), EXPECTED["Q3_9_46099"])
    return "hexagon-prism products match"


def check_alpha_table():
    got = bvalpha.alpha_table(7)
    want = EXPECTED["alpha_table"]
    _require(len(got) == len(want), "row count")
    for n, (g, w) in enumerate(zip(got, want), start=1):
        _same(f"alpha table row n={n}", g, w)
    for n in range(1, 8):
        scan = bvalpha.scan_alpha_positivity(n)
        _require(scan.all_positive == (n <= 6), f"alpha positivity wrong at n={n}")
    return "35 entries match; alpha-positive exactly for n <= 6"


def check_reconstruction():
    for n in range(1, 9):
        for a, b in ((2, 1), (3, 1), (3, 2), (5, 2)):
            got = bvalpha.reconstruct_ehrhart_from_alpha(n, a, b)
            want = ehrhart.ehrhart_P_corner(n, a, b)
            if got != want:
                _same(f"alpha reconstruction n={n} a={a} b={b}", _coeffs(got), _coeffs(want))
    return "face-class sums equal (at+1)^n - binom(bt+n-1, n) for 32 cases"


def random_boxes(count: int = 200, seed: int = 20180530):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, 8)
        b = rng.randint(1, 19)
        yield [rng.randint(b + 1, 20) for _ in range(n)], b


def check_box_corner():
    for sides, b in random_boxes():
        rep = bvalpha.check_box_corner_positivity(sides, b)
        _require(rep.ok, f"bound chain fails for sides={sides}, b={b}: {rep}")
    return "200 random corner-chiseled boxes: positive with the full bound chain"


def check_example14():
    P = example14()
    rep = polytope.validate(P)
    _require(rep.is_smooth, "reflexive 9-polytope is not smooth")
    _require(rep.is_reflexive, "reflexive 9-polytope is not reflexive")
    want = Polynomial(EXPECTED["ex14"])
    _require(want[1] == F(-6673, 630), "printed linear coefficient")
    c = counting.count_points(P, 1).count
    _require(c == want(1), f"|P cap Z^9| = {c}, polynomial gives {want(1)}")
    return f"{rep.n_vertices} integral vertices, smooth, reflexive; {c} lattice points"


def oracle_instances():
    """Small instances with both a closed form and a countable polytope."""
    cube = polytope.make_cube
    return [
        ("B_1", polytope.b_polytope(1), ehrhart.ehrhart_B(1)),
        ("B_2", polytope.b_polytope(2), ehrhart.ehrhart_B(2)),
        ("Q_2(3,1)", polytope.chisel_all(cube(2, 3), 1), ehrhart.ehrhart_Q(2, 3, 1)),
        ("Q_3(3,1)", polytope.chisel_all(cube(3, 3), 1), ehrhart.ehrhart_Q(3, 3, 1)),
        ("Q_3(5,2)", polytope.chisel_all(cube(3, 5), 2), ehrhart.ehrhart_Q(3, 5, 2)),
        ("P_2(3,1)", polytope.chisel_vertex(cube(2, 3), 0, 1), ehrhart.ehrhart_P_corner(2, 3, 1)),
        ("P_3(2,1)", polytope.chisel_vertex(cube(3, 2), 0, 1), ehrhart.ehrhart_P_corner(3, 2, 1)),
        (
            "box(2,3) corner 1",
            polytope.chisel_vertex(polytope.make_box([2, 3]), 0, 1),
            ehrhart.ehrhart_box_corner([2, 3], 1),
        ),
        ("H_1", polytope.h_polytope(1), ehrhart.ehrhart_H(1)),
    ]


def check_oracle():
    for name, P, sym in oracle_instances():
        got = counting.ehrhart_via_counting(P)
        if got != sym:
            _same(f"counted {name}", _coeffs(got), _coeffs(sym))
    return "symbolic = interpolated counts for 9 small instances"


def check_geometry():
    for k in (1, 2, 3, 4):
        B = polytope.b_polytope(k)
        r = polytope.validate(B)
        _require(r.n_vertices == 8 * 3**k, f"B_{k} has {r.n_vertices} vertices")
        _require(r.n_facets == 4 * 3**k + 2, f"B_{k} has {r.n_facets} facets")
        _require(r.is_smooth, f"B_{k} is not smooth")
    for P in (polytope.make_cube(3, 3), polytope.make_cube(4, 5), polytope.make_hexagon_prism(3)):
        Q = polytope.chisel_all(P, 1)
        _require(Q.n_vertices == P.dim * P.n_vertices, "vertex count law fails")
        _require(polytope.validate(Q).is_smooth, "chiseled polytope not smooth")
    H = polytope.h_polytope(2)
    _require(polytope.validate(H).is_smooth, "H_2 not smooth")
    return "vertex/facet laws and smoothness hold on B_1..B_4 and chiseled cubes/prisms"


def check_search():
    w = ehrhart.search_negative(1, 6, candidates=[730])
    _require(any(x.k == 6 and x.a == 730 for x in w), "(k=6, a=730) is not a witness")
    first = ehrhart.search_negative(0, 6)
    _require(first and first[0].k == 4, "first negative linear coefficient is not at k=4")
    w2 = ehrhart.search_negative(2, 8, candidates=[8599], k_min=8)
    _require(w2 and w2[0].negative == (1, 2, 3), "(n=2, k=8, a=8599) is not a witness")
    return "published witnesses confirmed; B_k first negative at k=4"


@dataclass(frozen=True)
class Check:
    item: str
    group: str
    run: Callable[[], str]


CHECKS: list[Check] = [
    Check("B3-B4", "B4", check_b3_b4),
    Check("B4-counting", "B4", check_b4_counting),
    Check("Q7", "Q7", check_q7),
    Check("P1-28", "giant", check_giant),
    Check("P1-6-730", "products", check_p1_6_730),
    Check("P2-8-8599", "products", check_p2_8_8599),
    Check("hexagon", "hexagon", check_hexagon),
    Check("alpha-table", "alpha", check_alpha_table),
    Check("alpha-reconstruction", "alpha", check_reconstruction),
    Check("box-corner", "alpha", check_box_corner),
    Check("example14", "ex14", check_example14),
    Check("oracle", "oracle", check_oracle),
    Check("geometry", "geometry", check_geometry),
    Check("search", "search", check_search),
]


def reproduce(only: Optional[Iterable[str]] = None) -> list[CheckResult]:
    """Run the checks whose item or group name is in ``only`` (all if None)."""
    wanted = None if only is None else {x.lower() for x in only}
    out = []
    for chk in CHECKS:
        if wanted is not None and chk.item.lower() not in wanted and chk.group.lower() not in wanted:
            continue
        start = time.perf_counter()
        try:
            detail = chk.run()
            ok = True
        except Mismatch as exc:
            ok, detail = False, str(exc)
        out.append(CheckResult(chk.item, chk.group, ok, detail, time.perf_counter() - start))
    return out
