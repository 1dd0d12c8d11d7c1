from fractions import Fraction as F

import pytest

from smoothehrhart import counting as ct
from smoothehrhart import polytope as pt
from smoothehrhart.exactpoly import Polynomial, poly_eval
from smoothehrhart.reproduce import EXPECTED, example14, oracle_instances

from conftest import naive_count


def H(*row):
    return pt.Halfspace(tuple(row[:-1]), row[-1])


SMALL = [
    pt.make_cube(3),
    pt.make_box([2, 3]),
    pt.chisel_vertex(pt.make_cube(2, 3), 0, 1),
    pt.chisel_all(pt.make_cube(2, 3), 1),
    pt.b_polytope(1),
    pt.make_hexagon_prism(1),
    pt.chisel_vertex(pt.make_cube(4, 2), 0, 1),
]
SMALL_IDS = ["cube3", "box23", "pentagon", "octagon", "B1", "hexprism", "P4(2,1)"]


def test_unit_cube_t2():
    assert ct.count_points(pt.make_cube(3), 2).count == 27


def test_b3_t1(backend):
    expected = poly_eval(Polynomial(EXPECTED["B3"]), 1)
    assert expected == 20320
    assert ct.count_points(pt.b_polytope(3), 1, backend=backend).count == expected


def test_example14_t1():
    expected = poly_eval(Polynomial(EXPECTED["ex14"]), 1)
    assert expected.denominator == 1
    assert ct.count_points(example14(), 1).count == expected


def test_example14_t2():
    expected = poly_eval(Polynomial(EXPECTED["ex14"]), 2)
    assert ct.count_points(example14(), 2).count == expected


def test_interior_examples():
    C = pt.make_cube(3)
    assert ct.count_interior(C, 2).count == 1
    assert ct.count_interior(C, 1).count == 0
    assert ct.count_interior(pt.make_cube(2, 3), 1).count == 4


def test_t0():
    P = pt.b_polytope(1)
    assert ct.count_points(P, 0).count == 1
    s = ct.count_points(P, 0, strict=True)
    assert s.count == 0 and s.strict


def test_negative_t():
    with pytest.raises(ValueError):
        ct.count_points(pt.make_cube(2), -1)


@pytest.mark.parametrize("P", SMALL, ids=SMALL_IDS)
def test_against_naive(P, backend):
    for t in range(3):
        for strict in (False, True):
            got = ct.count_points(P, t, strict, backend=backend).count
            assert got == naive_count(P, t, strict)


@pytest.mark.parametrize("P", SMALL, ids=SMALL_IDS)
def test_backend_parity(P):
    if ct._kernel_c is None:
        pytest.skip("compiled kernel not built")
    for t in range(4):
        a = ct.count_points(P, t, backend="cython").count
        b = ct.count_points(P, t, backend="python").count
        assert a == b


def test_unknown_backend():
    with pytest.raises(ValueError):
        ct.count_points(pt.make_cube(2), 1, backend="fortran")


def test_deterministic_across_threads():
    P = pt.b_polytope(2)
    counts = {ct.count_points(P, 2, threads=n).count for n in (1, 2, 8)}
    assert len(counts) == 1


@pytest.mark.parametrize("slabs", [1, 2, 3, 8, 64, 1000])
def test_slab_sum(slabs):
    P = pt.b_polytope(2)
    total = ct.count_points(P, 2).count
    for threads in (1, 2, 8):
        parts = ct.slab_counts(P, 2, slabs, threads=threads)
        assert sum(parts) == total
        assert len(parts) <= slabs


def test_monotone():
    for P in SMALL:
        counts = [ct.count_points(P, t).count for t in range(1, 6)]
        assert all(x < y for x, y in zip(counts, counts[1:]))


@pytest.mark.parametrize("P", SMALL, ids=SMALL_IDS)
def test_reciprocity(P):
    p = ct.ehrhart_via_counting(P)
    for t in range(1, 4):
        assert ct.count_interior(P, t).count == ct.reciprocity_value(p, t, P.dim)


def test_interpolation_examples():
    assert ct.ehrhart_via_counting(pt.make_cube(2)) == Polynomial([1, 2, 1])
    assert ct.ehrhart_via_counting(pt.chisel_all(pt.make_cube(2, 3), 1)) == Polynomial([1, 4, 7])
    assert list(ct.ehrhart_via_counting(pt.b_polytope(1)).coefficients) == [
        1,
        F(19, 3),
        23,
        F(77, 3),
    ]


def test_budget():
    with pytest.raises(ct.BudgetExceededError, match="symbolic"):
        ct.count_points(pt.b_polytope(2), 3, budget=100)


def test_budget_python_backend():
    with pytest.raises(ct.BudgetExceededError):
        ct.count_points(pt.b_polytope(2), 3, budget=100, backend="python")


def test_raw_halfspaces():
    C = pt.make_cube(3, 2)
    assert ct.count_points((C.halfspaces, 3), 1).count == 27


def test_raw_halfspaces_lp_box():
    # enough facets that the bounding box comes from linear programming
    B = pt.b_polytope(3)
    assert ct.count_points((B.halfspaces, 3), 1).count == 20320


def test_raw_unbounded():
    with pytest.raises(pt.UnboundedError):
        ct.count_points(([H(1, 0, 1), H(-1, 0, 0), H(0, 1, 1)], 2), 1)


def test_raw_empty():
    assert ct.count_points(([H(1, 0), H(-1, -1)], 1), 1).count == 0


def test_overflow_falls_back_to_python():
    hs = [H(1, 1), H(-1, 0), H(1, 10**30)]
    assert not ct._fits_int64([[1], [-1], [1]], [1, 0, 10**30], [0], [1])
    assert ct.count_points((hs, 1), 3, backend="cython").count == 4


def test_big_coordinates():
    n = 2**70
    hs = [H(1, n), H(-1, -(n - 2))]
    assert ct.count_points((hs, 1), 1).count == 3


@pytest.mark.parametrize("name,P,sym", oracle_instances(), ids=[x[0] for x in oracle_instances()])
def test_oracle_equivalence(name, P, sym):
    assert ct.ehrhart_via_counting(P) == sym
