import random
from fractions import Fraction as F

import pytest

from smoothehrhart import ehrhart as eh
from smoothehrhart import polytope as pt
from smoothehrhart.counting import ehrhart_via_counting
from smoothehrhart.exactpoly import Polynomial, poly_binomial, poly_interpolate, poly_multiply
from smoothehrhart.reproduce import EXPECTED

from conftest import naive_count


def coeffs(p):
    return list(p.coefficients)


# basic families


def test_basic_cube():
    assert coeffs(eh.ehrhart_basic("cube", 2)) == [1, 2, 1]


def test_basic_unimodular_simplex():
    assert coeffs(eh.ehrhart_basic("unimodSimplex", 3)) == [1, F(11, 6), 1, F(1, 6)]


def test_basic_std_simplex_point():
    assert coeffs(eh.ehrhart_basic("stdSimplex", 1)) == [1]


def test_basic_errors():
    with pytest.raises(eh.ParameterError):
        eh.ehrhart_basic("cube", 0)
    with pytest.raises(eh.ParameterError):
        eh.ehrhart_basic("sphere", 2)


# chisel series


def test_chisel_series_b4():
    p = eh.ehrhart_chisel_series(eh.ehrhart_basic("cube", 3), 8, 3, 81, [27, 9, 3, 1])
    assert coeffs(p) == EXPECTED["B4"]


def test_chisel_series_no_depths():
    base = eh.ehrhart_basic("cube", 3)
    assert eh.ehrhart_chisel_series(base, 8, 3, 5, []) == base.scale_variable(5)


def test_chisel_series_hexagon():
    p = eh.ehrhart_chisel_series(eh.HEX_PRISM, 12, 3, 243, [81, 27, 9, 3, 1])
    assert p == eh.ehrhart_H(5)
    assert coeffs(p * Polynomial([1, 457])) == EXPECTED["Q1_5_457"]


def test_chisel_series_bad_stage():
    with pytest.raises(eh.ParameterError, match="stage 2"):
        eh.ehrhart_chisel_series(eh.ehrhart_basic("cube", 3), 8, 3, 9, [3, 2])
    with pytest.raises(eh.ParameterError, match="stage 1"):
        eh.check_chisel_chain(3, [2])


def test_chain_tracks_minimum():
    assert eh.check_chisel_chain(81, [27, 9, 3, 1]) == 1
    assert eh.check_chisel_chain(10, [3]) == 3
    assert eh.check_chisel_chain(10, [4]) == 2


def test_hexagon_prism_polynomial_counted():
    P = pt.make_hexagon_prism(1)
    counts = [(t, naive_count(P, t)) for t in range(4)]
    assert poly_interpolate(counts) == eh.HEX_PRISM


# closed-form families


def test_q7_printed_coefficients():
    p = eh.ehrhart_Q(7, 5, 2)
    for k, v in EXPECTED["Q7"].items():
        assert p[k] == v
    assert p.degree == 7


def test_q2_square():
    assert coeffs(eh.ehrhart_Q(2, 3, 1)) == [1, 4, 7]


@pytest.mark.parametrize("a,b", [(3, 1), (7, 3), (100, 7)])
def test_q1_segment(a, b):
    assert coeffs(eh.ehrhart_Q(1, a, b)) == [1, a - 2 * b]


def test_q_errors():
    with pytest.raises(eh.ParameterError):
        eh.ehrhart_Q(3, 4, 2)
    with pytest.raises(eh.ParameterError):
        eh.ehrhart_Q(3, 5, 0)


def test_p_corner_pentagon():
    assert coeffs(eh.ehrhart_P_corner(2, 3, 1)) == [1, F(11, 2), F(17, 2)]


def test_p_corner_constant_term():
    for n, a, b in [(1, 2, 1), (4, 9, 3), (8, 3, 2)]:
        assert eh.ehrhart_P_corner(n, a, b)[0] == 1


def test_p_corner_errors():
    with pytest.raises(eh.ParameterError):
        eh.ehrhart_P_corner(2, 2, 2)


def test_box_corner_rectangle():
    assert coeffs(eh.ehrhart_box_corner([2, 3], 1)) == [1, F(9, 2), F(11, 2)]


@pytest.mark.parametrize("n,a,b", [(1, 2, 1), (3, 5, 2), (6, 4, 3)])
def test_box_corner_equal_sides(n, a, b):
    assert eh.ehrhart_box_corner([a] * n, b) == eh.ehrhart_P_corner(n, a, b)


def test_box_corner_positive():
    assert all(c > 0 for c in eh.ehrhart_box_corner([3, 4, 5], 2).coefficients)


def test_box_corner_errors():
    with pytest.raises(eh.ParameterError):
        eh.ehrhart_box_corner([3, 1], 1)


# B_k coefficients


def test_b_coeffs_examples():
    assert eh.B_coeffs(4) == (45, 15363, 501921)
    assert eh.B_coeffs(3) == (-9, 1719, 18591)
    assert eh.B_coeffs(1) == (F(-19, 3), 23, F(77, 3))


@pytest.mark.parametrize("k", range(1, 9))
def test_b_consistency(k):
    q1, q2, q3 = eh.B_coeffs(k)
    assert eh.ehrhart_B(k) == Polynomial([1, -q1, q2, q3])


def test_b1_b2_against_geometry():
    for k in (1, 2):
        assert ehrhart_via_counting(pt.b_polytope(k)) == eh.ehrhart_B(k)


# mu coefficients


def test_mu_examples():
    assert eh.mu_coeffs(1, 6, 730) == EXPECTED["P1_6_730"]
    assert eh.mu_coeffs(2, 8, 8599) == EXPECTED["P2_8_8599"]


def test_mu_consistency_random():
    rng = random.Random(7)
    for _ in range(20):
        n, k, a = rng.randint(1, 5), rng.randint(1, 6), rng.randint(1, 10**4)
        q1, q2, q3 = eh.B_coeffs(k)
        expected = poly_multiply(Polynomial([1, -q1, q2, q3]), Polynomial([1, a]) ** n)
        mu = eh.mu_coeffs(n, k, a)
        assert mu[0] == 1
        assert mu[-1] == F(a) ** n * q3 > 0
        assert Polynomial(mu) == expected
        assert len(mu) == n + 4


def test_mu_matches_product_family():
    assert Polynomial(eh.mu_coeffs(3, 5, 17)) == eh.ehrhart_P_prod(3, 5, 17)


# parameter choices


def test_choose_a():
    assert eh.choose_a(1, 28) == EXPECTED["P1_28.a"]
    assert eh.choose_a(7, 19) == 2453663097
    assert eh.choose_a(1, 2) == 14
    with pytest.raises(eh.ParameterError):
        eh.choose_a(1, 1)


def test_choice_bounds():
    assert eh.check_choice_k_bounds(1, 28).all_hold
    r = eh.check_choice_k_bounds(1, 6)
    assert r.a == 3402 and not r.q1_exceeds_na
    assert eh.B_coeffs(6)[0] == 1701
    r = eh.check_choice_k_bounds(1, 4)
    assert r.q2_bound and r.q3_bound


def test_giant_instance():
    p = eh.ehrhart_P_prod(1, 28, eh.choose_a(1, 28))
    assert coeffs(p) == EXPECTED["P1_28"]


# Q linear coefficient


@pytest.mark.parametrize("n,a,b", [(1, 3, 1), (2, 5, 2), (4, 9, 1), (7, 5, 2), (9, 11, 5)])
def test_q_linear_law(n, a, b):
    assert eh.ehrhart_Q(n, a, b)[1] == a * n - F(b * 2**n, n)


def test_q_linear_sign_threshold():
    negative = [n for n in range(1, 13) if eh.ehrhart_Q(n, 5, 2)[1] < 0]
    assert negative == list(range(7, 13))


# sign patterns


@pytest.mark.parametrize(
    "poly,dim",
    [
        (lambda: eh.ehrhart_P_prod(1, 6, 730), 4),
        (lambda: eh.ehrhart_P_prod(2, 8, 8599), 5),
        (lambda: eh.ehrhart_P_prod(1, 28, eh.choose_a(1, 28)), 4),
        (lambda: eh.ehrhart_Q_prod(1, 5, 457), 4),
        (lambda: eh.ehrhart_Q_prod(3, 9, 46099), 6),
    ],
    ids=["P1(6,730)", "P2(8,8599)", "P1(28)", "Q1(5,457)", "Q3(9,46099)"],
)
def test_negative_sign_pattern(poly, dim):
    p = poly()
    assert p.degree == dim
    signs = [c < 0 for c in p.coefficients]
    assert signs == [False] + [True] * (dim - 2) + [False, False]


def test_q3_9_46099_printed():
    assert coeffs(eh.ehrhart_Q_prod(3, 9, 46099)) == EXPECTED["Q3_9_46099"]


# witness search


def test_search_n1_near_730():
    ws = eh.search_negative(1, 6, candidates=[729, 730, 731])
    assert {w.k for w in ws} == {6}
    assert 730 in {w.a for w in ws} and 729 not in {w.a for w in ws}


def test_search_n1_minimal():
    ws = eh.search_negative(1, 6)
    assert [(w.k, w.a) for w in ws] == [(6, 730)]
    assert ws[0].negative == (1, 2)


def test_search_b_alone():
    ws = eh.search_negative(0, 6)
    assert ws[0].k == 4 and ws[0].a is None
    assert ws[0].negative == (1,)


def test_search_n2():
    ws = eh.search_negative(2, 8, k_min=8)
    assert [(w.k, w.a) for w in ws] == [(8, 8599)]
    assert ws[0].negative == (1, 2, 3)


def test_search_is_minimal_by_brute_force():
    # below the returned a, no smaller value is a witness
    w = eh.search_negative(1, 6, k_min=6)[0]
    for a in range(w.a - 50, w.a):
        mu = eh.mu_coeffs(1, 6, a)
        assert not (mu[1] < 0 and mu[2] < 0)


def test_search_deterministic():
    assert eh.search_negative(2, 9) == eh.search_negative(2, 9)


def test_binomial_building_block():
    # binom(bt + n - 1, n) at t = 1 is an ordinary binomial
    assert poly_binomial(3, 2, 3)(1) == 10
