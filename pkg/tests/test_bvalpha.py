import random
from fractions import Fraction as F
from math import comb, factorial

import pytest

from smoothehrhart import bvalpha as bv
from smoothehrhart.ehrhart import ParameterError, ehrhart_basic, ehrhart_P_corner
from smoothehrhart.exactpoly import Polynomial, poly_binomial
from smoothehrhart.reproduce import EXPECTED


def test_alpha_examples():
    assert bv.alpha_value("cubeFace", 3, 0) == F(1, 8)
    assert bv.alpha_value("cornerCutFace", 3, 1, True) == F(5, 36)
    assert bv.alpha_value("cornerCutFace", 7, 2, True) == F(-1, 800)


def test_alpha_full_face_is_one():
    for fam in ("cubeFace", "unimodSimplexFace", "cornerCutFace"):
        for n in range(1, 6):
            assert bv.alpha_value(fam, n, n, True) == 1


def test_alpha_range_errors():
    with pytest.raises(ParameterError):
        bv.alpha_value("cubeFace", 3, 4)
    with pytest.raises(ParameterError):
        bv.alpha_value("stdSimplexFace", 3, 3)
    with pytest.raises(ParameterError):
        bv.alpha_value("cubeFace", 3, -1)
    with pytest.raises(ParameterError):
        bv.alpha_value("torusFace", 3, 1)


def test_alpha_table_published():
    assert bv.alpha_table(7) == EXPECTED["alpha_table"]
    assert sum(len(r) for r in bv.alpha_table(7)) == 35


def test_table_rows():
    t = bv.alpha_table(7)
    assert t[0] == [F(1, 2), 1]
    assert t[4] == [F(1, 160), F(9, 800), F(1, 24), F(3, 20), F(1, 2), 1]
    assert t[6][1] == F(-5, 3136)
    assert all(row[-1] == 1 for row in t)


def test_positivity_scan():
    for n in range(1, 7):
        assert bv.scan_alpha_positivity(n).all_positive
    s = bv.scan_alpha_positivity(7)
    assert not s.all_positive
    assert s.negative_entries == ((1, F(-5, 3136)), (2, F(-1, 800)))


@pytest.mark.parametrize("n", range(1, 9))
def test_face_sum_cube(n):
    p = ehrhart_basic("cube", n)
    for k in range(n + 1):
        # binom(n,k) 2^(n-k) faces, each a unit cube of volume 1
        total = comb(n, k) * 2 ** (n - k) * bv.alpha_value("cubeFace", n, k)
        assert total == p[k] == comb(n, k)


@pytest.mark.parametrize("n", range(1, 9))
def test_face_sum_std_simplex(n):
    p = ehrhart_basic("stdSimplex", n)
    for k in range(n):
        total = comb(n, k + 1) * F(1, factorial(k)) * bv.alpha_value("stdSimplexFace", n, k)
        assert total == p[k]


@pytest.mark.parametrize("n", range(1, 9))
def test_face_sum_unimodular_simplex(n):
    p = ehrhart_basic("unimodSimplex", n)
    for k in range(n + 1):
        vol = F(1, factorial(k))
        with_origin = comb(n, k) * vol * bv.alpha_value("unimodSimplexFace", n, k, True)
        without = comb(n, k + 1) * vol * (
            bv.alpha_value("unimodSimplexFace", n, k) if k < n else 0
        )
        assert with_origin + without == p[k]


@pytest.mark.parametrize("n", range(1, 9))
@pytest.mark.parametrize("a,b", [(2, 1), (3, 1), (3, 2), (5, 2)])
def test_reconstruction_matches_closed_form(n, a, b):
    assert bv.reconstruct_ehrhart_from_alpha(n, a, b) == ehrhart_P_corner(n, a, b)


def test_reconstruct_pentagon_linear_term():
    classes = bv.face_classes(2, 3, 1, 1)
    assert [c.contribution for c in classes] == [F(1, 2), 2, 3]
    assert bv.reconstruct_ehrhart_from_alpha(2, 3, 1)[1] == F(11, 2)


def test_reconstruct_constant_term():
    for n in range(1, 9):
        assert bv.reconstruct_ehrhart_from_alpha(n, 4, 1)[0] == 1


def test_reconstruct_3_2_1():
    expected = Polynomial([1, 2]) ** 3 - poly_binomial(1, 2, 3)
    assert bv.reconstruct_ehrhart_from_alpha(3, 2, 1) == expected


def test_corner_class_vertex_vanishes():
    # the chiseled vertex is gone: class (ii) at k=0 has zero volume
    assert bv.face_classes(4, 3, 1, 0)[1].normalized_volume == 0


def test_reconstruct_errors():
    with pytest.raises(ParameterError):
        bv.reconstruct_ehrhart_from_alpha(3, 2, 2)


def test_box_corner_examples():
    r = bv.check_box_corner_positivity([2, 3], 1)
    assert r.ok
    assert list(r.polynomial.coefficients) == [1, F(9, 2), F(11, 2)]
    assert bv.check_box_corner_positivity([5] * 7, 2).ok
    assert bv.check_box_corner_positivity([2] * 8, 1).ok


def test_box_corner_errors():
    with pytest.raises(ParameterError):
        bv.check_box_corner_positivity([2, 2], 2)


def test_box_corner_random():
    rng = random.Random(3)
    for _ in range(100):
        n = rng.randint(1, 8)
        b = rng.randint(1, 10)
        sides = [rng.randint(b + 1, 20) for _ in range(n)]
        assert bv.check_box_corner_positivity(sides, b).ok, (sides, b)


def test_strictness_separation():
    assert bv.check_box_corner_positivity([2] * 7, 1).ok
    assert not bv.scan_alpha_positivity(7).all_positive
