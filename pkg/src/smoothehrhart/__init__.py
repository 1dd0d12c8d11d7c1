"""Exact Ehrhart polynomials of chiseled smooth polytopes."""

from .counting import BACKEND, BudgetExceededError, count_interior, count_points, ehrhart_via_counting
from .ehrhart import (
    ParameterError,
    ehrhart_B,
    ehrhart_basic,
    ehrhart_box_corner,
    ehrhart_chisel_series,
    ehrhart_H,
    ehrhart_P_corner,
    ehrhart_P_prod,
    ehrhart_Q,
    ehrhart_Q_prod,
    mu_coeffs,
    search_negative,
)
from .exactpoly import Polynomial, hstar_inverse, hstar_transform, poly_interpolate
from .polytope import (
    ChiselError,
    Halfspace,
    PolytopeError,
    SmoothPolytope,
    apply_chisel_plan,
    chisel_all,
    chisel_vertex,
    make_box,
    make_cube,
    make_hexagon_prism,
    validate,
)
from .polyfile import read_polytope, write_polytope

__version__ = "0.1.0"
