"""Exact computation of graded Casimir elements and graded central extensions of color Lie algebras."""
from .scalars import CycScalar, parse_scalar, format_scalar, root_of_unity
from .grading import GradingContext, group_make, validate_factor
from .gmatrix import GradedSpace, GradedMatrix, JForm, color_trace, color_bracket, matrix_unit
from .algebra import ColorAlgebra, QuadElement, structure_constants_from_rep, normal_order
from .casimir import solve_commutants, bilinear_form, invert_form, build_casimir, verify_centrality

__version__ = "0.1.0"
