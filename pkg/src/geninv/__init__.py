"""Exact GD1/1GD generalized inverses and matrix partial orders.

Computes, over Q, Q(i) and GF(p) with exact arithmetic throughout:
the index and Fitting/core-nilpotent decompositions, Jordan chains of
the nilpotent part, the affine sets of {1}-inverses and G-Drazin
inverses, the fully parameterized GD1 and 1GD inverse families, and
decision procedures for the space, minus, G-Drazin, GD1, 1GD and
bilateral order relations.
"""

from .decomp import (CoreNilpotent, FittingData, JordanChain, core_nilpotent,
                     fitting_decomposition, matrix_convention_index,
                     matrix_index, nilpotent_jordan_chains)
from .errors import (FieldMismatchError, GeninvError, ParseError, ShapeError,
                     SingularMatrixError)
from .families import (InverseFamily, enumerate_family, evaluate_family,
                       gd1_family, is_1gd, is_gd1, j_basis_member,
                       one_gd_family)
from .fields import (GF, QI, QQ, Field, GaussianRationals, PrimeField,
                     Rationals, Scalar, field_from_name, format_scalar,
                     parse_scalar)
from .inverses import (gamma_bilateral, gamma_bilateral_reversed,
                       gamma_reflexive, gd1_from_components, gdrazin_space,
                       is_gdrazin, is_one_inverse, is_reflexive,
                       one_gd_from_components, one_inverse_space)
from .matrices import (AffineMatrixSpace, Matrix, column_space_basis, inverse,
                       nullspace_basis, rank, rref, sample_member,
                       solve_affine_matrix_system, solve_right)
from .orders import (OrderCheckReport, check_order, gd1_1gd_order, gd1_order,
                     gd_order, minus_order, one_gd_gd1_order, one_gd_order,
                     space_preorder)
from .rng import Lcg

__version__ = "0.1.0"
