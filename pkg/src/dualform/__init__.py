"""Exact-arithmetic quadratic forms on subspaces and their duals."""

from .errors import (AlgebraError, CharTwo, DivisionByZero, IsotropicVector,
                     LengthMismatch, NotCharTwo, NotInSHat, NotInSubspace,
                     NotNested, NotPrime, ParseError, RadicalConditionViolated,
                     Singular, ValidationError, ZeroRatio)
from .fields import Field, PrimeField, RationalField, make_field
from .linalg import (Matrix, Subspace, adjugate, annihilator, det,
                     extend_basis, invert_matrix, kernel, rank, rref, solve)
from .quadform import MetricSpace, QuadraticForm, Radical
from .dual import (AdaptedBasis, DualFormResult, LinkedCoset, adapted_basis,
                   b_linked, converse_relation_check, double_dual_check,
                   dualize, linked_coset, linked_forms)
from .normal import (DIAGONAL, MINOR_DIAGONAL_CHAR2, NormalFormResult,
                     char2_normal_form, diagonalize)
from .similarity import (LinearMap, SimilarityReport, reflection,
                         theorem_psi_check, transpose_map, verify_similarity)

__version__ = "0.1.0"
