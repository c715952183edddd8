"""SVD and polar decomposition of multivectors in real and complexified Clifford algebras."""
from .algebra import (
    AlgebraContext, BasisElement, Multivector, add, complex_conjugate, dagger, dagger_alt, gp,
    grade_involution, grade_project, norm, reversion, scalar_product, scale,
)
from .blades import Signature, blade_inverse, blade_product, grade, involution_signs
from .decomp import (
    KSubspace, PolarResult, SvdResult, dimension_identity, k_coordinates, k_subspace,
    polar_ga, sigma_sqrt, svd_ga,
)
from .errors import (
    ComplexScalarInRealContext, ContextMismatch, GASVDError, GradeOutOfRange,
    InternalInvariantViolation, NegativeDiagonal, NoConvergence, NotSquare, RingMismatch,
    SizeMismatch, UnsupportedDimension,
)
from .groups import GroupInfo, group_dimension, is_group_element, iso_class, lie_algebra_basis
from .repmat import RepTable, build_rep, dagger_consistency_check, rep_forward, rep_inverse
from .ring_svd import MatrixSvd, polar_from_svd, svd
from .rings import Quaternion, RingMatrix, complex_adjoint

__version__ = "0.1.0"
