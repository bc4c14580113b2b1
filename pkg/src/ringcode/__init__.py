"""ringcode: alpha(1+u)-constacyclic codes over F_q + uF_q and their quantum codes.

Exact arithmetic throughout; the hot distance kernels run on a compiled
backend when available (see ringcode.backend_name()).
"""

from ._backend import BACKEND as _BACKEND
from .codes import (ConstacyclicCode, LinearCodeF, code_from_descriptor,
                    code_from_exponents, hermitian_dual,
                    is_hermitian_self_orthogonal, residue, torsion)
from .cyclo import CosetStructure, beta_from_alpha, build_cosets, dagger
from .distance import (DistanceResult, min_distance_column_rank,
                       min_distance_exhaustive, min_distance_R)
from .gf import FieldElement, FieldSpec, extend, field_create, get_field
from .maps import (GrayMatrix, SplitVector, gray_image_code, gray_map,
                   omega_condition, phi_map, symplectic_weight,
                   trace_inner_product)
from .quantum import (QuantumParams, hermitian_construction, singleton_check,
                      symplectic_construction)
from .ring import RingElement, RingPoly

__version__ = "0.1.0"


def backend_name() -> str:
    """Active distance-kernel backend: "cython" or "python"."""
    return _BACKEND
