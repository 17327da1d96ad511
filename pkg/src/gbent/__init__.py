"""Regular generalized bent functions F_2^n -> Z_{2^m} and their Boolean decomposition."""

__version__ = "0.1.0"

from .boolean import BooleanFunction, dual, enumerate_bent, is_anti_self_dual, is_bent, is_self_dual, wht
from .classify import (
    OrbitReport,
    classify_quaternary,
    enumerate_regular_quaternary,
    orbit_of,
    restricted_ea_generators,
    verify_odd_n_nonexistence,
)
from .cyclotomic import CyclotomicInteger, as_scaled_root, conj, norm_sq, omega_pow
from .decomposition import (
    DecompositionSystem,
    check_self_dual_decomposition,
    compose,
    decompose,
    extract_coefficients,
    has_hadamard_property,
)
from .errors import (
    DimensionMismatch,
    DomainError,
    DualHadamardViolation,
    GBentError,
    HadamardViolation,
    InvalidInputError,
    NonBentComponent,
    UnsupportedError,
)
from .gbf import (
    AffineTransform,
    GBF,
    GeneralizedBooleanFunction,
    GeneralizedSpectrum,
    apply_affine,
    gwht,
    is_anti_self_dual_gbf,
    is_gbent,
    is_regular,
    is_self_dual_gbf,
    predicted_dual_after_affine,
    regular_dual,
)
