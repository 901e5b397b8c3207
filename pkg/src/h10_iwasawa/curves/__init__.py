"""Elliptic curves over Q: models, local data, reductions, 2-division field, 3-isogeny kernels."""

from .galois import has_rational_two_torsion, mod2_image, two_division_frobenius_order
from .isogeny import KernelRealPoints, kernel_real_points
from .reduction import (
    ReductionCount,
    TorsionStatus,
    count_points,
    is_anomalous,
    is_good_ordinary,
    torsion_p_trivial,
)
from .tate import (
    LocalData,
    ReductionType,
    conductor,
    minimal_model,
    tamagawa_numbers,
    tamagawa_product,
    tate_algorithm,
)
from .weierstrass import (
    WeierstrassCurve,
    discriminant_c4_c6,
    from_c4_c6,
    is_squarefree,
    quadratic_twist,
)

__all__ = [
    "WeierstrassCurve",
    "discriminant_c4_c6",
    "from_c4_c6",
    "is_squarefree",
    "quadratic_twist",
    "LocalData",
    "ReductionType",
    "tate_algorithm",
    "minimal_model",
    "conductor",
    "tamagawa_numbers",
    "tamagawa_product",
    "ReductionCount",
    "TorsionStatus",
    "count_points",
    "is_good_ordinary",
    "is_anomalous",
    "torsion_p_trivial",
    "two_division_frobenius_order",
    "mod2_image",
    "has_rational_two_torsion",
    "KernelRealPoints",
    "kernel_real_points",
]
