"""Exact Borel-Weil-Bott cohomology and tilting-sheaf verification for
Severi-Brauer varieties, twisted Grassmannians, and involution varieties."""

from .bott import (
    SINGULAR,
    CohomologyResult,
    bott_classify,
    bott_typeA_epsilon,
    epsilon_to_fundamental,
    is_singular,
)
from .bundles import (
    EquivariantBundle,
    GLWeight,
    GradedDims,
    UnsupportedDecompositionError,
    dual,
    dual_glweight,
    ext_dims,
    glweight_to_weight,
    lr_tensor,
    make_bundle,
    schur_dim,
    tensor,
    weight_to_glweight,
)
from .csa import (
    CsaLabel,
    base_field,
    even_clifford,
    involution_dims,
    rdim,
    split_components,
    tensor_power,
    tits_dimension,
)
from .endo import (
    EndoStructure,
    endo_structure,
    euler_matrix,
    gldim_bound,
    offdiagonal_nilpotent,
)
from .ktheory import KDecomposition, k0_decomposition
from .rootdata import (
    Parabolic,
    RootDatum,
    Weight,
    coroot_pairing,
    homogeneous_space_dim,
    is_dominant,
    is_dominant_for,
    levi_rank,
    parabolic,
    root_datum,
    simple_dot_reflection,
    weyl_dim,
)
from .tilting import (
    ExtReport,
    Summand,
    TiltingCollection,
    build_gsb,
    build_inv,
    build_sb,
    diagonal_blocks,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "SINGULAR",
    "CohomologyResult",
    "CsaLabel",
    "EndoStructure",
    "EquivariantBundle",
    "ExtReport",
    "GLWeight",
    "GradedDims",
    "KDecomposition",
    "Parabolic",
    "RootDatum",
    "Summand",
    "TiltingCollection",
    "UnsupportedDecompositionError",
    "Weight",
    "base_field",
    "bott_classify",
    "bott_typeA_epsilon",
    "build_gsb",
    "build_inv",
    "build_sb",
    "coroot_pairing",
    "diagonal_blocks",
    "dual",
    "dual_glweight",
    "endo_structure",
    "epsilon_to_fundamental",
    "euler_matrix",
    "even_clifford",
    "ext_dims",
    "gldim_bound",
    "glweight_to_weight",
    "homogeneous_space_dim",
    "involution_dims",
    "is_dominant",
    "is_dominant_for",
    "is_singular",
    "k0_decomposition",
    "levi_rank",
    "lr_tensor",
    "make_bundle",
    "offdiagonal_nilpotent",
    "parabolic",
    "rdim",
    "root_datum",
    "schur_dim",
    "simple_dot_reflection",
    "split_components",
    "tensor",
    "tensor_power",
    "tits_dimension",
    "verify",
    "weight_to_glweight",
    "weyl_dim",
]
