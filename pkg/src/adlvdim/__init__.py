"""Extended semi-modules and the dimension of affine Deligne-Lusztig varieties
for superbasic b in GL_h."""
from .dimension import dimension, top_strata, verify_theorems
from .errors import (
    InsufficientPrecision,
    InvalidInput,
    NotASemiModule,
    RecoveryError,
    TheoremViolation,
)
from .extended import (
    ExtendedSemiModule,
    check_axioms,
    cyclic_of,
    enumerate_esm,
    find_decomposition,
    reduce_to_cyclic,
    v_set,
    v_set_cyclic,
)
from .semimodule import (
    SemiModule,
    SlopeDatum,
    conductor,
    d_formula,
    d_lattice,
    from_type,
    normalize,
    phi_max,
    preceq,
    type_of,
)

__all__ = [
    "ExtendedSemiModule", "InsufficientPrecision", "InvalidInput", "NotASemiModule",
    "RecoveryError", "SemiModule", "SlopeDatum", "TheoremViolation", "check_axioms",
    "conductor", "cyclic_of", "d_formula", "d_lattice", "dimension", "enumerate_esm",
    "find_decomposition", "from_type", "normalize", "phi_max", "preceq",
    "reduce_to_cyclic", "top_strata", "type_of", "v_set", "v_set_cyclic", "verify_theorems",
]
