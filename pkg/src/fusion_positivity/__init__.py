"""Exact fusion-ring computations for coinvariant divisor positivity on moduli of rational curves."""

from .errors import (
    ArityError,
    ClosureError,
    ConfigurationError,
    DomainError,
    FusionError,
    LabelDomainError,
    PartitionError,
    PreconditionError,
    ResourceLimitError,
)
from .fusion_core import (
    DivisorClass,
    FCurve,
    FusionDatum,
    FusionExpansion,
    PositivityCertificate,
    ScanReport,
    canonical_boundary_key,
    degree_04,
    degree_11,
    divisor_class,
    expand_fusion,
    fcurve_intersect,
    four_block_partitions,
    is_trivial,
    lambda_threshold,
    positivity_certificate,
    rank_n,
    rank_split,
    scan_f_positivity,
    validate_subring,
)
from .parafermion_sl2 import (
    Sl2Label,
    canonicalize,
    closed_degree_T,
    conformal_weight,
    datum_sl2,
    degree04_closed,
    dual,
    fuse,
    nontrivial_S1,
    nontrivial_T,
    parse_sl2_label,
    rank4_closed,
    subring_S1,
    subring_T,
    symmetric_rank_support,
    vacuum,
)
from .parafermion_slr import (
    TupleLabel,
    count_simple_modules,
    cw_slr,
    datum_slr,
    make_label,
    max_cw_module,
    negative_witness,
    parse_slr_label,
    rank4_slr,
    scale_label,
    symmetric_intersection,
    uniform_label,
)
from .affine_instances import (
    AffineSl2Label,
    CyclicLabel,
    PairingReport,
    datum_affine_sl2,
    datum_cyclic,
    eta_S1_rescaled,
    eta_T_rescaled,
    pairing_S1_to_cyclic,
    pairing_T_to_affine,
    parse_affine_label,
    parse_cyclic_label,
    verify_pairing,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
