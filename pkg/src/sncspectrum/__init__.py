"""Exact irregular Hodge numbers of non-degenerate functions on SNC pairs."""

__version__ = "0.1.0"

from .fracpoly import FracPoly, geometric_block, shifted_geometric_block
from .hodge import (
    EMPTY,
    HodgeData,
    curve,
    disjoint_union,
    from_catalog,
    hypersurface_in_projective_space,
    points,
    product,
    projective_space,
    toric_from_cone_counts,
)
from .kkp import (
    LimitingHodgeTable,
    WeightGradedInput,
    f_lg_numbers,
    kkp_equality_check,
    to_limiting_table,
)
from .snc import Component, SNCPairSpec, enumerate_strata, load_spec, parse_spec, validate
from .spectrum import (
    SpectrumReport,
    euler_cross_check,
    extract_irregular_numbers,
    irregular_spectrum,
    nearby_cycle_spectrum,
    open_stratum_spectrum,
    spectrum_of_torus_stratum,
    spectrum_of_variety,
)
