"""Domino tiling counts and their residues modulo 2 and 4."""

from .corners import (
    CornerDescriptor,
    ReflectivePair,
    find_corners,
    find_reflective_pairs,
    inspection_cells,
    is_complete_up_to,
    strip_cells,
)
from .counting import (
    Residue,
    count_tilings,
    count_tilings_bruteforce,
    kasteleyn_rectangle,
    residue,
)
from .errors import (
    BadAxisParity,
    FrontierTooWide,
    HypothesisFailed,
    KOutOfRange,
    NotSymmetric,
    PrecisionExceeded,
    RegionError,
    StripExceedsCorner,
    TilingError,
)
from .families import FamilySpec, aztec, make_D, make_T, rectangle
from .reduction import (
    ReductionEngine,
    Term,
    WeightedSubregions,
    apply_2open,
    apply_2wall,
    apply_4open,
    apply_4wall,
    apply_double_wall,
    apply_k2k1k,
    apply_k2kk,
    d_residue,
    reduce_mod4,
    residue_mod4,
    t_residue,
)
from .region import (
    Axis,
    Cell,
    Region,
    find_symmetry_axes,
    load_region,
    parse_region,
    reflect,
    remove_cells,
    render_region,
)

__version__ = "0.1.0"
