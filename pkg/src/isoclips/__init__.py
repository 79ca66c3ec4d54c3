"""isoclips: symmetry classes of SO(3)/O(3) representations via clips tables,
with a brute-force matrix-group oracle for verification."""

from .groups import (
    ClassSet,
    Context,
    ContextError,
    SubgroupClass,
    UnsupportedClipsError,
    ICO,
    O2,
    O2_MINUS,
    O3_FULL,
    OCTA,
    OCTA_MINUS,
    SO2,
    SO3,
    TETRA,
    TRIV,
    cyclic,
    d_h,
    d_v,
    dihedral,
    hasse,
    is_leq,
    normalize,
    render_class,
    type_ii,
    z_minus,
)
from .clips import ClipsParameters, ClipsRuleOutcome, clips_pair, clips_pair_detailed, clips_params, clips_sets
from .irreps import (
    HarmonicLabel,
    HarmonicSum,
    alt_square,
    isotropy_irrep_o3,
    isotropy_irrep_so3,
    sym_square,
    tensor_product,
)
from .parsing import ParseError, parse_class, parse_rep
from .symmetry import MinusOneAction, RepSpec, isotropy_classes, minus_one_action

__version__ = "0.1.0"

__all__ = [
    "ClassSet",
    "ClipsParameters",
    "ClipsRuleOutcome",
    "Context",
    "ContextError",
    "HarmonicLabel",
    "HarmonicSum",
    "MinusOneAction",
    "ParseError",
    "RepSpec",
    "SubgroupClass",
    "UnsupportedClipsError",
    "ICO",
    "O2",
    "O2_MINUS",
    "O3_FULL",
    "OCTA",
    "OCTA_MINUS",
    "SO2",
    "SO3",
    "TETRA",
    "TRIV",
    "alt_square",
    "clips_pair",
    "clips_pair_detailed",
    "clips_params",
    "clips_sets",
    "cyclic",
    "d_h",
    "d_v",
    "dihedral",
    "hasse",
    "is_leq",
    "isotropy_classes",
    "isotropy_irrep_o3",
    "isotropy_irrep_so3",
    "minus_one_action",
    "normalize",
    "parse_class",
    "parse_rep",
    "render_class",
    "sym_square",
    "tensor_product",
    "type_ii",
    "z_minus",
]
