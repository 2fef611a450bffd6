"""Multisegment and rank-triangle combinatorics for orbits in Vogan varieties of GL_n."""

from .errors import (
    InvalidTriangle,
    MultiCosetSupport,
    NotSimple,
    SegmentOutsideSupport,
    SupportMismatch,
    VoganError,
)
from .multisegments import (
    HalfInt,
    Multisegment,
    MultisegmentStats,
    Segment,
    elementary_successors,
    is_simple,
    leq_oracle,
    mw_dual,
    precedes,
    simple_dual_formula,
    stats,
)
from .packets import (
    PrePacket,
    arthur_orbit,
    irreducible_pre_packet,
    pre_packet,
    verify_main_lemma,
    verify_theorem,
    verify_theorem_irreducible,
)
from .parameters import (
    ArthurParameter,
    VoganShape,
    arthur_hat,
    hyper_unramify,
    infinitesimal_support,
    simple_arthur_multisegment,
    translate_segments,
    vogan_shape,
)
from .triangles import (
    RankTriangle,
    Support,
    enumerate_multisegments,
    enumerate_orbits,
    leq_triangle,
    multiseg_to_triangle,
    triangle_dual,
    triangle_of_segment,
    triangle_to_multiseg,
    validate,
)

__version__ = "0.1.0"
