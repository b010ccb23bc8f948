"""Central Delannoy paths, Kimberling paths, and the bijection between them.

The package provides exact counting and exhaustive enumeration of both
families, uniform random sampling, integer-exact subdiagonal geometry, an
exhaustive verification harness, a CLI, and SVG rendering.
"""

from .lattice_core import (
    BadEndpoint,
    BadOrigin,
    CentralIndex,
    DecreasingY,
    DelannoyPath,
    InvalidCharacter,
    KimberlingPath,
    LatticeError,
    LatticePoint,
    NonIncreasingX,
    NotCentral,
    Step,
    central_index,
    interior_vertices,
    make_kimberling,
    parse_step_word,
    path_vertices,
)
from .bijection import (
    OverlappingAC,
    StepLabels,
    TaggedValue,
    inverse_parts,
    merge_tagged,
    phi,
    phi_inverse,
    step_labels,
    tagged_to_word,
)
from .counting import (
    binomial,
    count_delannoy,
    count_delannoy_by_e,
    count_kimberling,
    count_kimberling_by_vertices,
    enumerate_delannoy,
    enumerate_delannoy_by_e,
    enumerate_kimberling,
    enumerate_kimberling_by_vertices,
    sample_delannoy,
    sample_delannoy_stream,
    schroder,
)
from .geometry import (
    DiagonalFlags,
    EastEnd,
    below_endpoint_chord,
    classify_d_counts,
    diagonal_flags,
    east_ends,
    is_subdiagonal_delannoy,
    is_subdiagonal_kimberling,
    preceding_d_counts,
)
from .harness import (
    VerificationReport,
    run_checks,
    verify_counts,
    verify_per_step,
    verify_roundtrip,
    verify_subdiagonal,
)
from .render import RenderSpec, render_pair

__version__ = "0.1.0"

__all__ = [
    "BadEndpoint",
    "BadOrigin",
    "CentralIndex",
    "DecreasingY",
    "DelannoyPath",
    "DiagonalFlags",
    "EastEnd",
    "InvalidCharacter",
    "KimberlingPath",
    "LatticeError",
    "LatticePoint",
    "NonIncreasingX",
    "NotCentral",
    "OverlappingAC",
    "RenderSpec",
    "Step",
    "StepLabels",
    "TaggedValue",
    "VerificationReport",
    "below_endpoint_chord",
    "binomial",
    "central_index",
    "classify_d_counts",
    "count_delannoy",
    "count_delannoy_by_e",
    "count_kimberling",
    "count_kimberling_by_vertices",
    "diagonal_flags",
    "east_ends",
    "enumerate_delannoy",
    "enumerate_delannoy_by_e",
    "enumerate_kimberling",
    "enumerate_kimberling_by_vertices",
    "interior_vertices",
    "inverse_parts",
    "is_subdiagonal_delannoy",
    "is_subdiagonal_kimberling",
    "make_kimberling",
    "merge_tagged",
    "parse_step_word",
    "path_vertices",
    "phi",
    "phi_inverse",
    "preceding_d_counts",
    "render_pair",
    "run_checks",
    "sample_delannoy",
    "sample_delannoy_stream",
    "schroder",
    "step_labels",
    "tagged_to_word",
    "verify_counts",
    "verify_per_step",
    "verify_roundtrip",
    "verify_subdiagonal",
]
