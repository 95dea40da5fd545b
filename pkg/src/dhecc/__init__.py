"""Eccentricities, centers and certificates for distance-hereditary graphs."""
from .builders import (
    build_named,
    embed_as_center,
    fig5_family,
    random_cograph,
    random_dh,
    random_diam3_center_input,
)
from .centers import (
    center_and_ck,
    center_distance_audit,
    classify_center,
    is_cograph,
    unimodality_audit,
)
from .certificates import (
    certify,
    eval_lower,
    eval_upper,
    verify_diameter_certificate,
    verify_radius_certificate,
    verify_tight_upper,
)
from .ecc_exact import all_eccentricities, weighted_ecc_bruteforce
from .errors import (
    BadParameter,
    DHError,
    DisconnectedGraph,
    DuplicateEdge,
    EmptyCertificate,
    InvalidCenterShape,
    NotDistanceHereditary,
    OutOfRange,
    ParseError,
    SelfLoop,
)
from .extremal import ecc_bounds_from_pair, mutually_distant_pair
from .graph import EccTable, Graph, all_pairs_ecc_oracle, bfs, four_point_check, interval_slice
from .pruning import build_pruning_sequence, find_central_vertex, is_distance_hereditary

__version__ = "0.1.0"
