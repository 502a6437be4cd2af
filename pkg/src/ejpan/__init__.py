"""Eisenstein-Jacobi interconnection networks and constructive panconnectivity."""

from .eisenstein import EJInt, Generator, conj, congruent, format_label, mul, norm, parse_label, reduce
from .network import (
    DistanceProfile,
    EJNetwork,
    build,
    common_neighbors,
    distance,
    distance_profile,
    distance_profile_formula,
    neighbors,
    translate,
)
from .panconnectivity import (
    PanEntry,
    PanTable,
    chain_algorithm,
    chain_extend,
    check_panconnectivity,
    panconnectivity_list,
    pancycles,
    validate_cycle,
    validate_path,
)
from .path import Cycle, Path
from .pathfind import BroadcastEntry, broadcast_list, shortest_path

__all__ = [
    "BroadcastEntry",
    "Cycle",
    "DistanceProfile",
    "EJInt",
    "EJNetwork",
    "Generator",
    "PanEntry",
    "PanTable",
    "Path",
    "broadcast_list",
    "build",
    "chain_algorithm",
    "chain_extend",
    "check_panconnectivity",
    "common_neighbors",
    "congruent",
    "conj",
    "distance",
    "distance_profile",
    "distance_profile_formula",
    "format_label",
    "mul",
    "neighbors",
    "norm",
    "panconnectivity_list",
    "pancycles",
    "parse_label",
    "reduce",
    "shortest_path",
    "translate",
    "validate_cycle",
    "validate_path",
]
