"""Metric dimension of signed graphs: signed distances, compatibility,
resolving sets, exact bases and closed forms for classic families."""

from .core import SignedGraph, build, cycle_sign, is_balanced, k_neighborhood, negate, net_degree
from .distance import (
    CompatibilityReport,
    PairDistance,
    SignedDistanceMatrix,
    compatibility,
    enumerate_shortest_paths,
    signed_distances,
)
from .families import FamilySpec, generate
from .resolve import (
    MetricRepresentation,
    ResolutionResult,
    all_bases,
    colliding_pair,
    is_resolving,
    metric_dimension,
    representation,
)

__version__ = "0.1.0"

__all__ = [
    "SignedGraph", "build", "negate", "net_degree", "k_neighborhood", "cycle_sign", "is_balanced",
    "PairDistance", "SignedDistanceMatrix", "CompatibilityReport", "signed_distances",
    "enumerate_shortest_paths", "compatibility",
    "MetricRepresentation", "ResolutionResult", "representation", "is_resolving",
    "colliding_pair", "metric_dimension", "all_bases",
    "FamilySpec", "generate",
]
