"""Risk classification and connectivity analysis for network graphs."""

__version__ = "0.1.0"

from .clustering import Clustering, assign_to_centers, brute_force_optimal, exact_optimal, farthest_first, objective
from .connectivity import (
    ConnectivityReport,
    edge_connectivity,
    edge_disjoint_paths,
    is_k_connected,
    is_k_edge_connected,
    local_edge_connectivity,
    local_vertex_connectivity,
    vertex_connectivity,
    vertex_disjoint_paths,
)
from .graph import Graph, build_graph, connected_components, neighbors, validate_path
from .risk import RiskAssessment, Threat, ThreatProfile, assess, cluster_distance, distance, initial_risk, neighbor_average

__all__ = [
    "Clustering", "ConnectivityReport", "Graph", "RiskAssessment", "Threat", "ThreatProfile",
    "assess", "assign_to_centers", "brute_force_optimal", "build_graph", "cluster_distance",
    "connected_components", "distance", "edge_connectivity", "edge_disjoint_paths", "exact_optimal",
    "farthest_first", "initial_risk", "is_k_connected", "is_k_edge_connected",
    "local_edge_connectivity", "local_vertex_connectivity", "neighbor_average", "neighbors",
    "objective", "validate_path", "vertex_connectivity", "vertex_disjoint_paths",
]
