"""Covers of graph matching systems by matroids: verification, constructions and exact search."""

from .analysis import ColorReport, color_analysis, degenerate_triangles, split_degenerate_triangles
from .bounds import KNOWN_MU, mu_bounds, nu_lower, nu_upper
from .certificate import CertificateError, VersionMismatch, format_cover, parse_cover, read_cover, write_cover
from .constructions import (
    ConstructionRefused,
    four_partite_cover,
    greedy_partition,
    partition_matroid_cover,
    recursive_cover,
    restrict_cover,
    two_matroid_cover,
)
from .graph import (
    Circuit,
    Graph,
    GraphError,
    VertexPartition,
    complete,
    complete_bipartite,
    complete_multipartite,
    cycle,
    forbidden_odd_cycle,
    format_graph,
    generate,
    has_forbidden_odd_cycle,
    parse_graph,
    path,
    triangle_degree_ok,
)
from .ip import IpStats, emit_ip, ip_stats
from .matroid import (
    Cover,
    CoverError,
    OracleRefusal,
    check_system,
    intersection_equals_matchings,
    is_matroid_by_bases,
    pairwise_axiom_check,
    verify_cover,
)
from .solver import SearchConfig, SolveResult, compute_mu, decide_mu_leq

__version__ = "0.1.0"
