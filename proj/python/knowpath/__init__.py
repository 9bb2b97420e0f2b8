"""Directed knowledge-flow analysis over inter-field citation counts.

Thin re-export of the compiled ``_knowpath`` extension: build a citation
matrix, reverse it into a flow network, run deterministic all-pairs shortest
paths, and derive indicators, heat maps, path-type censuses, and backbones.
"""

from ._knowpath import (  # noqa: F401
    NO_PRED,
    PATH_TYPES,
    TIE_EPS,
    BackboneEdge,
    BackboneGraph,
    BackboneNode,
    CitationMatrix,
    Direction,
    Division,
    FieldTable,
    FlowNetwork,
    HeatMap,
    IndicatorReport,
    IndicatorStats,
    LengthDistribution,
    Metric,
    ParseError,
    PathMetric,
    PathRow,
    PathTable,
    PathType,
    PathTypeCensus,
    RankEntry,
    ReachabilityReport,
    TaxonomyLevel,
    aggregate_heatmap,
    all_pairs,
    backbone_dot,
    backbone_graphml,
    citation_matrix_csv,
    classify_paths,
    collapse_journal_citations,
    compute_aspl,
    compute_aspw,
    compute_indicators,
    compute_oisp,
    dijkstra_from,
    distribution_csv,
    division_token,
    emit_heatmap,
    emit_indicator_reports,
    extract_backbone,
    heatmap_grid_csv,
    length_distribution_of,
    level_token,
    load_category_citations,
    load_taxonomy,
    metric_token,
    parse_division,
    parse_heatmap_grid,
    path_length_distribution,
    path_type_label,
    path_types_csv,
    rank_fields,
    reaggregate_heatmap,
    reconstruct_path,
    strongly_connected,
)

__all__ = [name for name in dir() if not name.startswith("_")]
