"""End-to-end smoke tests for the knowpath Python module."""

import math

import pytest

import knowpath as kp

TAXONOMY = """category,class,division
Field A,Class One,science
Field B,Class One,science
Field C,Class Two,science
Field D,Class Three,social_science
Field E,Class Three,social_science
"""

# Citing -> cited counts that route A's strongest path to E through C and B.
CITATIONS = """citing,cited,count
Field C,Field A,9
Field B,Field C,8
Field E,Field B,9
Field B,Field A,2
Field E,Field A,2
Field A,Field E,9
Field D,Field C,5
Field E,Field D,5
Field D,Field E,4
Field A,Field D,4
Field A,Field B,1
"""


@pytest.fixture()
def route(tmp_path):
    taxonomy = tmp_path / "taxonomy.csv"
    taxonomy.write_text(TAXONOMY)
    citations = tmp_path / "citations.csv"
    citations.write_text(CITATIONS)
    fields = kp.load_taxonomy(taxonomy)
    matrix = kp.load_category_citations(citations, fields)
    return fields, matrix


def test_route_paths_and_indicators(route):
    fields, matrix = route
    assert len(fields) == 5
    assert fields.find("Field C") == 2
    assert fields.division(4) == kp.Division.social_science

    net = kp.FlowNetwork.from_citations(matrix)
    table = kp.all_pairs(net)
    assert kp.reconstruct_path(table, 0, 4) == [0, 2, 1, 4]
    assert table.spl(0, 4) == 4
    assert math.isclose(table.spw(0, 4), 25 / 72, rel_tol=0, abs_tol=1e-15)
    assert kp.reconstruct_path(table, 4, 0) == [4, 0]
    assert table.finite_pairs() == 25

    report = kp.compute_indicators(table)
    assert len(report.aspl_source.mean) == 5
    assert report.oisp[2] > 0  # C relays A's outbound paths

    top = kp.rank_fields(report, fields, kp.Metric.oisp, kp.Direction.source, k=1)
    assert len(top) == 1
    assert top[0].field == 0  # A is the hub every return flow crosses
    assert top[0].value == 5.0


def test_single_source_row_matches_table(route):
    _, matrix = route
    net = kp.FlowNetwork.from_citations(matrix)
    table = kp.all_pairs(net, threads=2)
    row = kp.dijkstra_from(net, 0)
    assert row.spl == [table.spl(0, j) for j in range(5)]
    assert row.pred == [table.pred(0, j) for j in range(5)]


def test_heatmap_round_trip_and_census(route):
    fields, matrix = route
    table = kp.all_pairs(kp.FlowNetwork.from_citations(matrix))

    heat = kp.aggregate_heatmap(table, fields, kp.TaxonomyLevel.division, kp.PathMetric.spl)
    assert heat.labels == ["science", "social_science"]
    assert sum(heat.counts) == table.finite_pairs()

    text = kp.heatmap_grid_csv(heat)
    again = kp.parse_heatmap_grid(text, kp.TaxonomyLevel.division, kp.PathMetric.spl)
    assert kp.heatmap_grid_csv(again) == text

    census = kp.classify_paths(table, fields)
    assert census.classified_total() + census.unreachable == 25
    assert kp.path_types_csv(census).startswith("type,count,")

    dist = kp.path_length_distribution(table)
    assert dist.histogram[1] == 5  # one self-path per field
    assert "spl,count" in kp.distribution_csv(dist)


def test_backbone_exports(route):
    fields, matrix = route
    net = kp.FlowNetwork.from_citations(matrix)
    backbone = kp.extract_backbone(net, fields, top_k=1)
    assert len(backbone.nodes) == 5
    assert all(e.width > 0 for e in backbone.edges)
    assert kp.backbone_dot(backbone).startswith("digraph backbone {")
    assert kp.backbone_graphml(backbone).startswith("<?xml")

    science_only = kp.extract_backbone(net, fields, top_k=2, division=kp.Division.science)
    assert {n.label for n in science_only.nodes} == {"Field A", "Field B", "Field C"}


def test_parse_error_is_a_value_error(tmp_path):
    bad = tmp_path / "taxonomy.csv"
    bad.write_text("category,class,division\nField A,Class One,plasma\n")
    with pytest.raises(kp.ParseError):
        kp.load_taxonomy(bad)
    assert issubclass(kp.ParseError, ValueError)


def test_citation_matrix_re_emission(route):
    fields, matrix = route
    text = kp.citation_matrix_csv(matrix, fields)
    assert text.startswith("citing,cited,count\n")
    # Eleven records, none coincident, so eleven data rows survive.
    assert text.count("\n") == 12
