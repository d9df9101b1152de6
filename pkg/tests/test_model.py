import math
import random

import pytest

from procomp.bpmn import EdgeKind, NodeKind, parse_model, parse_model_file
from procomp.errors import ExtractionError, ModelParseError
from procomp.ett import (
    NormalizationKind,
    NormalizationSpec,
    Polarity,
    load_ett,
)
from procomp.metrics import EXTRACTORS, extract_metrics, normalize_metric

from conftest import FIXTURES, random_bpmn_document
from oracles import naive_counts

BPMN_NS = 'xmlns="http://www.omg.org/spec/BPMN/20100524/MODEL"'


def wrap(body: str) -> str:
    return (
        f'<definitions {BPMN_NS} id="d" targetNamespace="http://x">'
        f"<process id=\"p\">{body}</process></definitions>"
    )


# ---------------------------------------------------------------------------
# Parsing


def test_minimal_sequence_parses():
    graph = parse_model_file(FIXTURES / "sequence.bpmn")
    assert len(graph.nodes) == 3
    assert len(graph.edges) == 2
    assert all(e.kind is EdgeKind.SEQUENCE for e in graph.edges)
    kinds = [n.kind for n in graph.nodes]
    assert kinds.count(NodeKind.START_EVENT) == 1
    assert kinds.count(NodeKind.TASK) == 1
    assert kinds.count(NodeKind.END_EVENT) == 1


def test_xor_loop_fixture_hand_counts():
    graph = parse_model_file(FIXTURES / "xor_loop.bpmn")
    assert len(graph.flow_nodes()) == 5
    assert len(graph.sequence_edges()) == 5
    assert sum(1 for n in graph.nodes if n.kind is NodeKind.GATEWAY_XOR) == 2


def test_dangling_reference_rejected():
    xml = wrap(
        '<startEvent id="s"/><endEvent id="e"/>'
        '<sequenceFlow id="f" sourceRef="s" targetRef="ghost"/>'
    )
    with pytest.raises(ModelParseError, match="ghost"):
        parse_model(xml)


def test_malformed_xml_rejected():
    with pytest.raises(ModelParseError, match="malformed XML"):
        parse_model("<definitions><process>")


def test_document_without_process_rejected():
    xml = f'<definitions {BPMN_NS} id="d"><collaboration id="c"/></definitions>'
    with pytest.raises(ModelParseError, match="no process element"):
        parse_model(xml)


def test_unknown_construct_becomes_generic_with_warning():
    graph = parse_model(wrap('<startEvent id="s"/><complexGateway id="cg"/>'))
    generic = [n for n in graph.nodes if n.kind is NodeKind.GENERIC]
    assert [n.id for n in generic] == ["cg"]
    assert any("complexGateway" in w for w in graph.warnings)


def test_prefixed_namespace_parses_too():
    xml = (
        '<bpmn2:definitions xmlns:bpmn2="http://www.omg.org/spec/BPMN/20100524/MODEL" id="d">'
        '<bpmn2:process id="p">'
        '<bpmn2:startEvent id="s" name="Go"/>'
        '<bpmn2:endEvent id="e"/>'
        '<bpmn2:sequenceFlow id="f" sourceRef="s" targetRef="e"/>'
        "</bpmn2:process></bpmn2:definitions>"
    )
    graph = parse_model(xml)
    assert len(graph.nodes) == 2
    assert graph.nodes[0].label == "Go"


def test_subprocess_children_carry_parent():
    graph = parse_model_file(FIXTURES / "order_fulfillment.bpmn")
    by_id = graph.node_map()
    assert by_id["t4"].parent == "sub1"
    assert by_id["t1"].parent is None
    assert by_id["sub1"].kind is NodeKind.SUB_PROCESS


def test_collaboration_pool_lanes_and_data():
    graph = parse_model_file(FIXTURES / "order_fulfillment.bpmn")
    kinds = [n.kind for n in graph.nodes]
    assert kinds.count(NodeKind.POOL) == 1
    assert kinds.count(NodeKind.LANE) == 2
    assert kinds.count(NodeKind.DATA_OBJECT) == 1
    data_edges = [e for e in graph.edges if e.kind is EdgeKind.DATA]
    assert [(e.source, e.target) for e in data_edges] == [("d1", "t7")]


def test_data_association_on_subprocess_is_an_edge_not_a_node():
    xml = wrap(
        '<dataObjectReference id="d1" name="Input"/>'
        '<subProcess id="sub" name="Work">'
        '<dataInputAssociation id="da1"><sourceRef>d1</sourceRef></dataInputAssociation>'
        '<startEvent id="s2"/><endEvent id="e2"/>'
        '<sequenceFlow id="sf" sourceRef="s2" targetRef="e2"/>'
        "</subProcess>"
        '<startEvent id="s1"/><endEvent id="e1"/>'
        '<sequenceFlow id="f1" sourceRef="s1" targetRef="sub"/>'
        '<sequenceFlow id="f2" sourceRef="sub" targetRef="e1"/>'
    )
    graph = parse_model(xml)
    assert "da1" not in {n.id for n in graph.nodes}
    assert ("d1", "sub") in {(e.source, e.target) for e in graph.edges
                             if e.kind is EdgeKind.DATA}
    assert graph.warnings == ()


# ---------------------------------------------------------------------------
# Extractors on hand-counted fixtures


SEQUENCE_COUNTS = {
    "node-count": 3.0, "edge-count": 2.0, "gateway-count": 0.0,
    "or-gateway-count": 0.0, "start-event-count": 1.0, "end-event-count": 1.0,
    "max-degree": 2.0, "average-connector-degree": 0.0, "nesting-depth": 0.0,
    "unlabeled-ratio": 0.0, "block-structuredness": 1.0, "subprocess-count": 0.0,
    "data-object-count": 0.0, "lane-count": 0.0, "pool-count": 0.0,
    "distinct-kind-count": 3.0, "gateway-mismatch-count": 0.0, "density": 2.0 / 6.0,
}

XOR_LOOP_COUNTS = {
    "node-count": 5.0, "edge-count": 5.0, "gateway-count": 2.0,
    "or-gateway-count": 0.0, "start-event-count": 1.0, "end-event-count": 1.0,
    "max-degree": 3.0, "average-connector-degree": 3.0, "nesting-depth": 0.0,
    "unlabeled-ratio": 0.0, "block-structuredness": 1.0, "subprocess-count": 0.0,
    "data-object-count": 0.0, "lane-count": 0.0, "pool-count": 0.0,
    "distinct-kind-count": 4.0, "gateway-mismatch-count": 0.0, "density": 5.0 / 20.0,
}

AND_PARALLEL_COUNTS = {
    "node-count": 6.0, "edge-count": 6.0, "gateway-count": 2.0,
    "or-gateway-count": 0.0, "start-event-count": 1.0, "end-event-count": 1.0,
    "max-degree": 3.0, "average-connector-degree": 3.0, "nesting-depth": 0.0,
    "unlabeled-ratio": 0.0, "block-structuredness": 1.0, "subprocess-count": 0.0,
    "data-object-count": 0.0, "lane-count": 0.0, "pool-count": 0.0,
    "distinct-kind-count": 4.0, "gateway-mismatch-count": 0.0, "density": 6.0 / 30.0,
}

ORDER_FULFILLMENT_COUNTS = {
    "node-count": 16.0, "edge-count": 16.0, "gateway-count": 4.0,
    "or-gateway-count": 0.0, "start-event-count": 2.0, "end-event-count": 2.0,
    "max-degree": 3.0, "average-connector-degree": 3.0, "nesting-depth": 1.0,
    "unlabeled-ratio": 0.0, "block-structuredness": 1.0, "subprocess-count": 1.0,
    "data-object-count": 1.0, "lane-count": 2.0, "pool-count": 1.0,
    "distinct-kind-count": 6.0, "gateway-mismatch-count": 0.0, "density": 16.0 / 240.0,
}


@pytest.mark.parametrize("fixture,expected", [
    ("sequence.bpmn", SEQUENCE_COUNTS),
    ("xor_loop.bpmn", XOR_LOOP_COUNTS),
    ("and_parallel.bpmn", AND_PARALLEL_COUNTS),
    ("order_fulfillment.bpmn", ORDER_FULFILLMENT_COUNTS),
])
def test_fixture_metrics_match_hand_counts(fixture, expected):
    graph = parse_model_file(FIXTURES / fixture)
    for key, want in expected.items():
        got = EXTRACTORS[key](graph)
        assert got == pytest.approx(want, abs=1e-12), key


def test_mismatched_gateway_kinds_break_block_structure():
    xml = wrap(
        '<startEvent id="s"/>'
        '<exclusiveGateway id="g1"/>'
        '<task id="t1" name="A"/><task id="t2" name="B"/>'
        '<parallelGateway id="g2"/>'
        '<endEvent id="e"/>'
        '<sequenceFlow id="f1" sourceRef="s" targetRef="g1"/>'
        '<sequenceFlow id="f2" sourceRef="g1" targetRef="t1"/>'
        '<sequenceFlow id="f3" sourceRef="g1" targetRef="t2"/>'
        '<sequenceFlow id="f4" sourceRef="t1" targetRef="g2"/>'
        '<sequenceFlow id="f5" sourceRef="t2" targetRef="g2"/>'
        '<sequenceFlow id="f6" sourceRef="g2" targetRef="e"/>'
    )
    graph = parse_model(xml)
    assert EXTRACTORS["block-structuredness"](graph) == 0.0
    assert EXTRACTORS["gateway-mismatch-count"](graph) == 2.0


def test_random_documents_match_naive_traversal():
    rng = random.Random(42)
    for _ in range(100):
        graph = parse_model(random_bpmn_document(rng))
        expected = naive_counts(graph)
        for key, want in expected.items():
            got = EXTRACTORS[key](graph)
            assert got == pytest.approx(want, abs=1e-12), key


# ---------------------------------------------------------------------------
# extract_metrics against a tree


def test_extract_covers_every_model_derived_metric(ett):
    graph = parse_model_file(FIXTURES / "order_fulfillment.bpmn")
    values = {rv.metric_id: rv.value for rv in extract_metrics(graph, ett)}
    model_derived = [
        m for m in ett.all_metrics() if m.source.value == "model-derived"
    ]
    assert set(values) == {m.id for m in model_derived}
    assert values["r-rep-element-count"] == 16.0
    assert values["r-detail-nesting"] == 1.0
    assert all(math.isfinite(v) for v in values.values())


def test_unextractable_metric_is_reported():
    document = {
        "version": "1",
        "criteria": [{
            "id": "c1", "name": "C", "perspective": "reader", "rank": 1,
            "metrics": [{
                "id": "strange-metric", "name": "?", "description": "",
                "source": "model-derived", "rank": 1,
            }],
        }],
    }
    tree = load_ett(document)
    graph = parse_model_file(FIXTURES / "sequence.bpmn")
    with pytest.raises(ExtractionError, match="strange-metric"):
        extract_metrics(graph, tree)


# ---------------------------------------------------------------------------
# Normalization


LINEAR_0_100 = NormalizationSpec(NormalizationKind.LINEAR_CLAMP, 0.0, 100.0)
HIGHER = Polarity.HIGHER_IS_BETTER
LOWER = Polarity.LOWER_IS_BETTER


def test_upper_clamp():
    assert normalize_metric(100.0, LINEAR_0_100, HIGHER) == 10.0
    assert normalize_metric(250.0, LINEAR_0_100, HIGHER) == 10.0


def test_midpoint():
    assert normalize_metric(50.0, LINEAR_0_100, HIGHER) == pytest.approx(5.5)


def test_boolean_false_scores_one():
    spec = NormalizationSpec(NormalizationKind.BOOLEAN)
    assert normalize_metric(0.0, spec, HIGHER) == 1.0
    assert normalize_metric(1.0, spec, HIGHER) == 10.0


def test_lower_is_better_reflects():
    assert normalize_metric(100.0, LINEAR_0_100, LOWER) == 1.0
    assert normalize_metric(0.0, LINEAR_0_100, LOWER) == 10.0


def test_inverse_linear_clamp():
    spec = NormalizationSpec(NormalizationKind.INVERSE_LINEAR_CLAMP, 0.0, 10.0)
    assert normalize_metric(0.0, spec, HIGHER) == 10.0
    assert normalize_metric(10.0, spec, HIGHER) == 1.0


def test_normalization_monotonicity_and_range():
    rng = random.Random(6)
    for _ in range(200):
        lo = rng.uniform(-50, 50)
        hi = lo + rng.uniform(0.1, 100)
        spec = NormalizationSpec(NormalizationKind.LINEAR_CLAMP, lo, hi)
        a, b = sorted(rng.uniform(lo - 20, hi + 20) for _ in range(2))
        score_a = normalize_metric(a, spec, HIGHER)
        score_b = normalize_metric(b, spec, HIGHER)
        assert score_a <= score_b
        assert normalize_metric(a, spec, LOWER) >= normalize_metric(b, spec, LOWER)
        for score in (score_a, score_b):
            assert 1.0 <= score <= 10.0


def test_bad_bounds_rejected():
    with pytest.raises(Exception):
        NormalizationSpec(NormalizationKind.LINEAR_CLAMP, 5.0, 5.0)
