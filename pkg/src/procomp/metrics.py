"""Model-derived quality metrics and raw-value normalization.

Counting rules for the built-in extractors:

* node/edge counts cover flow nodes (events, tasks, sub-processes,
  gateways, generic nodes) and sequence flows; pools, lanes and data
  objects have their own extractors.
* degree is in-degree plus out-degree over sequence flows.
* the connector degree averages over gateway nodes only.
* nesting depth is the deepest sub-process containment (top level = 0).
* the unlabeled ratio covers tasks and sub-processes, the elements
  modeling conventions expect to be labeled.
* a model counts as block-structured when every gateway split can be
  paired with a join of the same kind: either one on which all outgoing
  branches reconverge, or one sharing a cycle with the split (a loop).
* the gateway mismatch sums |splits - joins| per gateway kind.
* density is sequence flows over n*(n-1) possible flow-node pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .bpmn import GATEWAY_KINDS, NodeKind, ProcessModelGraph
from .errors import ExtractionError
from .ett import (
    EvaluationTheoryTree,
    MetricSource,
    NormalizationKind,
    NormalizationSpec,
    Polarity,
)


@dataclass(frozen=True)
class RawMetricValue:
    metric_id: str
    value: float


def _degrees(graph: ProcessModelGraph) -> dict[str, tuple[int, int]]:
    degrees = {n.id: [0, 0] for n in graph.flow_nodes()}
    for edge in graph.sequence_edges():
        if edge.source in degrees:
            degrees[edge.source][1] += 1
        if edge.target in degrees:
            degrees[edge.target][0] += 1
    return {node_id: (ind, out) for node_id, (ind, out) in degrees.items()}


def _count_kind(graph: ProcessModelGraph, *kinds: NodeKind) -> float:
    return float(sum(1 for n in graph.nodes if n.kind in kinds))


def node_count(graph: ProcessModelGraph) -> float:
    return float(len(graph.flow_nodes()))


def edge_count(graph: ProcessModelGraph) -> float:
    return float(len(graph.sequence_edges()))


def gateway_count(graph: ProcessModelGraph) -> float:
    return _count_kind(graph, *GATEWAY_KINDS)


def or_gateway_count(graph: ProcessModelGraph) -> float:
    return _count_kind(graph, NodeKind.GATEWAY_OR)


def start_event_count(graph: ProcessModelGraph) -> float:
    return _count_kind(graph, NodeKind.START_EVENT)


def end_event_count(graph: ProcessModelGraph) -> float:
    return _count_kind(graph, NodeKind.END_EVENT)


def max_degree(graph: ProcessModelGraph) -> float:
    degrees = _degrees(graph)
    if not degrees:
        return 0.0
    return float(max(ind + out for ind, out in degrees.values()))


def average_connector_degree(graph: ProcessModelGraph) -> float:
    degrees = _degrees(graph)
    gateway_ids = [n.id for n in graph.nodes if n.kind in GATEWAY_KINDS]
    if not gateway_ids:
        return 0.0
    return sum(sum(degrees[g]) for g in gateway_ids) / len(gateway_ids)


def nesting_depth(graph: ProcessModelGraph) -> float:
    parents = {n.id: n.parent for n in graph.nodes}
    deepest = 0
    for node in graph.flow_nodes():
        depth = 0
        parent = node.parent
        while parent is not None:
            depth += 1
            parent = parents.get(parent)
        deepest = max(deepest, depth)
    return float(deepest)


def unlabeled_ratio(graph: ProcessModelGraph) -> float:
    activities = [n for n in graph.nodes if n.kind in (NodeKind.TASK, NodeKind.SUB_PROCESS)]
    if not activities:
        return 0.0
    return sum(1 for n in activities if not n.label) / len(activities)


def subprocess_count(graph: ProcessModelGraph) -> float:
    return _count_kind(graph, NodeKind.SUB_PROCESS)


def data_object_count(graph: ProcessModelGraph) -> float:
    return _count_kind(graph, NodeKind.DATA_OBJECT)


def lane_count(graph: ProcessModelGraph) -> float:
    return _count_kind(graph, NodeKind.LANE)


def pool_count(graph: ProcessModelGraph) -> float:
    return _count_kind(graph, NodeKind.POOL)


def distinct_kind_count(graph: ProcessModelGraph) -> float:
    return float(len({n.kind for n in graph.flow_nodes()}))


def gateway_mismatch_count(graph: ProcessModelGraph) -> float:
    degrees = _degrees(graph)
    mismatch = 0
    for kind in GATEWAY_KINDS:
        splits = joins = 0
        for node in graph.nodes:
            if node.kind is not kind:
                continue
            ind, out = degrees[node.id]
            if out >= 2:
                splits += 1
            if ind >= 2:
                joins += 1
        mismatch += abs(splits - joins)
    return float(mismatch)


def density(graph: ProcessModelGraph) -> float:
    n = len(graph.flow_nodes())
    if n <= 1:
        return 0.0
    return len(graph.sequence_edges()) / (n * (n - 1))


def _reachable(adjacency: dict[str, list[str]], start: str) -> set[str]:
    seen = {start}
    stack = [start]
    while stack:
        for succ in adjacency.get(stack.pop(), []):
            if succ not in seen:
                seen.add(succ)
                stack.append(succ)
    return seen


def block_structuredness(graph: ProcessModelGraph) -> float:
    """1.0 when every gateway split pairs with a same-kind join, else 0.0.

    A split matches a join either when all its outgoing branches can reach
    that join (a block), or when split and join lie on a common cycle (a
    structured loop).
    """
    degrees = _degrees(graph)
    adjacency: dict[str, list[str]] = {}
    for edge in graph.sequence_edges():
        adjacency.setdefault(edge.source, []).append(edge.target)

    nodes = {n.id: n for n in graph.flow_nodes()}
    reach_cache: dict[str, set[str]] = {}

    def reach(node_id: str) -> set[str]:
        if node_id not in reach_cache:
            reach_cache[node_id] = _reachable(adjacency, node_id)
        return reach_cache[node_id]

    for node in graph.flow_nodes():
        if node.kind not in GATEWAY_KINDS or degrees[node.id][1] < 2:
            continue
        joins = [
            other.id
            for other in graph.flow_nodes()
            if other.kind is node.kind and degrees[other.id][0] >= 2
        ]
        branch_meet: set[str] | None = None
        for succ in adjacency.get(node.id, []):
            branch_meet = reach(succ) if branch_meet is None else branch_meet & reach(succ)
        forward = branch_meet is not None and any(j in branch_meet for j in joins)
        looped = any(j in reach(node.id) and node.id in reach(j) for j in joins)
        if not (forward or looped):
            return 0.0
    return 1.0


EXTRACTORS: dict[str, Callable[[ProcessModelGraph], float]] = {
    "node-count": node_count,
    "edge-count": edge_count,
    "gateway-count": gateway_count,
    "or-gateway-count": or_gateway_count,
    "start-event-count": start_event_count,
    "end-event-count": end_event_count,
    "max-degree": max_degree,
    "average-connector-degree": average_connector_degree,
    "nesting-depth": nesting_depth,
    "unlabeled-ratio": unlabeled_ratio,
    "block-structuredness": block_structuredness,
    "subprocess-count": subprocess_count,
    "data-object-count": data_object_count,
    "lane-count": lane_count,
    "pool-count": pool_count,
    "distinct-kind-count": distinct_kind_count,
    "gateway-mismatch-count": gateway_mismatch_count,
    "density": density,
}


def extract_metrics(graph: ProcessModelGraph, tree: EvaluationTheoryTree) -> list[RawMetricValue]:
    """One raw value per model-derived metric in the tree.

    Metrics resolve to extractors through their binding key; any metric
    without a matching extractor makes the whole extraction fail.
    """
    results: list[RawMetricValue] = []
    missing: list[str] = []
    for metric in tree.all_metrics():
        if metric.source is not MetricSource.MODEL_DERIVED:
            continue
        extractor = EXTRACTORS.get(metric.binding_key)
        if extractor is None:
            missing.append(metric.id)
            continue
        results.append(RawMetricValue(metric_id=metric.id, value=extractor(graph)))
    if missing:
        raise ExtractionError(missing)
    return results


def normalize_metric(value: float, spec: NormalizationSpec, polarity: Polarity) -> float:
    """Map a raw value into [1, 10]; low-is-better polarity reflects it."""
    if spec.kind is NormalizationKind.BOOLEAN:
        score = 10.0 if value else 1.0
    elif spec.kind is NormalizationKind.IDENTITY:
        score = min(max(value, 1.0), 10.0)
    else:
        clamped = min(max(value, spec.lo), spec.hi)
        fraction = (clamped - spec.lo) / (spec.hi - spec.lo)
        if spec.kind is NormalizationKind.LINEAR_CLAMP:
            score = 1.0 + 9.0 * fraction
        else:
            score = 10.0 - 9.0 * fraction
    if polarity is Polarity.LOWER_IS_BETTER:
        score = 11.0 - score
    return score
