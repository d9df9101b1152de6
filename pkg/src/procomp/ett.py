"""The evaluation tree: two perspectives, ranked criteria, ranked metrics.

Scoring is driven entirely by this structure. Trees are immutable after
construction; the weighting pass returns a new tree.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Any

from .errors import ConfigError
from .ranking import dnlog_weight

INTERACTION_SUM_TOL = 1e-9
CANONICAL_TOTAL = 96
CANONICAL_MODELER = 54
CANONICAL_READER = 42


class Perspective(str, enum.Enum):
    MODELER = "modeler"
    READER = "reader"


class MetricSource(str, enum.Enum):
    MODEL_DERIVED = "model-derived"
    MODELER_QUESTIONNAIRE = "modeler-questionnaire"
    READER_QUESTIONNAIRE = "reader-questionnaire"
    LANGUAGE_REGISTRY = "language-registry"


class Polarity(str, enum.Enum):
    HIGHER_IS_BETTER = "higher-is-better"
    LOWER_IS_BETTER = "lower-is-better"


class NormalizationKind(str, enum.Enum):
    IDENTITY = "identity"
    LINEAR_CLAMP = "linear-clamp"
    INVERSE_LINEAR_CLAMP = "inverse-linear-clamp"
    BOOLEAN = "boolean"


@dataclass(frozen=True)
class NormalizationSpec:
    """How a raw metric value maps into the universal [1, 10] scale."""

    kind: NormalizationKind
    lo: float | None = None
    hi: float | None = None

    def __post_init__(self):
        if self.kind in (NormalizationKind.LINEAR_CLAMP, NormalizationKind.INVERSE_LINEAR_CLAMP):
            if self.lo is None or self.hi is None:
                raise ConfigError(f"{self.kind.value} normalization needs lo and hi")
            if not self.lo < self.hi:
                raise ConfigError(f"normalization bounds must satisfy lo < hi, got {self.lo} >= {self.hi}")


IDENTITY = NormalizationSpec(NormalizationKind.IDENTITY)


@dataclass(frozen=True)
class QualityMetric:
    """One measurable aspect under a criterion.

    ``binding`` names the value source for non-questionnaire metrics: the
    extractor key for model-derived metrics, or a registry quantity
    ("complexity", "control-flow-pattern-support") for language metrics.
    It defaults to the metric id.
    """

    id: str
    name: str
    description: str
    source: MetricSource
    rank: int
    normalization: NormalizationSpec = IDENTITY
    polarity: Polarity = Polarity.HIGHER_IS_BETTER
    weight: float | None = None
    binding: str | None = None

    @property
    def binding_key(self) -> str:
        return self.binding if self.binding is not None else self.id


@dataclass(frozen=True)
class QualityCriterion:
    id: str
    name: str
    perspective: Perspective
    rank: int
    metrics: tuple[QualityMetric, ...]
    weight: float | None = None


@dataclass(frozen=True)
class EvaluationTheoryTree:
    """Criteria for both perspectives plus the global weighting parameters.

    ``survey_d`` is the top weight handed to rank 1 in every sibling group;
    ``interaction_weights`` is the (modeler, reader) pair used to combine
    the two perspective scores.
    """

    version: str
    criteria: tuple[QualityCriterion, ...]
    survey_d: float = 10.0
    interaction_weights: tuple[float, float] = (0.156, 0.844)

    def criteria_for(self, perspective: Perspective) -> tuple[QualityCriterion, ...]:
        return tuple(c for c in self.criteria if c.perspective is perspective)

    def metric_count(self, perspective: Perspective | None = None) -> int:
        if perspective is None:
            return sum(len(c.metrics) for c in self.criteria)
        return sum(len(c.metrics) for c in self.criteria_for(perspective))

    def all_metrics(self) -> tuple[QualityMetric, ...]:
        return tuple(m for c in self.criteria for m in c.metrics)

    def find_metric(self, metric_id: str) -> tuple[QualityCriterion, QualityMetric] | None:
        for criterion in self.criteria:
            for metric in criterion.metrics:
                if metric.id == metric_id:
                    return criterion, metric
        return None


# ---------------------------------------------------------------------------
# Loading and serialization


def _require(document: dict, key: str, path: str) -> Any:
    if key not in document:
        raise ConfigError(f"missing field {key!r}", path=path)
    return document[key]


def _parse_enum(enum_cls, value: str, path: str):
    try:
        return enum_cls(value)
    except ValueError:
        allowed = ", ".join(e.value for e in enum_cls)
        raise ConfigError(f"unknown value {value!r}, expected one of: {allowed}", path=path) from None


def _parse_normalization(document: dict | None, path: str) -> NormalizationSpec:
    if document is None:
        return IDENTITY
    kind = _parse_enum(NormalizationKind, _require(document, "kind", path), f"{path}.kind")
    try:
        return NormalizationSpec(kind=kind, lo=document.get("lo"), hi=document.get("hi"))
    except ConfigError as exc:
        raise ConfigError(str(exc), path=path) from None


def _parse_metric(document: dict, path: str) -> QualityMetric:
    rank = _require(document, "rank", path)
    if not isinstance(rank, int) or rank < 1:
        raise ConfigError(f"rank must be a positive integer, got {rank!r}", path=f"{path}.rank")
    weight = document.get("weight")
    if weight is not None and weight <= 0:
        raise ConfigError(f"weight must be > 0, got {weight!r}", path=f"{path}.weight")
    return QualityMetric(
        id=_require(document, "id", path),
        name=document.get("name", document["id"]),
        description=document.get("description", ""),
        source=_parse_enum(MetricSource, _require(document, "source", path), f"{path}.source"),
        rank=rank,
        normalization=_parse_normalization(document.get("normalization"), f"{path}.normalization"),
        polarity=_parse_enum(Polarity, document.get("polarity", Polarity.HIGHER_IS_BETTER.value), f"{path}.polarity"),
        weight=weight,
        binding=document.get("binding"),
    )


def _check_rank_permutation(ranks: list[int], what: str, path: str) -> None:
    if sorted(ranks) != list(range(1, len(ranks) + 1)):
        raise ConfigError(
            f"rank permutation violation: {what} ranks {sorted(ranks)} are not 1..{len(ranks)}",
            path=path,
        )


def load_ett(document: dict) -> EvaluationTheoryTree:
    """Build a tree from its document form, enforcing structural invariants.

    Raises ConfigError (with a path into the document) on malformed input,
    duplicate metric ids, rank permutation violations, or unknown
    perspectives. Weights are optional; absent weights are derived later by
    assign_weights.
    """
    if not isinstance(document, dict):
        raise ConfigError("tree document must be a mapping")
    version = str(_require(document, "version", ""))
    raw_weights = document.get("interaction_weights", {"modeler": 0.156, "reader": 0.844})
    try:
        interaction = (float(raw_weights["modeler"]), float(raw_weights["reader"]))
    except (KeyError, TypeError, ValueError):
        raise ConfigError(
            "interaction_weights must map 'modeler' and 'reader' to numbers",
            path="interaction_weights",
        ) from None
    survey_d = float(document.get("survey_d", 10.0))

    criteria: list[QualityCriterion] = []
    seen_metric_ids: dict[str, str] = {}
    seen_criterion_ids: set[str] = set()
    for ci, cdoc in enumerate(_require(document, "criteria", "")):
        cpath = f"criteria[{ci}]"
        cid = _require(cdoc, "id", cpath)
        if cid in seen_criterion_ids:
            raise ConfigError(f"duplicate criterion id {cid!r}", path=cpath)
        seen_criterion_ids.add(cid)
        perspective = _parse_enum(Perspective, _require(cdoc, "perspective", cpath), f"{cpath}.perspective")
        crank = _require(cdoc, "rank", cpath)
        if not isinstance(crank, int) or crank < 1:
            raise ConfigError(f"rank must be a positive integer, got {crank!r}", path=f"{cpath}.rank")
        cweight = cdoc.get("weight")
        if cweight is not None and cweight <= 0:
            raise ConfigError(f"weight must be > 0, got {cweight!r}", path=f"{cpath}.weight")

        metrics: list[QualityMetric] = []
        for mi, mdoc in enumerate(cdoc.get("metrics", [])):
            mpath = f"{cpath}.metrics[{mi}]"
            metric = _parse_metric(mdoc, mpath)
            if metric.id in seen_metric_ids:
                raise ConfigError(
                    f"duplicate metric id {metric.id!r} (also under {seen_metric_ids[metric.id]})",
                    path=mpath,
                )
            seen_metric_ids[metric.id] = cid
            metrics.append(metric)
        _check_rank_permutation([m.rank for m in metrics], "metric", f"{cpath}.metrics")
        metrics.sort(key=lambda m: m.rank)
        criteria.append(
            QualityCriterion(
                id=cid,
                name=cdoc.get("name", cid),
                perspective=perspective,
                rank=crank,
                metrics=tuple(metrics),
                weight=cweight,
            )
        )

    for perspective in Perspective:
        group = [c for c in criteria if c.perspective is perspective]
        if group:
            _check_rank_permutation([c.rank for c in group], "criterion", f"criteria({perspective.value})")

    criteria.sort(key=lambda c: (c.perspective.value, c.rank))
    return EvaluationTheoryTree(
        version=version,
        criteria=tuple(criteria),
        survey_d=survey_d,
        interaction_weights=interaction,
    )


def load_ett_file(path: str | Path) -> EvaluationTheoryTree:
    with open(path, encoding="utf-8") as fh:
        try:
            document = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"malformed tree document: {exc}", path=str(path)) from exc
    return load_ett(document)


def serialize_ett(tree: EvaluationTheoryTree) -> dict:
    """Document form of a tree, in canonical order (perspective, ranks)."""
    criteria = sorted(tree.criteria, key=lambda c: (c.perspective.value, c.rank))
    out_criteria = []
    for criterion in criteria:
        metrics = []
        for metric in sorted(criterion.metrics, key=lambda m: m.rank):
            mdoc: dict[str, Any] = {
                "id": metric.id,
                "name": metric.name,
                "description": metric.description,
                "source": metric.source.value,
                "rank": metric.rank,
                "polarity": metric.polarity.value,
            }
            if metric.normalization.kind is not NormalizationKind.IDENTITY:
                norm: dict[str, Any] = {"kind": metric.normalization.kind.value}
                if metric.normalization.lo is not None:
                    norm["lo"] = metric.normalization.lo
                    norm["hi"] = metric.normalization.hi
                mdoc["normalization"] = norm
            if metric.binding is not None:
                mdoc["binding"] = metric.binding
            if metric.weight is not None:
                mdoc["weight"] = metric.weight
            metrics.append(mdoc)
        cdoc: dict[str, Any] = {
            "id": criterion.id,
            "name": criterion.name,
            "perspective": criterion.perspective.value,
            "rank": criterion.rank,
            "metrics": metrics,
        }
        if criterion.weight is not None:
            cdoc["weight"] = criterion.weight
        out_criteria.append(cdoc)
    return {
        "version": tree.version,
        "survey_d": tree.survey_d,
        "interaction_weights": {
            "modeler": tree.interaction_weights[0],
            "reader": tree.interaction_weights[1],
        },
        "criteria": out_criteria,
    }


# ---------------------------------------------------------------------------
# Weighting


def assign_weights(
    tree: EvaluationTheoryTree,
    d: float | None = None,
    *,
    criterion_level: bool = True,
    metric_level: bool = True,
) -> EvaluationTheoryTree:
    """Derive rank weights for every sibling group; returns a new tree.

    Within each group of n ranked siblings, rank 1 gets weight d, rank n
    gets weight 1, with a constant ratio in between; a singleton group gets
    d. Levels can be weighted independently; a disabled level gets uniform
    weight 1.
    """
    if d is None:
        d = tree.survey_d
    if d <= 1:
        raise ValueError(f"weighting requires d > 1, got {d}")

    new_criteria: list[QualityCriterion] = []
    for perspective in Perspective:
        group = tree.criteria_for(perspective)
        n_criteria = len(group)
        for criterion in group:
            if not criterion.metrics:
                raise ConfigError(f"criterion {criterion.id!r} has no metrics to weight")
            cweight = dnlog_weight(n_criteria, criterion.rank, d) if criterion_level else 1.0
            n_metrics = len(criterion.metrics)
            new_metrics = tuple(
                replace(m, weight=dnlog_weight(n_metrics, m.rank, d) if metric_level else 1.0)
                for m in criterion.metrics
            )
            new_criteria.append(replace(criterion, weight=cweight, metrics=new_metrics))
    new_criteria.sort(key=lambda c: (c.perspective.value, c.rank))
    return replace(tree, criteria=tuple(new_criteria))


def ensure_weighted(tree: EvaluationTheoryTree) -> EvaluationTheoryTree:
    """Assign weights with the tree's own d unless every weight is present."""
    have_all = all(c.weight is not None for c in tree.criteria) and all(
        m.weight is not None for m in tree.all_metrics()
    )
    return tree if have_all else assign_weights(tree)


# ---------------------------------------------------------------------------
# Validation


@dataclass(frozen=True)
class ValidationEntry:
    severity: str  # "error" | "warning"
    code: str
    path: str
    message: str


@dataclass(frozen=True)
class ValidationReport:
    entries: tuple[ValidationEntry, ...]

    @property
    def ok(self) -> bool:
        return not any(e.severity == "error" for e in self.entries)

    @property
    def empty(self) -> bool:
        return not self.entries

    def __iter__(self):
        return iter(self.entries)

    def render(self) -> str:
        if self.empty:
            return "tree is valid"
        return "\n".join(f"{e.severity}: [{e.code}] {e.path}: {e.message}" for e in self.entries)


def validate_ett(tree: EvaluationTheoryTree) -> ValidationReport:
    """Invariant check over an already-constructed tree.

    Structural violations are errors; non-canonical catalog shapes (metric
    counts differing from the shipped 96 = 54 + 42) are warnings only, since
    the catalog is meant to be extended.
    """
    entries: list[ValidationEntry] = []

    def err(code: str, path: str, message: str) -> None:
        entries.append(ValidationEntry("error", code, path, message))

    def warn(code: str, path: str, message: str) -> None:
        entries.append(ValidationEntry("warning", code, path, message))

    w_m, w_r = tree.interaction_weights
    if abs(w_m + w_r - 1.0) > INTERACTION_SUM_TOL:
        err("interaction-weights-sum", "interaction_weights",
            f"interaction weights must sum to 1, got {w_m} + {w_r}")
    if not (0.0 <= w_m <= 1.0 and 0.0 <= w_r <= 1.0):
        err("interaction-weights-range", "interaction_weights",
            f"interaction weights must lie in [0, 1], got ({w_m}, {w_r})")
    if tree.survey_d <= 1:
        err("survey-d-range", "survey_d", f"survey_d must be > 1, got {tree.survey_d}")

    seen_metric_ids: dict[str, str] = {}
    for perspective in Perspective:
        group = tree.criteria_for(perspective)
        ranks = [c.rank for c in group]
        if group and sorted(ranks) != list(range(1, len(group) + 1)):
            err("criterion-rank-permutation", f"criteria({perspective.value})",
                f"criterion ranks {sorted(ranks)} are not a permutation of 1..{len(group)}")
        for criterion in group:
            cpath = f"criteria[{criterion.id}]"
            if not criterion.metrics:
                err("empty-criterion", cpath, "criterion holds no metrics")
            if criterion.weight is not None and criterion.weight <= 0:
                err("nonpositive-weight", cpath, f"weight {criterion.weight} is not > 0")
            mranks = [m.rank for m in criterion.metrics]
            if criterion.metrics and sorted(mranks) != list(range(1, len(mranks) + 1)):
                err("rank-permutation", f"{cpath}.metrics",
                    f"metric ranks {sorted(mranks)} are not a permutation of 1..{len(mranks)}")
            for metric in criterion.metrics:
                mpath = f"{cpath}.metrics[{metric.id}]"
                if metric.id in seen_metric_ids:
                    err("duplicate-metric-id", mpath,
                        f"metric id also appears under {seen_metric_ids[metric.id]}")
                seen_metric_ids[metric.id] = criterion.id
                if metric.weight is not None and metric.weight <= 0:
                    err("nonpositive-weight", mpath, f"weight {metric.weight} is not > 0")

    total = tree.metric_count()
    modeler = tree.metric_count(Perspective.MODELER)
    reader = tree.metric_count(Perspective.READER)
    if (total, modeler, reader) != (CANONICAL_TOTAL, CANONICAL_MODELER, CANONICAL_READER):
        warn("non-canonical-metric-count", "criteria",
             f"catalog holds {total} metrics ({modeler} modeler / {reader} reader); "
             f"the shipped default holds {CANONICAL_TOTAL} "
             f"({CANONICAL_MODELER} / {CANONICAL_READER})")

    return ValidationReport(tuple(entries))
