"""Turn aggregated survey placements into item scores, ranks and weights.

Five rank-weighting methods are supported: rank sum, reciprocal rank,
rank exponent, discounted cumulative gain, and the distance-normalized
logarithm (an exponentially decaying weight that spans [1, d] across the
rank range). Item scores are weighted arithmetic means of the placement
fractions.
"""

from __future__ import annotations

import csv
import enum
import math
from dataclasses import dataclass, field
from pathlib import Path

from .errors import ConfigError

PLACEMENT_SUM_TOL = 1e-9
_GROWTH_TOL = 1e-9


class MethodKind(str, enum.Enum):
    RANK_SUM = "rank-sum"
    RECIPROCAL_RANK = "reciprocal-rank"
    RANK_EXPONENT = "rank-exponent"
    DCG = "dcg"
    DNLOG = "dnlog"


@dataclass(frozen=True)
class RankMethod:
    """A weighting method plus its parameter, if it takes one.

    ``param`` is the exponent for RANK_EXPONENT (default 2.0) and the top
    weight d for DNLOG (default 10.0); it is ignored by the other kinds.
    """

    kind: MethodKind
    param: float | None = None

    def __post_init__(self):
        if self.kind is MethodKind.RANK_EXPONENT:
            p = 2.0 if self.param is None else self.param
            if p <= 0:
                raise ValueError(f"rank-exponent power must be > 0, got {p}")
            object.__setattr__(self, "param", p)
        elif self.kind is MethodKind.DNLOG:
            d = 10.0 if self.param is None else self.param
            if d <= 1:
                raise ValueError(f"dnlog top weight d must be > 1, got {d}")
            object.__setattr__(self, "param", d)
        else:
            object.__setattr__(self, "param", None)

    @property
    def label(self) -> str:
        if self.kind is MethodKind.RANK_EXPONENT:
            return f"rank-exponent(p={self.param:g})"
        if self.kind is MethodKind.DNLOG:
            return f"dnlog(d={self.param:g})"
        return self.kind.value


def default_methods() -> tuple[RankMethod, ...]:
    """The five methods with their default parameters, in comparison order."""
    return (
        RankMethod(MethodKind.RANK_SUM),
        RankMethod(MethodKind.RECIPROCAL_RANK),
        RankMethod(MethodKind.RANK_EXPONENT),
        RankMethod(MethodKind.DCG),
        RankMethod(MethodKind.DNLOG),
    )


def dnlog_weight(n: int, k: int, d: float) -> float:
    """Exponential rank weight: 10 ** ((n - k) * log10(d) / (n - 1)).

    Rank 1 gets weight d, rank n gets weight 1, and consecutive ranks keep a
    constant ratio. A singleton group (n == 1) gets the full weight d.
    """
    if d <= 1:
        raise ValueError(f"dnlog requires d > 1, got {d}")
    if not 1 <= k <= n:
        raise ValueError(f"rank k={k} out of range [1, {n}]")
    if n == 1:
        return d
    return 10.0 ** ((n - k) * (math.log10(d) / (n - 1)))


def method_weight(method: RankMethod, n: int, k: int) -> float:
    """Weight of rank k among n ranks under the given method."""
    if not 1 <= k <= n:
        raise ValueError(f"rank k={k} out of range [1, {n}]")
    if method.kind is MethodKind.RANK_SUM:
        return float(n - k + 1)
    if method.kind is MethodKind.RECIPROCAL_RANK:
        return 1.0 / k
    if method.kind is MethodKind.RANK_EXPONENT:
        return float(n - k + 1) ** method.param
    if method.kind is MethodKind.DCG:
        return 1.0 / math.log2(k + 1)
    return dnlog_weight(n, k, method.param)


@dataclass(frozen=True)
class SurveyDataset:
    """Aggregated placements: fraction of respondents per (item, rank).

    ``placements[item]`` holds one fraction per rank 1..n and must sum to 1.
    """

    items: tuple[str, ...]
    n: int
    placements: dict[str, tuple[float, ...]] = field(compare=False)
    respondent_count: int = 1

    def __post_init__(self):
        if self.n < 1:
            raise ConfigError(f"rank count must be >= 1, got {self.n}")
        if self.respondent_count < 1:
            raise ConfigError(f"respondent count must be >= 1, got {self.respondent_count}")
        if len(set(self.items)) != len(self.items):
            raise ConfigError("duplicate item ids in survey dataset")
        for item in self.items:
            ps = self.placements.get(item)
            if ps is None:
                raise ConfigError(f"no placements for item {item!r}")
            if len(ps) != self.n:
                raise ConfigError(
                    f"item {item!r} has {len(ps)} placements, expected {self.n}"
                )
            if any(p < 0 for p in ps):
                raise ConfigError(f"negative placement fraction for item {item!r}")
            if abs(sum(ps) - 1.0) > PLACEMENT_SUM_TOL:
                raise ConfigError(
                    f"placements for item {item!r} sum to {sum(ps)!r}, expected 1"
                )


def load_survey_csv(path: str | Path, respondent_count: int = 1) -> SurveyDataset:
    """Read a dataset from a CSV with columns item, rank, fraction."""
    rows: list[tuple[str, int, float]] = []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        required = {"item", "rank", "fraction"}
        if reader.fieldnames is None or not required.issubset(reader.fieldnames):
            raise ConfigError(f"survey CSV must have columns {sorted(required)}")
        for lineno, row in enumerate(reader, start=2):
            try:
                rows.append((row["item"], int(row["rank"]), float(row["fraction"])))
            except (TypeError, ValueError) as exc:
                raise ConfigError(f"bad survey row: {exc}", path=f"line {lineno}") from exc
    if not rows:
        raise ConfigError("survey CSV contains no data rows")
    n = max(rank for _, rank, _ in rows)
    items: list[str] = []
    placements: dict[str, list[float]] = {}
    for item, rank, fraction in rows:
        if item not in placements:
            items.append(item)
            placements[item] = [0.0] * n
        if not 1 <= rank <= n:
            raise ConfigError(f"rank {rank} out of range for item {item!r}")
        placements[item][rank - 1] = fraction
    return SurveyDataset(
        items=tuple(items),
        n=n,
        placements={item: tuple(ps) for item, ps in placements.items()},
        respondent_count=respondent_count,
    )


def weighted_mean_rank(placements: tuple[float, ...] | list[float],
                       weights: tuple[float, ...] | list[float]) -> float:
    """Weighted arithmetic mean of placement fractions: sum(w*p) / sum(w)."""
    if len(placements) != len(weights):
        raise ValueError(
            f"{len(placements)} placements vs {len(weights)} weights"
        )
    total = sum(weights)
    return sum(w * p for w, p in zip(weights, placements)) / total


def rank_items(dataset: SurveyDataset, method: RankMethod) -> list[tuple[str, float]]:
    """Score every item and order by score descending, ties by item id."""
    weights = [method_weight(method, dataset.n, k) for k in range(1, dataset.n + 1)]
    scored = [
        (item, weighted_mean_rank(dataset.placements[item], weights))
        for item in dataset.items
    ]
    scored.sort(key=lambda pair: (-pair[1], pair[0]))
    return scored


def classify_growth(method: RankMethod, n: int) -> str:
    """Label how the method's weights fall across ranks.

    Probes at least five ranks so that two-point sequences (where constant
    difference and constant ratio coincide) do not mislabel the shape.
    """
    probe = max(n, 5)
    ws = [method_weight(method, probe, k) for k in range(1, probe + 1)]
    diffs = [a - b for a, b in zip(ws, ws[1:])]
    ratios = [a / b for a, b in zip(ws, ws[1:])]

    def _constant(values: list[float]) -> bool:
        spread = max(values) - min(values)
        return spread <= _GROWTH_TOL * max(1.0, abs(max(values, key=abs)))

    if _constant(diffs) and not _constant(ratios):
        return "linear-like"
    if _constant(ratios):
        return "exponential"
    return "polynomial"


@dataclass(frozen=True)
class MethodComparison:
    method: str
    growth: str
    ordering: tuple[str, ...]
    scores: tuple[tuple[str, float], ...]


def compare_methods(dataset: SurveyDataset,
                    methods: tuple[RankMethod, ...] | None = None) -> list[MethodComparison]:
    """Rank the dataset under each method and classify its weight growth."""
    rows = []
    for method in methods or default_methods():
        scored = rank_items(dataset, method)
        rows.append(
            MethodComparison(
                method=method.label,
                growth=classify_growth(method, dataset.n),
                ordering=tuple(item for item, _ in scored),
                scores=tuple(scored),
            )
        )
    return rows
