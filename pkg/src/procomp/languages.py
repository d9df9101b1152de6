"""Quantify modeling languages: complexity norms and workflow-pattern support.

A language is summarized by three counts (element types, characteristics,
relation types); their Euclidean norm is the complexity score. Pattern
support is tallied per pattern type against a fixed catalog size.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass
from pathlib import Path

from .errors import ConfigError


class PatternType(str, enum.Enum):
    CONTROL_FLOW = "control-flow"
    DATA = "data"
    RESOURCE = "resource"


class Support(str, enum.Enum):
    FULL = "full"
    PARTIAL = "partial"
    NONE = "none"


@dataclass(frozen=True)
class PatternEntry:
    id: str
    type: PatternType
    support: Support
    name: str = ""


@dataclass(frozen=True)
class PatternSupportTable:
    """Support entries plus the catalog size per pattern type.

    Patterns absent from ``entries`` count as unsupported; catalog sizes are
    the percentage denominators.
    """

    entries: tuple[PatternEntry, ...]
    catalog_sizes: dict[PatternType, int]

    def __post_init__(self):
        seen: set[tuple[str, PatternType]] = set()
        for entry in self.entries:
            key = (entry.id, entry.type)
            if key in seen:
                raise ConfigError(f"duplicate pattern {entry.id!r} of type {entry.type.value}")
            seen.add(key)
        for ptype in PatternType:
            supported = sum(
                1 for e in self.entries
                if e.type is ptype and e.support is not Support.NONE
            )
            size = self.catalog_sizes.get(ptype, 0)
            if supported > size:
                raise ConfigError(
                    f"{ptype.value} catalog size {size} is smaller than "
                    f"{supported} supported patterns"
                )

    def counts(self, ptype: PatternType, partial_weight: float = 1.0) -> float:
        """Weighted count of fully and partially supported patterns of a type."""
        total = 0.0
        for entry in self.entries:
            if entry.type is not ptype:
                continue
            if entry.support is Support.FULL:
                total += 1.0
            elif entry.support is Support.PARTIAL:
                total += partial_weight
        return total


@dataclass(frozen=True)
class LanguageDescriptor:
    """Counts and pattern table for one modeling language.

    ``elements`` is the number of distinct modeling element types,
    ``characteristics`` the aggregate count of per-element variants
    (markers, decorations), and ``relations`` the aggregate count of
    relation types elements can participate in. The counting rule for the
    shipped descriptors is documented in the descriptor data module.
    """

    name: str
    elements: float
    characteristics: float
    relations: float
    patterns: PatternSupportTable

    def __post_init__(self):
        if self.elements < 0 or self.characteristics < 0 or self.relations < 0:
            raise ConfigError(f"descriptor counts for {self.name!r} must be >= 0")
        if self.elements == self.characteristics == self.relations == 0:
            raise ConfigError(f"descriptor {self.name!r} has all-zero counts")


def complexity_score(descriptor: LanguageDescriptor) -> float:
    """Euclidean norm of the (elements, characteristics, relations) vector."""
    return math.sqrt(
        descriptor.elements ** 2
        + descriptor.characteristics ** 2
        + descriptor.relations ** 2
    )


def normalize_complexity(
    registry: list[LanguageDescriptor] | tuple[LanguageDescriptor, ...],
    *,
    full_range: bool = False,
) -> dict[str, float]:
    """Map every registered language's complexity norm into [1, 10].

    The default mapping is 10 - (10*c - c) / (10 * max_c), i.e. ten minus
    nine tenths of the norm's share of the registry maximum: the most
    complex language lands exactly on 9.1 and all others above it. With
    ``full_range`` the scores instead spread linearly over the whole [1, 10]
    interval, for registries where the narrow default band is too compressed.
    """
    if not registry:
        raise ConfigError("cannot normalize an empty language registry")
    norms = {d.name: complexity_score(d) for d in registry}
    max_norm = max(norms.values())
    if max_norm <= 0:
        raise ConfigError("registry maximum complexity must be > 0")
    if full_range:
        min_norm = min(norms.values())
        spread = max_norm - min_norm
        if spread == 0:
            return {name: 10.0 for name in norms}
        return {name: 10.0 - 9.0 * ((c - min_norm) / spread) for name, c in norms.items()}
    # (10*c - c) / (10*max) == 0.9 * (c / max); the ratio form hits the
    # 9.1 endpoint exactly when c == max.
    return {name: 10.0 - 0.9 * (c / max_norm) for name, c in norms.items()}


def pattern_score(
    descriptor: LanguageDescriptor,
    *,
    partial_weight: float = 1.0,
) -> tuple[float, dict[PatternType, float]]:
    """Total supported-pattern count and the per-type support share.

    Partial support counts like full support by default; ``partial_weight``
    scales it. Types with a zero catalog size are omitted from the share
    map.
    """
    total = 0.0
    percentages: dict[PatternType, float] = {}
    for ptype in PatternType:
        count = descriptor.patterns.counts(ptype, partial_weight)
        total += count
        size = descriptor.patterns.catalog_sizes.get(ptype, 0)
        if size > 0:
            percentages[ptype] = count / size
    return total, percentages


def control_flow_percentage(descriptor: LanguageDescriptor, *, partial_weight: float = 1.0) -> float:
    """Share of the control-flow catalog the language supports, in [0, 1]."""
    size = descriptor.patterns.catalog_sizes.get(PatternType.CONTROL_FLOW, 0)
    if size <= 0:
        raise ConfigError(
            f"descriptor {descriptor.name!r} has no control-flow pattern catalog"
        )
    return descriptor.patterns.counts(PatternType.CONTROL_FLOW, partial_weight) / size


# ---------------------------------------------------------------------------
# Document form


def load_descriptor(document: dict) -> LanguageDescriptor:
    try:
        catalog_raw = document.get("pattern_catalog", {})
        catalog = {PatternType(key): int(size) for key, size in catalog_raw.items()}
        # entry order in the file is irrelevant; keep a canonical order
        entries = tuple(sorted(
            (
                PatternEntry(
                    id=row["id"],
                    type=PatternType(row["type"]),
                    support=Support(row["support"]),
                    name=row.get("name", ""),
                )
                for row in document.get("patterns", [])
            ),
            key=lambda e: (e.type.value, e.id),
        ))
        return LanguageDescriptor(
            name=document["name"],
            elements=float(document["elements"]),
            characteristics=float(document["characteristics"]),
            relations=float(document["relations"]),
            patterns=PatternSupportTable(entries=entries, catalog_sizes=catalog),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"bad language descriptor: {exc}") from exc


def load_descriptor_file(path: str | Path) -> LanguageDescriptor:
    with open(path, encoding="utf-8") as fh:
        try:
            document = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"malformed descriptor document: {exc}") from exc
    return load_descriptor(document)


def serialize_descriptor(descriptor: LanguageDescriptor) -> dict:
    patterns = sorted(descriptor.patterns.entries, key=lambda e: (e.type.value, e.id))
    return {
        "version": "1",
        "name": descriptor.name,
        "elements": descriptor.elements,
        "characteristics": descriptor.characteristics,
        "relations": descriptor.relations,
        "pattern_catalog": {
            ptype.value: size for ptype, size in sorted(
                descriptor.patterns.catalog_sizes.items(), key=lambda kv: kv[0].value
            )
        },
        "patterns": [
            {"id": e.id, "name": e.name, "type": e.type.value, "support": e.support.value}
            for e in patterns
        ],
    }
