"""Render evaluations as text, markdown, JSON, or CSV.

Display values round half-up to two decimals; the JSON export keeps full
precision and parses back into an identical evaluation.
"""

from __future__ import annotations

import csv
import enum
import io
import json
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal

from .errors import ProcompError
from .ett import MetricSource, Perspective
from .scoring import (
    ComprehensionEvaluation,
    CriterionResult,
    MetricResult,
    NoiseFlag,
)


class ReportFormat(str, enum.Enum):
    TEXT = "text"
    MARKDOWN = "markdown"
    JSON = "json"
    CSV = "csv"


@dataclass(frozen=True)
class ReportDocument:
    format: ReportFormat
    body: str


def fmt2(value: float) -> str:
    """Two-decimal, half-up display form of a score."""
    return str(Decimal(str(value)).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))


def render_summary(evaluation: ComprehensionEvaluation) -> ReportDocument:
    """The summary view: perspective scores, criterion table, noise flags."""
    lines = [
        f"Comprehension summary for {evaluation.model_id}",
        "",
        f"  Modeler score  (S_m): {fmt2(evaluation.s_m)}",
        f"  Reader score   (S_r): {fmt2(evaluation.s_r)}",
        f"  Combined score (S_b): {fmt2(evaluation.s_b)}"
        f"   [weights {evaluation.w_m:g}/{evaluation.w_r:g}]",
        "",
        "  Criterion scores:",
    ]
    for perspective in Perspective:
        group = evaluation.criteria_for(perspective)
        if not group:
            continue
        lines.append(f"    {perspective.value}:")
        width = max(len(c.name) for c in group)
        for criterion in group:
            lines.append(f"      {criterion.name:<{width}}  {fmt2(criterion.score):>5}")
    lines.append("")
    if evaluation.flags:
        lines.append(f"  Noise below threshold {fmt2(evaluation.noise_threshold)}:")
        for flag in evaluation.flags:
            lines.append(f"    {fmt2(flag.score):>5}  {flag.kind:<9}  {flag.name}  ({flag.path})")
    else:
        lines.append(
            f"  No noise detected (no score below threshold "
            f"{fmt2(evaluation.noise_threshold)})."
        )
    lines.append("")
    return ReportDocument(ReportFormat.TEXT, "\n".join(lines))


def _render_markdown(evaluation: ComprehensionEvaluation) -> str:
    lines = [
        f"# Comprehension summary: {evaluation.model_id}",
        "",
        "| Perspective | Score |",
        "|---|---|",
        f"| Modeler (S_m) | {fmt2(evaluation.s_m)} |",
        f"| Reader (S_r) | {fmt2(evaluation.s_r)} |",
        f"| Combined (S_b) | {fmt2(evaluation.s_b)} |",
        "",
        "## Criteria",
        "",
        "| Perspective | Criterion | Score |",
        "|---|---|---|",
    ]
    for criterion in evaluation.criteria:
        lines.append(
            f"| {criterion.perspective.value} | {criterion.name} | {fmt2(criterion.score)} |"
        )
    lines.append("")
    lines.append("## Noise")
    lines.append("")
    if evaluation.flags:
        lines.append("| Score | Kind | Name | Path |")
        lines.append("|---|---|---|---|")
        for flag in evaluation.flags:
            lines.append(f"| {fmt2(flag.score)} | {flag.kind} | {flag.name} | {flag.path} |")
    else:
        lines.append(
            f"No noise detected (no score below threshold {fmt2(evaluation.noise_threshold)})."
        )
    lines.append("")
    return "\n".join(lines)


def _evaluation_document(evaluation: ComprehensionEvaluation) -> dict:
    return {
        "version": "1",
        "model": evaluation.model_id,
        "scores": {
            "modeler": evaluation.s_m,
            "reader": evaluation.s_r,
            "combined": evaluation.s_b,
        },
        "interaction_weights": {"modeler": evaluation.w_m, "reader": evaluation.w_r},
        "noise_threshold": evaluation.noise_threshold,
        "criteria": [
            {
                "id": c.id,
                "name": c.name,
                "perspective": c.perspective.value,
                "weight": c.weight,
                "score": c.score,
                "metrics": [
                    {
                        "id": m.id,
                        "name": m.name,
                        "source": m.source.value,
                        "raw": m.raw,
                        "score": m.score,
                        "weight": m.weight,
                    }
                    for m in c.metrics
                ],
            }
            for c in evaluation.criteria
        ],
        "noise_flags": [
            {
                "kind": f.kind,
                "id": f.id,
                "name": f.name,
                "score": f.score,
                "threshold": f.threshold,
                "perspective": f.perspective.value,
                "criterion": f.criterion_id,
            }
            for f in evaluation.flags
        ],
    }


def parse_evaluation(body: str) -> ComprehensionEvaluation:
    """Inverse of the JSON export."""
    document = json.loads(body)
    criteria = tuple(
        CriterionResult(
            id=c["id"],
            name=c["name"],
            perspective=Perspective(c["perspective"]),
            weight=c["weight"],
            score=c["score"],
            metrics=tuple(
                MetricResult(
                    id=m["id"],
                    name=m["name"],
                    source=MetricSource(m["source"]),
                    raw=m["raw"],
                    score=m["score"],
                    weight=m["weight"],
                )
                for m in c["metrics"]
            ),
        )
        for c in document["criteria"]
    )
    flags = tuple(
        NoiseFlag(
            kind=f["kind"],
            id=f["id"],
            name=f["name"],
            score=f["score"],
            threshold=f["threshold"],
            perspective=Perspective(f["perspective"]),
            criterion_id=f["criterion"],
        )
        for f in document["noise_flags"]
    )
    return ComprehensionEvaluation(
        model_id=document["model"],
        criteria=criteria,
        s_m=document["scores"]["modeler"],
        s_r=document["scores"]["reader"],
        s_b=document["scores"]["combined"],
        w_m=document["interaction_weights"]["modeler"],
        w_r=document["interaction_weights"]["reader"],
        noise_threshold=document["noise_threshold"],
        flags=flags,
    )


def _render_csv(evaluation: ComprehensionEvaluation) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["metric", "criterion", "perspective", "raw", "normalized", "weight"])
    for criterion, metric in evaluation.metric_results():
        writer.writerow([
            metric.id,
            criterion.id,
            criterion.perspective.value,
            "" if metric.raw is None else repr(metric.raw),
            repr(metric.score),
            repr(metric.weight),
        ])
    return buffer.getvalue()


def export(evaluation: ComprehensionEvaluation, format: ReportFormat | str) -> ReportDocument:
    """Render the evaluation in the requested format."""
    try:
        fmt = ReportFormat(format)
    except ValueError:
        supported = ", ".join(f.value for f in ReportFormat)
        raise ProcompError(f"unsupported format {format!r} (supported: {supported})") from None
    if fmt is ReportFormat.TEXT:
        return render_summary(evaluation)
    if fmt is ReportFormat.MARKDOWN:
        return ReportDocument(fmt, _render_markdown(evaluation))
    if fmt is ReportFormat.JSON:
        body = json.dumps(_evaluation_document(evaluation), indent=2) + "\n"
        return ReportDocument(fmt, body)
    return ReportDocument(fmt, _render_csv(evaluation))
