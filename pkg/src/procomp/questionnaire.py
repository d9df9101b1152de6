"""Questionnaire schemas, response validation, and response scoring.

True/false answers score 10 or 1; a Likert level maps linearly onto
[1, 10]. Reversed questions flip the score (11 - s). When several
questions feed one metric, the metric score is their arithmetic mean.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from pathlib import Path

from .errors import ConfigError, ResponseError
from .ett import EvaluationTheoryTree, MetricSource, Perspective


class QuestionKind(str, enum.Enum):
    TRUE_FALSE = "true-false"
    LIKERT = "likert"


class QuestionPolarity(str, enum.Enum):
    POSITIVE = "positive"
    REVERSED = "reversed"


@dataclass(frozen=True)
class Question:
    id: str
    text: str
    kind: QuestionKind
    metric_id: str
    levels: int | None = None  # Likert only
    polarity: QuestionPolarity = QuestionPolarity.POSITIVE

    def __post_init__(self):
        if self.kind is QuestionKind.LIKERT:
            if self.levels is None or self.levels < 2:
                raise ConfigError(f"question {self.id!r}: likert needs levels >= 2")
        elif self.levels is not None:
            raise ConfigError(f"question {self.id!r}: true/false takes no levels")


@dataclass(frozen=True)
class QuestionnaireSchema:
    version: str
    perspective: Perspective
    questions: tuple[Question, ...]

    def __post_init__(self):
        seen: set[str] = set()
        for question in self.questions:
            if question.id in seen:
                raise ConfigError(f"duplicate question id {question.id!r}")
            seen.add(question.id)

    def question_map(self) -> dict[str, Question]:
        return {q.id: q for q in self.questions}

    @property
    def expected_source(self) -> MetricSource:
        if self.perspective is Perspective.MODELER:
            return MetricSource.MODELER_QUESTIONNAIRE
        return MetricSource.READER_QUESTIONNAIRE


@dataclass(frozen=True)
class ResponseSet:
    respondent: str
    schema_version: str
    answers: dict[str, bool | int]


@dataclass(frozen=True)
class ResponseIssue:
    code: str  # missing-answer | out-of-range | unknown-question | wrong-type
    question_id: str
    message: str


def validate_responses(schema: QuestionnaireSchema, responses: ResponseSet) -> list[ResponseIssue]:
    """Missing answers, unknown ids, wrong answer types, out-of-range levels."""
    issues: list[ResponseIssue] = []
    questions = schema.question_map()
    for question_id in responses.answers:
        if question_id not in questions:
            issues.append(ResponseIssue("unknown-question", question_id,
                                        f"answer for unknown question {question_id!r}"))
    for question in schema.questions:
        if question.id not in responses.answers:
            issues.append(ResponseIssue("missing-answer", question.id,
                                        f"missing answer: {question.id}"))
            continue
        answer = responses.answers[question.id]
        if question.kind is QuestionKind.TRUE_FALSE:
            if not isinstance(answer, bool):
                issues.append(ResponseIssue("wrong-type", question.id,
                                            f"expected true/false, got {answer!r}"))
        else:
            if isinstance(answer, bool) or not isinstance(answer, int):
                issues.append(ResponseIssue("wrong-type", question.id,
                                            f"expected an integer level, got {answer!r}"))
            elif not 1 <= answer <= question.levels:
                issues.append(ResponseIssue(
                    "out-of-range", question.id,
                    f"level {answer} outside [1, {question.levels}]"))
    return issues


def question_score(question: Question, answer: bool | int) -> float:
    if question.kind is QuestionKind.TRUE_FALSE:
        score = 10.0 if answer else 1.0
    else:
        score = 1.0 + 9.0 * (answer - 1) / (question.levels - 1)
    if question.polarity is QuestionPolarity.REVERSED:
        score = 11.0 - score
    return score


def score_responses(schema: QuestionnaireSchema, responses: ResponseSet) -> dict[str, float]:
    """Per-metric scores in [1, 10] for one respondent.

    Rejects response sets that do not validate cleanly.
    """
    issues = validate_responses(schema, responses)
    if issues:
        raise ResponseError(
            f"response set {responses.respondent!r} failed validation "
            f"({len(issues)} issue(s))",
            report=issues,
        )
    per_metric: dict[str, list[float]] = {}
    for question in schema.questions:
        score = question_score(question, responses.answers[question.id])
        per_metric.setdefault(question.metric_id, []).append(score)
    return {metric: sum(scores) / len(scores) for metric, scores in per_metric.items()}


def average_scores(score_maps: list[dict[str, float]]) -> dict[str, float]:
    """Average per-metric scores across respondents (all maps share keys)."""
    if not score_maps:
        return {}
    keys = score_maps[0].keys()
    return {key: sum(m[key] for m in score_maps) / len(score_maps) for key in keys}


def validate_schema(schema: QuestionnaireSchema, tree: EvaluationTheoryTree) -> list[ResponseIssue]:
    """Cross-check question bindings against the evaluation tree.

    Every question must target an existing metric whose source matches the
    schema's perspective; every questionnaire-sourced metric of that
    perspective must be covered by at least one question.
    """
    issues: list[ResponseIssue] = []
    covered: set[str] = set()
    for question in schema.questions:
        found = tree.find_metric(question.metric_id)
        if found is None:
            issues.append(ResponseIssue("unknown-metric", question.id,
                                        f"question targets unknown metric {question.metric_id!r}"))
            continue
        _, metric = found
        if metric.source is not schema.expected_source:
            issues.append(ResponseIssue(
                "source-mismatch", question.id,
                f"metric {metric.id!r} has source {metric.source.value}, "
                f"expected {schema.expected_source.value}"))
        covered.add(question.metric_id)
    for criterion in tree.criteria_for(schema.perspective):
        for metric in criterion.metrics:
            if metric.source is schema.expected_source and metric.id not in covered:
                issues.append(ResponseIssue("uncovered-metric", "",
                                            f"no question covers metric {metric.id!r}"))
    return issues


# ---------------------------------------------------------------------------
# Document form


def load_schema(document: dict) -> QuestionnaireSchema:
    try:
        questions = tuple(
            Question(
                id=q["id"],
                text=q["text"],
                kind=QuestionKind(q["kind"]),
                metric_id=q["metric"],
                levels=q.get("levels"),
                polarity=QuestionPolarity(q.get("polarity", "positive")),
            )
            for q in document["questions"]
        )
        return QuestionnaireSchema(
            version=str(document["version"]),
            perspective=Perspective(document["perspective"]),
            questions=questions,
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"bad questionnaire schema: {exc}") from exc


def load_schema_file(path: str | Path) -> QuestionnaireSchema:
    with open(path, encoding="utf-8") as fh:
        try:
            document = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"malformed schema document: {exc}") from exc
    return load_schema(document)


def serialize_schema(schema: QuestionnaireSchema) -> dict:
    questions = []
    for q in schema.questions:
        qdoc: dict = {"id": q.id, "text": q.text, "kind": q.kind.value, "metric": q.metric_id}
        if q.levels is not None:
            qdoc["levels"] = q.levels
        if q.polarity is not QuestionPolarity.POSITIVE:
            qdoc["polarity"] = q.polarity.value
        questions.append(qdoc)
    return {
        "version": schema.version,
        "perspective": schema.perspective.value,
        "questions": questions,
    }


def load_responses(document: dict) -> ResponseSet:
    try:
        answers = dict(document["answers"])
        for qid, answer in answers.items():
            if not isinstance(answer, (bool, int)):
                raise ConfigError(f"answer for {qid!r} must be a boolean or integer")
        return ResponseSet(
            respondent=str(document["respondent"]),
            schema_version=str(document.get("schema_version", "1")),
            answers=answers,
        )
    except (KeyError, TypeError) as exc:
        raise ConfigError(f"bad response document: {exc}") from exc


def load_responses_file(path: str | Path) -> ResponseSet:
    with open(path, encoding="utf-8") as fh:
        try:
            document = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"malformed response document: {exc}") from exc
    return load_responses(document)


def serialize_responses(responses: ResponseSet) -> dict:
    return {
        "version": "1",
        "respondent": responses.respondent,
        "schema_version": responses.schema_version,
        "answers": dict(sorted(responses.answers.items())),
    }
