"""Training-data serialization and sense distribution reports.

Training files are JSONL with fields {arg1, arg2, sense, source}; a
distribution report holds exact per-sense counts and proportions over the
11 senses. Total-variation distance quantifies how far two reports are
apart (0 identical, 1 disjoint).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .senses import SENSES, Sense
from .vote import LabeledInstance


@dataclass
class TrainingExample:
    arg1: str
    arg2: str
    sense: Sense
    source: str


@dataclass
class DistributionReport:
    """Per-sense counts and proportions for one instance source.

    ``proportions`` is ``None`` for an empty report (undefined, flagged
    rather than fabricated).
    """

    source: str
    counts: dict[Sense, int]
    proportions: dict[Sense, float] | None

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def to_dict(self) -> dict:
        return {
            "source": self.source,
            "counts": {sense.value: self.counts[sense] for sense in SENSES},
            "proportions": (
                None
                if self.proportions is None
                else {sense.value: self.proportions[sense] for sense in SENSES}
            ),
        }


def emit_training_file(instances: Sequence[LabeledInstance], path: str | Path) -> int:
    """Write instances as classifier-ready JSONL; returns lines written."""
    count = 0
    with open(path, "w", encoding="utf-8") as out:
        for instance in instances:
            record = {
                "arg1": instance.arg1,
                "arg2": instance.arg2,
                "sense": instance.sense.value,
                "source": instance.source,
            }
            out.write(json.dumps(record, ensure_ascii=False, sort_keys=True) + "\n")
            count += 1
    return count


def read_training_file(path: str | Path) -> list[TrainingExample]:
    examples = []
    with open(path, encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            line = line.strip()
            if not line:
                continue
            record = json.loads(line)
            try:
                sense = Sense(record["sense"])
            except ValueError:
                raise ValueError(
                    f"{path}: line {line_no}: unknown sense {record['sense']!r}"
                ) from None
            examples.append(
                TrainingExample(
                    arg1=record["arg1"],
                    arg2=record["arg2"],
                    sense=sense,
                    source=record.get("source", ""),
                )
            )
    return examples


def distribution(
    labeled: Iterable[LabeledInstance | TrainingExample], source: str = ""
) -> DistributionReport:
    """Exact per-sense counts; proportions = count/total (undefined if empty)."""
    counts = {sense: 0 for sense in SENSES}
    for instance in labeled:
        counts[instance.sense] += 1
    total = sum(counts.values())
    if total == 0:
        return DistributionReport(source=source, counts=counts, proportions=None)
    proportions = {sense: counts[sense] / total for sense in SENSES}
    return DistributionReport(source=source, counts=counts, proportions=proportions)


def compare_distributions(a: DistributionReport, b: DistributionReport) -> float:
    """Total-variation distance between two reports, in [0, 1]."""
    if a.proportions is None or b.proportions is None:
        raise ValueError("cannot compare an empty distribution report")
    return 0.5 * sum(abs(a.proportions[s] - b.proportions[s]) for s in SENSES)


def write_reports(reports: Sequence[DistributionReport], path: str | Path) -> None:
    """Report JSON: a single {source, counts, proportions} object, or a list."""
    payload = reports[0].to_dict() if len(reports) == 1 else [r.to_dict() for r in reports]
    with open(path, "w", encoding="utf-8") as out:
        json.dump(payload, out, ensure_ascii=False, indent=2)
        out.write("\n")
