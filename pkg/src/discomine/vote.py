"""Cross-lingual majority voting over insertion evidence.

Agreement is defined on the sense label, not the connective string:
different surface connectives voting for the same sense agree. Each
language casts at most one vote per candidate (its chosen detection).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .backtranslation import EvidenceRecord, LanguageEvidence
from .senses import Sense

MODES = ("all", "vote2", "vote3")


@dataclass(frozen=True)
class VoteResult:
    sense_counts: dict[Sense, int]
    agreement_level: int
    majority_sense: Sense | None


def aggregate(evidence: dict[str, LanguageEvidence]) -> VoteResult:
    """Count chosen senses across languages.

    ``agreement_level`` is the largest per-sense count (0 without evidence);
    ``majority_sense`` is set only when that maximum is unique and at least 2.
    """
    counts: dict[Sense, int] = {}
    for lang_evidence in evidence.values():
        if lang_evidence.chosen is not None:
            sense = lang_evidence.chosen.sense
            counts[sense] = counts.get(sense, 0) + 1
    if not counts:
        return VoteResult(sense_counts={}, agreement_level=0, majority_sense=None)
    level = max(counts.values())
    top = [sense for sense, count in counts.items() if count == level]
    majority = top[0] if level >= 2 and len(top) == 1 else None
    return VoteResult(sense_counts=counts, agreement_level=level, majority_sense=majority)


@dataclass(frozen=True)
class LabeledInstance:
    """A candidate with its final sense label and provenance.

    ``source`` is a language id for per-language emission, or ``vote2`` /
    ``vote3`` for majority-filtered instances.
    """

    doc_id: str
    paragraph_idx: int
    pair_idx: int
    arg1: str
    arg2: str
    sense: Sense
    source: str
    contributing_languages: tuple[str, ...]

    @property
    def ref(self) -> tuple[str, int, int]:
        return (self.doc_id, self.paragraph_idx, self.pair_idx)

    def to_dict(self) -> dict:
        return {
            "doc_id": self.doc_id,
            "paragraph_idx": self.paragraph_idx,
            "pair_idx": self.pair_idx,
            "arg1": self.arg1,
            "arg2": self.arg2,
            "sense": self.sense.value,
            "source": self.source,
            "contributing_languages": list(self.contributing_languages),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "LabeledInstance":
        return cls(
            doc_id=d["doc_id"],
            paragraph_idx=d["paragraph_idx"],
            pair_idx=d["pair_idx"],
            arg1=d["arg1"],
            arg2=d["arg2"],
            sense=Sense(d["sense"]),
            source=d["source"],
            contributing_languages=tuple(d["contributing_languages"]),
        )


def materialize(records: Iterable[EvidenceRecord], mode: str) -> list[LabeledInstance]:
    """Turn evidence into labeled instances under one of three modes.

    - ``all``: one instance per (candidate, language with a chosen
      detection); conflicting labels for the same pair are allowed.
    - ``vote2``: one instance per candidate whose sense counts have a unique
      maximum of at least 2; labeled with that majority sense.
    - ``vote3``: one instance per candidate where all three languages chose
      the same sense.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    instances = []
    for record in records:
        candidate = record.candidate
        if mode == "all":
            for lang in sorted(record.evidence):
                chosen = record.evidence[lang].chosen
                if chosen is None:
                    continue
                instances.append(
                    LabeledInstance(
                        doc_id=candidate.doc_id,
                        paragraph_idx=candidate.paragraph_idx,
                        pair_idx=candidate.pair_idx,
                        arg1=candidate.arg1,
                        arg2=candidate.arg2,
                        sense=chosen.sense,
                        source=lang,
                        contributing_languages=(lang,),
                    )
                )
            continue
        result = aggregate(record.evidence)
        if mode == "vote2":
            if result.majority_sense is None:
                continue
            sense = result.majority_sense
        else:  # vote3
            if result.agreement_level < 3 or result.majority_sense is None:
                continue
            sense = result.majority_sense
        contributing = tuple(
            sorted(
                lang
                for lang, ev in record.evidence.items()
                if ev.chosen is not None and ev.chosen.sense is sense
            )
        )
        instances.append(
            LabeledInstance(
                doc_id=candidate.doc_id,
                paragraph_idx=candidate.paragraph_idx,
                pair_idx=candidate.pair_idx,
                arg1=candidate.arg1,
                arg2=candidate.arg2,
                sense=sense,
                source=mode,
                contributing_languages=contributing,
            )
        )
    return instances


def write_labeled(instances: list[LabeledInstance], path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as out:
        for instance in instances:
            out.write(json.dumps(instance.to_dict(), ensure_ascii=False, sort_keys=True) + "\n")


def read_labeled(path: str | Path) -> list[LabeledInstance]:
    instances = []
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            line = line.strip()
            if line:
                instances.append(LabeledInstance.from_dict(json.loads(line)))
    return instances
