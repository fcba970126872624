"""Back-translation ingestion and insertion evidence collection.

Back-translations are produced by an external MT system, one English
sentence per line, positionally aligned with the document-aligned corpus
serialization for that language. A connective detected sentence-initially
in the back-translated arg2 counts as a translator insertion, because
candidate extraction already guaranteed the original English arg2 carries
none.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .candidates import CandidateInstance
from .lexicon import ConnectiveLexicon, Position
from .tagger import Detection, tag, tokenize

log = logging.getLogger(__name__)

Location = tuple[str, int, int]  # (doc_id, paragraph_idx, sentence_idx)


class AlignmentError(ValueError):
    """Back-translation file does not line up with the corpus."""


@dataclass
class BackTranslationSet:
    """All back-translated sentences of one language, keyed by position."""

    language: str
    sentences: dict[Location, str]

    def get(self, location: Location) -> str | None:
        return self.sentences.get(location)


@dataclass
class LanguageEvidence:
    """One language's detections on the back-translated arg2.

    ``chosen`` is the leftmost sentence-initial detection, or ``None`` when
    the translator inserted nothing the lexicon recognizes; only ``chosen``
    participates in voting.
    """

    language: str
    detections: list[Detection]
    chosen: Detection | None

    def to_dict(self) -> dict:
        return {
            "language": self.language,
            "detections": [d.to_dict() for d in self.detections],
            "chosen": self.chosen.to_dict() if self.chosen else None,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "LanguageEvidence":
        return cls(
            language=d["language"],
            detections=[Detection.from_dict(x) for x in d["detections"]],
            chosen=Detection.from_dict(d["chosen"]) if d["chosen"] else None,
        )


def load_backtranslations(
    language: str, path: str | Path, corpus_index: Sequence[Location]
) -> BackTranslationSet:
    """Map every corpus position to its back-translated English sentence.

    The file must contain exactly one line per corpus sentence, in corpus
    serialization order; CRLF endings are normalized. A line-count mismatch
    is fatal; empty lines are kept with a warning.
    """
    text = Path(path).read_text(encoding="utf-8")
    lines = text.splitlines()
    if len(lines) != len(corpus_index):
        raise AlignmentError(
            f"{path}: expected {len(corpus_index)} lines for language "
            f"{language!r}, got {len(lines)}"
        )
    sentences = {}
    for position, line in zip(corpus_index, lines):
        sentence = line.strip()
        if not sentence:
            log.warning("%s: empty back-translation at %s", path, position)
        sentences[position] = sentence
    return BackTranslationSet(language=language, sentences=sentences)


def collect_evidence(
    candidate: CandidateInstance,
    bts: Iterable[BackTranslationSet],
    lexicon: ConnectiveLexicon,
    diagnostics: dict[str, int] | None = None,
) -> dict[str, LanguageEvidence]:
    """Tag each language's back-translated arg2 and pick the insertion.

    Languages whose back-translation set lacks the candidate's position are
    absent from the result (and counted in ``diagnostics`` under
    ``missing_positions`` when a dict is supplied).
    """
    evidence = {}
    for bt in bts:
        sentence = bt.get(candidate.ref)
        if sentence is None:
            log.warning(
                "no %s back-translation for candidate %s", bt.language, candidate.ref
            )
            if diagnostics is not None:
                diagnostics["missing_positions"] = diagnostics.get("missing_positions", 0) + 1
            continue
        detections = tag(tokenize(sentence), lexicon)
        chosen = next(
            (d for d in detections if d.position is Position.INITIAL), None
        )
        evidence[bt.language] = LanguageEvidence(
            language=bt.language, detections=detections, chosen=chosen
        )
    return evidence


@dataclass
class EvidenceRecord:
    """A candidate bundled with its per-language evidence, as serialized."""

    candidate: CandidateInstance
    evidence: dict[str, LanguageEvidence]

    def to_dict(self) -> dict:
        d = self.candidate.to_dict()
        d["evidence"] = {
            lang: self.evidence[lang].to_dict() for lang in sorted(self.evidence)
        }
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "EvidenceRecord":
        return cls(
            candidate=CandidateInstance.from_dict(d),
            evidence={
                lang: LanguageEvidence.from_dict(sub)
                for lang, sub in d["evidence"].items()
            },
        )


def write_evidence(records: list[EvidenceRecord], path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as out:
        for record in records:
            out.write(json.dumps(record.to_dict(), ensure_ascii=False, sort_keys=True) + "\n")


def read_evidence(path: str | Path) -> list[EvidenceRecord]:
    records = []
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            line = line.strip()
            if line:
                records.append(EvidenceRecord.from_dict(json.loads(line)))
    return records
