"""Inter-sentential implicit-relation candidate extraction.

A candidate is an adjacent English sentence pair within one paragraph whose
second sentence carries no connective detection at all: an initial
connective marks the pair as explicit, and a detected medial discourse
adverbial disqualifies it too (erring toward exclusion keeps mined labels
cleaner). Pairs never cross paragraph or document boundaries.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .ingest import ParallelDocument
from .lexicon import ConnectiveLexicon
from .tagger import tag, tokenize


@dataclass(frozen=True)
class CandidateInstance:
    """An (arg1, arg2) pair eligible to receive a mined implicit label.

    ``pair_idx`` is the in-paragraph index of arg2. ``target_refs`` maps
    each target language to the sentence aligned with arg2.
    """

    doc_id: str
    paragraph_idx: int
    pair_idx: int
    arg1: str
    arg2: str
    target_refs: dict[str, str]

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
            "target_refs": dict(sorted(self.target_refs.items())),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CandidateInstance":
        return cls(
            doc_id=d["doc_id"],
            paragraph_idx=d["paragraph_idx"],
            pair_idx=d["pair_idx"],
            arg1=d["arg1"],
            arg2=d["arg2"],
            target_refs=d["target_refs"],
        )


def extract_candidates(
    corpus: Iterable[ParallelDocument], lexicon: ConnectiveLexicon
) -> list[CandidateInstance]:
    """One candidate per adjacent in-paragraph pair with connective-free arg2.

    Output is ordered by (doc_id, paragraph_idx, pair_idx), following corpus
    order.
    """
    candidates = []
    for doc in corpus:
        for para_idx, paragraph in enumerate(doc.paragraphs):
            for pair_idx in range(1, len(paragraph)):
                arg2 = paragraph[pair_idx]["en"]
                if tag(tokenize(arg2), lexicon):
                    continue
                candidates.append(
                    CandidateInstance(
                        doc_id=doc.doc_id,
                        paragraph_idx=para_idx,
                        pair_idx=pair_idx,
                        arg1=paragraph[pair_idx - 1]["en"],
                        arg2=arg2,
                        target_refs={
                            lang: sentence
                            for lang, sentence in paragraph[pair_idx].items()
                            if lang != "en"
                        },
                    )
                )
    return candidates


def write_candidates(candidates: list[CandidateInstance], path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as out:
        for candidate in candidates:
            out.write(
                json.dumps(candidate.to_dict(), ensure_ascii=False, sort_keys=True) + "\n"
            )


def read_candidates(path: str | Path) -> list[CandidateInstance]:
    candidates = []
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            line = line.strip()
            if line:
                candidates.append(CandidateInstance.from_dict(json.loads(line)))
    return candidates
