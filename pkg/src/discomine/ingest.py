"""Europarl-style corpus ingestion.

Parses line-aligned per-language files into document-aligned, paragraph
structured parallel documents. The markup conventions are::

    <CHAPTER id=...>   starts a new document
    <SPEAKER id=...>   starts a new paragraph within the document
    <P>                starts a new paragraph within the document

Everything else on a line is a sentence. Input files are assumed
line-aligned (line i of each file is a translation of line i); no sentence
alignment is attempted. A document is kept only when its marker skeleton
(paragraph openers and per-paragraph sentence counts) is identical across
all configured languages; mismatching documents are dropped and counted,
never fatal.
"""

from __future__ import annotations

import json
import logging
import re
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

from .tagger import tokenize

log = logging.getLogger(__name__)


class LineKind(str, Enum):
    CHAPTER = "chapter_marker"
    SPEAKER = "speaker_marker"
    PARAGRAPH = "paragraph_marker"
    SENTENCE = "sentence"


@dataclass(frozen=True)
class RawCorpusLine:
    text: str
    kind: LineKind


class EncodingError(ValueError):
    """Input bytes do not decode in the declared encoding."""


class CorpusFormatError(ValueError):
    """Unknown corpus format identifier."""


#: Markup prefixes per corpus format, checked in order.
CORPUS_FORMATS: dict[str, tuple[tuple[str, LineKind], ...]] = {
    "europarl": (
        ("<CHAPTER", LineKind.CHAPTER),
        ("<SPEAKER", LineKind.SPEAKER),
        ("<P>", LineKind.PARAGRAPH),
    ),
}

_TAG_RE = re.compile(r"^<[^<>]*>$")
_ID_RE = re.compile(r'id\s*=\s*"?([^">\s]+)')


def parse_lines(raw_text: str, format: str = "europarl") -> list[RawCorpusLine]:
    """Classify every non-blank line of ``raw_text`` as markup or sentence.

    Markup is recognized by exact prefix match. A line that looks like a tag
    but is not a known marker is classified as a sentence (permissive) and
    logged as a warning. Sentence order is preserved.
    """
    try:
        markup = CORPUS_FORMATS[format]
    except KeyError:
        raise CorpusFormatError(
            f"unknown corpus format {format!r}; known: {sorted(CORPUS_FORMATS)}"
        ) from None
    lines = []
    for line_no, raw in enumerate(raw_text.splitlines(), start=1):
        text = raw.strip()
        if not text:
            continue
        kind = LineKind.SENTENCE
        for prefix, marker_kind in markup:
            if text.startswith(prefix):
                kind = marker_kind
                break
        if kind is LineKind.SENTENCE and _TAG_RE.match(text):
            log.warning("line %d: unrecognized markup %r treated as sentence", line_no, text)
        lines.append(RawCorpusLine(text=text, kind=kind))
    return lines


def read_corpus_file(path: str | Path, format: str = "europarl", encoding: str = "utf-8") -> list[RawCorpusLine]:
    """Read and classify one language's corpus file.

    Raises :class:`EncodingError` naming the offending line on undecodable
    input.
    """
    data = Path(path).read_bytes()
    try:
        text = data.decode(encoding)
    except UnicodeDecodeError as exc:
        line_no = data.count(b"\n", 0, exc.start) + 1
        raise EncodingError(f"{path}: line {line_no}: not valid {encoding}") from exc
    return parse_lines(text, format=format)


@dataclass
class ParallelDocument:
    """Document-aligned sentences for English plus the target languages.

    ``paragraphs`` is an ordered list of paragraphs; each paragraph is an
    ordered list of sentence groups; each group maps language id to the
    sentence string for that language.
    """

    doc_id: str
    paragraphs: list[list[dict[str, str]]]

    def languages(self) -> list[str]:
        for paragraph in self.paragraphs:
            for group in paragraph:
                return sorted(group)
        return []

    def group_count(self) -> int:
        return sum(len(p) for p in self.paragraphs)

    def to_dict(self) -> dict:
        return {"doc_id": self.doc_id, "paragraphs": self.paragraphs}

    @classmethod
    def from_dict(cls, d: dict) -> "ParallelDocument":
        return cls(doc_id=d["doc_id"], paragraphs=d["paragraphs"])


@dataclass
class CorpusStats:
    document_count: int = 0
    sentence_pair_count: int = 0
    per_language_counts: dict[str, int] = field(default_factory=dict)
    dropped_documents: int = 0

    def to_dict(self) -> dict:
        return {
            "document_count": self.document_count,
            "sentence_pair_count": self.sentence_pair_count,
            "per_language_counts": dict(sorted(self.per_language_counts.items())),
            "dropped_documents": self.dropped_documents,
        }


@dataclass
class _LangDocument:
    chapter_id: str | None
    # one (opener_kind, sentences) per paragraph, empty paragraphs included
    paragraphs: list[tuple[str, list[str]]]

    def skeleton(self) -> tuple:
        return (
            self.chapter_id,
            tuple((kind, len(sentences)) for kind, sentences in self.paragraphs),
        )


def _split_documents(lines: list[RawCorpusLine]) -> list[_LangDocument]:
    docs: list[_LangDocument] = []
    current: _LangDocument | None = None
    for line in lines:
        if line.kind is LineKind.CHAPTER:
            match = _ID_RE.search(line.text)
            current = _LangDocument(
                chapter_id=match.group(1) if match else None,
                paragraphs=[("chapter", [])],
            )
            docs.append(current)
        elif line.kind in (LineKind.SPEAKER, LineKind.PARAGRAPH):
            opener = "speaker" if line.kind is LineKind.SPEAKER else "paragraph"
            if current is None:
                current = _LangDocument(chapter_id=None, paragraphs=[])
                docs.append(current)
            current.paragraphs.append((opener, []))
        else:
            if current is None:
                # leading material before the first chapter marker
                current = _LangDocument(chapter_id=None, paragraphs=[("start", [])])
                docs.append(current)
            if not current.paragraphs:
                current.paragraphs.append(("start", []))
            current.paragraphs[-1][1].append(line.text)
    return docs


def _keep_sentence(text: str) -> bool:
    # minimal sanitization: at least 2 tokens, not punctuation-only
    tokens = tokenize(text)
    if len(tokens) < 2:
        return False
    return any(re.search(r"\w", t) for t in tokens)


def align_documents(
    per_language_lines: dict[str, list[RawCorpusLine]],
) -> tuple[list[ParallelDocument], CorpusStats]:
    """Build parallel documents from per-language classified lines.

    Documents are anchored on the English split: the i-th English document
    is paired with the i-th document of every other language and kept only
    if all skeletons agree. Sentence groups whose members fail the minimal
    sentence filter (fewer than 2 tokens, or punctuation only, in any
    language) are dropped together; documents left empty are dropped.
    """
    if "en" not in per_language_lines:
        raise ValueError("English ('en') must be among the configured languages")
    languages = sorted(per_language_lines)
    split = {lang: _split_documents(per_language_lines[lang]) for lang in languages}

    stats = CorpusStats(
        per_language_counts={
            lang: sum(1 for line in per_language_lines[lang] if line.kind is LineKind.SENTENCE)
            for lang in languages
        }
    )

    documents = []
    for ordinal, en_doc in enumerate(split["en"]):
        lang_docs = {}
        for lang in languages:
            if ordinal >= len(split[lang]):
                lang_docs = None
                break
            lang_docs[lang] = split[lang][ordinal]
        if lang_docs is None or any(
            doc.skeleton() != en_doc.skeleton() for doc in lang_docs.values()
        ):
            stats.dropped_documents += 1
            log.info("document %d dropped: marker skeleton mismatch", ordinal)
            continue

        doc_id = f"d{ordinal:04d}"
        if en_doc.chapter_id is not None:
            doc_id += f"-ch{en_doc.chapter_id}"
        paragraphs = []
        for para_idx in range(len(en_doc.paragraphs)):
            groups = []
            for sent_idx in range(len(en_doc.paragraphs[para_idx][1])):
                group = {
                    lang: lang_docs[lang].paragraphs[para_idx][1][sent_idx]
                    for lang in languages
                }
                if all(_keep_sentence(s) for s in group.values()):
                    groups.append(group)
            if groups:
                paragraphs.append(groups)
        if not paragraphs:
            stats.dropped_documents += 1
            log.info("document %d dropped: empty after sentence filtering", ordinal)
            continue
        documents.append(ParallelDocument(doc_id=doc_id, paragraphs=paragraphs))
        stats.document_count += 1
        stats.sentence_pair_count += sum(len(p) for p in paragraphs)

    return documents, stats


def doc_to_json(doc: ParallelDocument) -> str:
    return json.dumps(doc.to_dict(), ensure_ascii=False, sort_keys=True, separators=(",", ":"))


def write_corpus(documents: list[ParallelDocument], path: str | Path) -> None:
    """One JSON object per document per line; byte-deterministic."""
    with open(path, "w", encoding="utf-8") as out:
        for doc in documents:
            out.write(doc_to_json(doc) + "\n")


def read_corpus(path: str | Path) -> list[ParallelDocument]:
    documents = []
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            line = line.strip()
            if line:
                documents.append(ParallelDocument.from_dict(json.loads(line)))
    return documents


def corpus_positions(documents: list[ParallelDocument]) -> list[tuple[str, int, int]]:
    """(doc_id, paragraph_idx, sentence_idx) triples in serialization order."""
    positions = []
    for doc in documents:
        for para_idx, paragraph in enumerate(doc.paragraphs):
            for sent_idx in range(len(paragraph)):
                positions.append((doc.doc_id, para_idx, sent_idx))
    return positions


def write_stats(stats: CorpusStats, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as out:
        json.dump(stats.to_dict(), out, ensure_ascii=False, sort_keys=True, indent=2)
        out.write("\n")


def ingest_directory(
    directory: str | Path,
    languages: list[str],
    format: str = "europarl",
) -> tuple[list[ParallelDocument], CorpusStats]:
    """Read ``<lang>.txt`` for each language from ``directory`` and align."""
    directory = Path(directory)
    per_language = {}
    for lang in languages:
        path = directory / f"{lang}.txt"
        if not path.exists():
            raise FileNotFoundError(f"missing corpus file for language {lang!r}: {path}")
        per_language[lang] = read_corpus_file(path, format=format)
    return align_documents(per_language)
