"""Deterministic lexicon-based connective tagger.

Stands in for a full discourse parser: matches lexicon patterns against a
token sequence, case-insensitively, and resolves overlaps longest-match
first, then leftmost. Each detection carries the entry's most frequent
level-2 sense.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .lexicon import ConnectiveEntry, ConnectiveLexicon, Position, normalize_connective_text
from .senses import Sense

_TOKEN_RE = re.compile(r"\w+(?:['’]\w+)*|[^\w\s]", re.UNICODE)


def tokenize(text: str) -> list[str]:
    """Split a sentence into word and punctuation tokens."""
    return _TOKEN_RE.findall(text)


@dataclass(frozen=True)
class Detection:
    """One connective match: surface text, sense, and token span(s).

    ``spans`` holds one half-open ``[start, end)`` index pair, or two for
    discontinuous connectives. ``text`` is the case-folded matched tokens
    joined by spaces (gap content excluded).
    """

    text: str
    sense: Sense
    spans: tuple[tuple[int, int], ...]
    position: Position

    @property
    def start(self) -> int:
        return self.spans[0][0]

    def covered(self) -> frozenset[int]:
        return frozenset(i for s, e in self.spans for i in range(s, e))

    def to_dict(self) -> dict:
        return {
            "text": self.text,
            "sense": self.sense.value,
            "spans": [list(s) for s in self.spans],
            "position": self.position.value,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Detection":
        return cls(
            text=d["text"],
            sense=Sense(d["sense"]),
            spans=tuple((s[0], s[1]) for s in d["spans"]),
            position=Position(d["position"]),
        )


def _match_at(entry: ConnectiveEntry, tokens: list[str], start: int) -> tuple[tuple[int, int], ...] | None:
    """Try to match ``entry`` with its head anchored at ``start``.

    For discontinuous entries the tail matches at its leftmost position
    after a gap of at least one token.
    """
    head_end = start + len(entry.head)
    if tuple(tokens[start:head_end]) != entry.head:
        return None
    if entry.tail is None:
        return ((start, head_end),)
    tail_len = len(entry.tail)
    for s2 in range(head_end + 1, len(tokens) - tail_len + 1):
        if tuple(tokens[s2 : s2 + tail_len]) == entry.tail:
            return ((start, head_end), (s2, s2 + tail_len))
    return None


def _resolve(matches: list[tuple[ConnectiveEntry, tuple[tuple[int, int], ...]]]) -> list[Detection]:
    """Greedy longest-match-first, then leftmost, overlap resolution."""
    ordered = sorted(
        matches,
        key=lambda m: (-m[0].token_count, m[1][0][0], m[1][-1][1], m[0].pattern_text()),
    )
    taken: set[int] = set()
    chosen = []
    for entry, spans in ordered:
        indices = {i for s, e in spans for i in range(s, e)}
        if indices & taken:
            continue
        taken |= indices
        position = Position.INITIAL if spans[0][0] == 0 else Position.MEDIAL
        chosen.append(
            Detection(text=entry.text, sense=entry.sense, spans=spans, position=position)
        )
    chosen.sort(key=lambda d: (d.start, d.spans[-1][1]))
    return chosen


def tag(sentence_tokens: list[str], lexicon: ConnectiveLexicon) -> list[Detection]:
    """Detect all connectives in a token sequence.

    Matching is case-insensitive. An entry only matches in positions it
    allows (``arg2_initial`` means the match starts at token 0). Overlapping
    matches are resolved longest first, ties to the left; the result is
    sorted by start index.
    """
    folded = [t.casefold() for t in sentence_tokens]
    matches = []
    for start in range(len(folded)):
        position = Position.INITIAL if start == 0 else Position.MEDIAL
        for entry in lexicon.entries_for(folded[start]):
            if position not in entry.positions:
                continue
            spans = _match_at(entry, folded, start)
            if spans is not None:
                matches.append((entry, spans))
    return _resolve(matches)


def sense_of(connective_text: str, lexicon: ConnectiveLexicon) -> Sense:
    """Most-frequent-sense lookup for a connective surface form.

    Raises :class:`LookupError` if the connective is not in the lexicon.
    """
    entry = lexicon.entry_for_text(connective_text)
    if entry is None:
        raise LookupError(
            f"connective not in lexicon: {normalize_connective_text(connective_text)!r}"
        )
    return entry.sense
