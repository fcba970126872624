"""Connective lexicon: surface patterns mapped to level-2 senses.

The lexicon file is UTF-8 tab-separated with three columns::

    pattern <TAB> sense <TAB> positions

``pattern`` is a whitespace-separated token sequence; a single ``…``
(U+2026) or literal ``...`` token marks the gap of a discontinuous
connective ("if … then"). ``positions`` is a comma-joined subset of
``arg2_initial,arg2_medial``. Lines starting with ``#`` are comments.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources
from pathlib import Path

from .senses import Sense, UnknownSenseError, parse_sense

#: Gap marker spellings accepted in lexicon files.
GAP_TOKENS = ("…", "...")


class Position(str, Enum):
    INITIAL = "arg2_initial"
    MEDIAL = "arg2_medial"

    def __str__(self) -> str:
        return self.value


class LexiconError(ValueError):
    """Malformed lexicon content; carries the offending line number."""

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


@dataclass(frozen=True)
class ConnectiveEntry:
    """One connective pattern with its most frequent level-2 sense.

    ``head`` holds the tokens before the gap, ``tail`` the tokens after it
    (``None`` for contiguous connectives). Tokens are case-folded.
    """

    head: tuple[str, ...]
    tail: tuple[str, ...] | None
    sense: Sense
    positions: frozenset[Position]

    @property
    def text(self) -> str:
        """Canonical surface form, gap omitted: ``"if then"``."""
        return " ".join(self.head + (self.tail or ()))

    @property
    def discontinuous(self) -> bool:
        return self.tail is not None

    @property
    def token_count(self) -> int:
        return len(self.head) + len(self.tail or ())

    def pattern_text(self) -> str:
        """Pattern as written in the lexicon file, with ``…`` for the gap."""
        if self.tail is None:
            return " ".join(self.head)
        return " ".join(self.head) + " … " + " ".join(self.tail)


@dataclass
class ConnectiveLexicon:
    """Immutable-after-load collection of entries, indexed by first token."""

    entries: list[ConnectiveEntry] = field(default_factory=list)
    _by_first: dict[str, list[ConnectiveEntry]] = field(default_factory=dict, repr=False)
    _by_text: dict[str, ConnectiveEntry] = field(default_factory=dict, repr=False)

    def add(self, entry: ConnectiveEntry, line_no: int | None = None) -> None:
        key = (entry.head, entry.tail, entry.positions)
        for other in self._by_first.get(entry.head[0], []):
            if (other.head, other.tail, other.positions) == key:
                raise LexiconError(
                    f"duplicate entry for pattern {entry.pattern_text()!r} "
                    f"with positions {sorted(p.value for p in entry.positions)}",
                    line_no,
                )
        self.entries.append(entry)
        self._by_first.setdefault(entry.head[0], []).append(entry)
        self._by_text.setdefault(entry.text, entry)

    def entries_for(self, first_token: str) -> list[ConnectiveEntry]:
        return self._by_first.get(first_token, [])

    def first_tokens(self) -> frozenset[str]:
        return frozenset(self._by_first)

    def entry_for_text(self, text: str) -> ConnectiveEntry | None:
        return self._by_text.get(normalize_connective_text(text))

    def __len__(self) -> int:
        return len(self.entries)


def normalize_connective_text(text: str) -> str:
    """Case-fold and collapse whitespace; drop gap markers."""
    tokens = [t for t in text.casefold().split() if t not in GAP_TOKENS]
    return " ".join(tokens)


def _parse_pattern(pattern: str, line_no: int) -> tuple[tuple[str, ...], tuple[str, ...] | None]:
    tokens = pattern.casefold().split()
    if not tokens:
        raise LexiconError("empty pattern", line_no)
    gap_positions = [i for i, t in enumerate(tokens) if t in GAP_TOKENS]
    if not gap_positions:
        return tuple(tokens), None
    if len(gap_positions) > 1:
        raise LexiconError(f"more than one gap marker in pattern {pattern!r}", line_no)
    i = gap_positions[0]
    if i == 0 or i == len(tokens) - 1:
        raise LexiconError(f"gap marker at pattern edge in {pattern!r}", line_no)
    return tuple(tokens[:i]), tuple(tokens[i + 1 :])


def _parse_positions(spec: str, line_no: int) -> frozenset[Position]:
    positions = set()
    for part in spec.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            positions.add(Position(part))
        except ValueError:
            raise LexiconError(f"unknown position {part!r}", line_no) from None
    if not positions:
        raise LexiconError("no positions given", line_no)
    return frozenset(positions)


def parse_lexicon(text: str, source: str = "<string>") -> ConnectiveLexicon:
    lexicon = ConnectiveLexicon()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        columns = re.split(r"\t+", line)
        if len(columns) != 3:
            raise LexiconError(
                f"expected 3 tab-separated columns, got {len(columns)} in {source}", line_no
            )
        pattern, sense_str, positions_str = (c.strip() for c in columns)
        head, tail = _parse_pattern(pattern, line_no)
        try:
            sense = parse_sense(sense_str)
        except UnknownSenseError as exc:
            raise LexiconError(str(exc), line_no) from None
        positions = _parse_positions(positions_str, line_no)
        lexicon.add(
            ConnectiveEntry(head=head, tail=tail, sense=sense, positions=positions), line_no
        )
    return lexicon


def load_lexicon(path: str | Path) -> ConnectiveLexicon:
    """Load and validate a lexicon file; see the module docstring for the format."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    return parse_lexicon(text, source=str(path))


def default_lexicon() -> ConnectiveLexicon:
    """The packaged connective inventory (~100 entries, hand-assigned senses)."""
    text = resources.files("discomine.data").joinpath("connectives.tsv").read_text("utf-8")
    return parse_lexicon(text, source="discomine.data/connectives.tsv")
