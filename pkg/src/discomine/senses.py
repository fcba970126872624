"""The 11 level-2 discourse relation senses used throughout the pipeline.

This is the standard second-level 11-way label set for implicit relation
classification. The enumeration is closed: anything else is a data error.
"""

from __future__ import annotations

from enum import Enum


class Sense(str, Enum):
    TEMPORAL_ASYNCHRONOUS = "Temporal.Asynchronous"
    TEMPORAL_SYNCHRONY = "Temporal.Synchrony"
    CONTINGENCY_CAUSE = "Contingency.Cause"
    CONTINGENCY_PRAGMATIC_CAUSE = "Contingency.PragmaticCause"
    COMPARISON_CONTRAST = "Comparison.Contrast"
    COMPARISON_CONCESSION = "Comparison.Concession"
    EXPANSION_CONJUNCTION = "Expansion.Conjunction"
    EXPANSION_INSTANTIATION = "Expansion.Instantiation"
    EXPANSION_RESTATEMENT = "Expansion.Restatement"
    EXPANSION_ALTERNATIVE = "Expansion.Alternative"
    EXPANSION_LIST = "Expansion.List"

    def __str__(self) -> str:
        return self.value


#: Fixed sense order used for reports and figures.
SENSES: tuple[Sense, ...] = tuple(Sense)


class UnknownSenseError(ValueError):
    """Raised when a sense string is not one of the 11 level-2 labels."""


def parse_sense(value: str) -> Sense:
    """Parse a sense identifier such as ``"Comparison.Contrast"``.

    Raises :class:`UnknownSenseError` for anything outside the closed set.
    """
    try:
        return Sense(value)
    except ValueError:
        raise UnknownSenseError(f"unknown sense label: {value!r}") from None
