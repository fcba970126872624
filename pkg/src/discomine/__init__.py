"""Mining labeled implicit discourse relations from multilingual parallel text.

Human translators sometimes make an implicit relation explicit by inserting
a connective. This package detects such insertions in back-translations of
several target languages, filters the resulting labels by cross-lingual
majority vote, and emits classifier-ready training data plus distribution
reports.
"""

from .backtranslation import (
    AlignmentError,
    BackTranslationSet,
    EvidenceRecord,
    LanguageEvidence,
    collect_evidence,
    load_backtranslations,
)
from .candidates import CandidateInstance, extract_candidates
from .emit import (
    DistributionReport,
    compare_distributions,
    distribution,
    emit_training_file,
    read_training_file,
)
from .ingest import (
    CorpusStats,
    ParallelDocument,
    RawCorpusLine,
    align_documents,
    corpus_positions,
    parse_lines,
    read_corpus,
    write_corpus,
)
from .lexicon import (
    ConnectiveEntry,
    ConnectiveLexicon,
    LexiconError,
    Position,
    default_lexicon,
    load_lexicon,
)
from .senses import SENSES, Sense, UnknownSenseError, parse_sense
from .tagger import Detection, sense_of, tag, tokenize
from .vote import LabeledInstance, VoteResult, aggregate, materialize

__version__ = "0.1.0"

__all__ = [
    "AlignmentError",
    "BackTranslationSet",
    "CandidateInstance",
    "ConnectiveEntry",
    "ConnectiveLexicon",
    "CorpusStats",
    "Detection",
    "DistributionReport",
    "EvidenceRecord",
    "LabeledInstance",
    "LanguageEvidence",
    "LexiconError",
    "ParallelDocument",
    "Position",
    "RawCorpusLine",
    "SENSES",
    "Sense",
    "UnknownSenseError",
    "VoteResult",
    "aggregate",
    "align_documents",
    "collect_evidence",
    "compare_distributions",
    "corpus_positions",
    "default_lexicon",
    "distribution",
    "emit_training_file",
    "extract_candidates",
    "load_backtranslations",
    "load_lexicon",
    "materialize",
    "parse_lines",
    "parse_sense",
    "read_corpus",
    "read_training_file",
    "sense_of",
    "tag",
    "tokenize",
    "write_corpus",
]
