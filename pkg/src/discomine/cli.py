"""Command-line interface for the mining pipeline.

Subcommands mirror the pipeline stages::

    ingest      parallel text files -> document-aligned corpus + stats
    tag         sentences -> connective detections
    candidates  corpus -> implicit-relation candidates
    evidence    candidates + back-translations -> insertion evidence
    vote        evidence -> labeled instances (all / vote2 / vote3)
    emit        labeled instances -> classifier-ready training JSONL
    stats       training JSONL -> distribution report (+ TSV / figure)
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import backtranslation as bt
from . import candidates as cand
from . import emit as emit_mod
from . import ingest as ingest_mod
from . import report as report_mod
from . import vote as vote_mod
from .lexicon import default_lexicon, load_lexicon
from .tagger import tag, tokenize

log = logging.getLogger("discomine")


def _lexicon_from(path: str | None):
    return load_lexicon(path) if path else default_lexicon()


def cmd_ingest(args: argparse.Namespace) -> int:
    languages = [lang.strip() for lang in args.langs.split(",") if lang.strip()]
    documents, stats = ingest_mod.ingest_directory(
        args.input, languages, format=args.format
    )
    ingest_mod.write_corpus(documents, args.out)
    ingest_mod.write_stats(stats, args.stats)
    log.info(
        "kept %d documents (%d sentence groups), dropped %d",
        stats.document_count,
        stats.sentence_pair_count,
        stats.dropped_documents,
    )
    return 0


def cmd_tag(args: argparse.Namespace) -> int:
    lexicon = _lexicon_from(args.lexicon)
    with open(args.input, encoding="utf-8") as handle, open(
        args.out, "w", encoding="utf-8"
    ) as out:
        for index, line in enumerate(handle):
            sentence = line.strip()
            if not sentence:
                continue
            detections = tag(tokenize(sentence), lexicon)
            record = {
                "index": index,
                "text": sentence,
                "detections": [d.to_dict() for d in detections],
            }
            out.write(json.dumps(record, ensure_ascii=False, sort_keys=True) + "\n")
    return 0


def cmd_candidates(args: argparse.Namespace) -> int:
    lexicon = _lexicon_from(args.lexicon)
    corpus = ingest_mod.read_corpus(args.corpus)
    extracted = cand.extract_candidates(corpus, lexicon)
    cand.write_candidates(extracted, args.out)
    log.info("extracted %d candidates", len(extracted))
    return 0


def _parse_bt_args(pairs: list[str]) -> dict[str, str]:
    mapping = {}
    for pair in pairs:
        if "=" not in pair:
            raise SystemExit(f"--bt expects LANG=FILE, got {pair!r}")
        lang, _, path = pair.partition("=")
        mapping[lang.strip()] = path.strip()
    return mapping


def cmd_evidence(args: argparse.Namespace) -> int:
    bt_paths = _parse_bt_args(args.bt)
    lexicon = _lexicon_from(args.lexicon)
    corpus = ingest_mod.read_corpus(args.corpus)
    positions = ingest_mod.corpus_positions(corpus)
    candidates = cand.read_candidates(args.candidates)
    bt_sets = [
        bt.load_backtranslations(lang, path, positions)
        for lang, path in sorted(bt_paths.items())
    ]
    diagnostics: dict[str, int] = {}
    records = [
        bt.EvidenceRecord(
            candidate=candidate,
            evidence=bt.collect_evidence(candidate, bt_sets, lexicon, diagnostics),
        )
        for candidate in candidates
    ]
    bt.write_evidence(records, args.out)
    if diagnostics:
        log.warning("evidence diagnostics: %s", diagnostics)
    return 0


def cmd_vote(args: argparse.Namespace) -> int:
    records = bt.read_evidence(args.evidence)
    instances = vote_mod.materialize(records, args.mode)
    vote_mod.write_labeled(instances, args.out)
    log.info("mode=%s -> %d labeled instances", args.mode, len(instances))
    return 0


def cmd_emit(args: argparse.Namespace) -> int:
    instances = vote_mod.read_labeled(args.input)
    count = emit_mod.emit_training_file(instances, args.out)
    log.info("wrote %d training instances", count)
    return 0


def cmd_stats(args: argparse.Namespace) -> int:
    paths = [p for chunk in args.input for p in chunk.split(",") if p]
    reports = []
    for path in paths:
        examples = emit_mod.read_training_file(path)
        reports.append(emit_mod.distribution(examples, source=Path(path).stem))
    emit_mod.write_reports(reports, args.out)
    if args.tsv:
        report_mod.write_report_tsv(reports, args.tsv)
    if args.figures_dir:
        figures_dir = Path(args.figures_dir)
        figures_dir.mkdir(parents=True, exist_ok=True)
        report_mod.render_distribution_figure(
            reports, figures_dir / "distributions.png", title="Sense distributions"
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="discomine",
        description="Mine implicitly related sentence pairs from parallel corpora "
        "via connectives inserted in translation.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="align per-language corpus files into documents")
    p.add_argument("--langs", required=True, help="comma-separated language ids, incl. en")
    p.add_argument("--in", dest="input", required=True, help="directory with <lang>.txt files")
    p.add_argument("--out", required=True, help="document-aligned corpus JSONL")
    p.add_argument("--stats", required=True, help="corpus stats JSON")
    p.add_argument("--format", default="europarl", help="corpus markup format")
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("tag", help="detect connectives in plain sentences")
    p.add_argument("--lexicon", help="connective lexicon TSV (default: packaged)")
    p.add_argument("--in", dest="input", required=True, help="one sentence per line")
    p.add_argument("--out", required=True, help="detections JSONL")
    p.set_defaults(func=cmd_tag)

    p = sub.add_parser("candidates", help="extract implicit-relation candidates")
    p.add_argument("--corpus", required=True, help="document-aligned corpus JSONL")
    p.add_argument("--lexicon", help="connective lexicon TSV (default: packaged)")
    p.add_argument("--out", required=True, help="candidates JSONL")
    p.set_defaults(func=cmd_candidates)

    p = sub.add_parser("evidence", help="collect insertion evidence from back-translations")
    p.add_argument("--candidates", required=True, help="candidates JSONL")
    p.add_argument("--corpus", required=True, help="document-aligned corpus JSONL")
    p.add_argument(
        "--bt",
        action="append",
        required=True,
        metavar="LANG=FILE",
        help="back-translation file for one language (repeatable)",
    )
    p.add_argument("--lexicon", help="connective lexicon TSV (default: packaged)")
    p.add_argument("--out", required=True, help="evidence JSONL")
    p.set_defaults(func=cmd_evidence)

    p = sub.add_parser("vote", help="aggregate evidence into labeled instances")
    p.add_argument("--evidence", required=True, help="evidence JSONL")
    p.add_argument("--mode", required=True, choices=vote_mod.MODES)
    p.add_argument("--out", required=True, help="labeled instances JSONL")
    p.set_defaults(func=cmd_vote)

    p = sub.add_parser("emit", help="serialize labeled instances as training data")
    p.add_argument("--in", dest="input", required=True, help="labeled instances JSONL")
    p.add_argument("--out", required=True, help="training JSONL {arg1,arg2,sense,source}")
    p.set_defaults(func=cmd_emit)

    p = sub.add_parser("stats", help="sense distribution report over training files")
    p.add_argument(
        "--in",
        dest="input",
        action="append",
        required=True,
        help="training JSONL file(s); repeatable or comma-separated",
    )
    p.add_argument("--out", required=True, help="report JSON {source,counts,proportions}")
    p.add_argument("--tsv", help="also write a tab-separated report table")
    p.add_argument("--figures-dir", help="also render a distribution bar chart here")
    p.set_defaults(func=cmd_stats)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(levelname)s %(name)s: %(message)s",
    )
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
