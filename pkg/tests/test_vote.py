import pytest

from discomine.backtranslation import EvidenceRecord, LanguageEvidence
from discomine.candidates import CandidateInstance
from discomine.lexicon import Position
from discomine.senses import Sense
from discomine.tagger import Detection
from discomine.vote import (
    MODES,
    aggregate,
    materialize,
    read_labeled,
    write_labeled,
)


def _chosen(text, sense):
    return Detection(
        text=text, sense=sense, spans=((0, len(text.split())),), position=Position.INITIAL
    )


def _evidence(**by_language):
    """by_language maps lang -> (text, sense) or None."""
    out = {}
    for lang, spec in by_language.items():
        chosen = None if spec is None else _chosen(*spec)
        out[lang] = LanguageEvidence(
            language=lang, detections=[chosen] if chosen else [], chosen=chosen
        )
    return out


def _record(ref, **by_language):
    candidate = CandidateInstance(
        doc_id=ref[0],
        paragraph_idx=ref[1],
        pair_idx=ref[2],
        arg1="first argument sentence .",
        arg2="second argument sentence .",
        target_refs={},
    )
    return EvidenceRecord(candidate=candidate, evidence=_evidence(**by_language))


CONJ = Sense.EXPANSION_CONJUNCTION
CAUSE = Sense.CONTINGENCY_CAUSE
CONTRAST = Sense.COMPARISON_CONTRAST


def test_aggregate_unanimous():
    result = aggregate(
        _evidence(fr=("moreover", CONJ), de=("also", CONJ), cs=("in addition", CONJ))
    )
    assert result.sense_counts == {CONJ: 3}
    assert result.agreement_level == 3
    assert result.majority_sense is CONJ


def test_aggregate_two_against_one():
    # sense-level agreement: different strings, same sense, still a majority
    result = aggregate(
        _evidence(fr=("therefore", CAUSE), de=("but", CONTRAST), cs=("so", CAUSE))
    )
    assert result.agreement_level == 2
    assert result.majority_sense is CAUSE


def test_aggregate_two_with_one_silent():
    result = aggregate(_evidence(fr=("moreover", CONJ), de=("also", CONJ), cs=None))
    assert result.agreement_level == 2
    assert result.majority_sense is CONJ


def test_aggregate_all_disagree():
    result = aggregate(
        _evidence(fr=("moreover", CONJ), de=("but", CONTRAST), cs=("so", CAUSE))
    )
    assert result.agreement_level == 1
    assert result.majority_sense is None


def test_aggregate_single_and_empty():
    result = aggregate(_evidence(fr=("moreover", CONJ), de=None, cs=None))
    assert result.agreement_level == 1
    assert result.majority_sense is None
    result = aggregate(_evidence(fr=None, de=None, cs=None))
    assert result.agreement_level == 0
    assert result.sense_counts == {}
    assert aggregate({}).agreement_level == 0


def test_materialize_all_one_instance_per_voting_language():
    record = _record(("d0", 0, 1), fr=("moreover", CONJ), de=("but", CONTRAST), cs=None)
    instances = materialize([record], "all")
    assert [(i.source, i.sense) for i in instances] == [
        ("de", CONTRAST),
        ("fr", CONJ),
    ]
    assert all(i.contributing_languages == (i.source,) for i in instances)
    assert all(i.ref == ("d0", 0, 1) for i in instances)


def test_materialize_vote2_requires_unique_majority():
    records = [
        _record(("d0", 0, 1), fr=("moreover", CONJ), de=("also", CONJ), cs=None),
        _record(("d0", 0, 2), fr=("moreover", CONJ), de=("but", CONTRAST), cs=None),
    ]
    instances = materialize(records, "vote2")
    assert len(instances) == 1
    assert instances[0].ref == ("d0", 0, 1)
    assert instances[0].sense is CONJ
    assert instances[0].source == "vote2"
    assert instances[0].contributing_languages == ("de", "fr")


def test_materialize_vote3_requires_unanimity():
    records = [
        _record(("d0", 0, 1), fr=("moreover", CONJ), de=("also", CONJ), cs=("plus", CONJ)),
        _record(("d0", 0, 2), fr=("moreover", CONJ), de=("also", CONJ), cs=None),
    ]
    assert [i.ref for i in materialize(records, "vote3")] == [("d0", 0, 1)]
    assert [i.ref for i in materialize(records, "vote2")] == [
        ("d0", 0, 1),
        ("d0", 0, 2),
    ]


def test_vote3_refs_subset_of_vote2_subset_of_all():
    records = [
        _record(("d0", 0, 1), fr=("moreover", CONJ), de=("also", CONJ), cs=("plus", CONJ)),
        _record(("d0", 0, 2), fr=("moreover", CONJ), de=("also", CONJ), cs=("but", CONTRAST)),
        _record(("d0", 0, 3), fr=("moreover", CONJ), de=("but", CONTRAST), cs=None),
        _record(("d0", 0, 4), fr=None, de=None, cs=None),
    ]
    refs = {
        mode: {i.ref for i in materialize(records, mode)} for mode in MODES
    }
    assert refs["vote3"] <= refs["vote2"] <= refs["all"]
    assert refs["vote3"] == {("d0", 0, 1)}
    assert refs["vote2"] == {("d0", 0, 1), ("d0", 0, 2)}
    assert refs["all"] == {("d0", 0, 1), ("d0", 0, 2), ("d0", 0, 3)}


def test_materialize_all_additivity():
    records = [
        _record(("d0", 0, 1), fr=("moreover", CONJ), de=("also", CONJ), cs=("plus", CONJ)),
        _record(("d0", 0, 2), fr=("moreover", CONJ), de=None, cs=("but", CONTRAST)),
    ]
    instances = materialize(records, "all")
    by_lang = {lang: [i for i in instances if i.source == lang] for lang in ("cs", "de", "fr")}
    assert len(instances) == sum(len(v) for v in by_lang.values())
    assert [len(by_lang[lang]) for lang in ("cs", "de", "fr")] == [2, 1, 2]


def test_materialize_unknown_mode():
    with pytest.raises(ValueError, match="nope"):
        materialize([], "nope")


def test_labeled_round_trip(tmp_path):
    record = _record(("d0", 0, 1), fr=("moreover", CONJ), de=("also", CONJ), cs=None)
    instances = materialize([record], "vote2")
    path = tmp_path / "labeled.jsonl"
    write_labeled(instances, path)
    assert read_labeled(path) == instances
