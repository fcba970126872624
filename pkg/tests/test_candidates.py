from discomine.candidates import (
    CandidateInstance,
    extract_candidates,
    read_candidates,
    write_candidates,
)
from discomine.ingest import ParallelDocument


def _group(en, fr="phrase cible ."):
    return {"en": en, "fr": fr}


def test_adjacent_pairs_within_paragraph(lexicon):
    doc = ParallelDocument(
        doc_id="d0",
        paragraphs=[
            [
                _group("the first sentence stands alone ."),
                _group("the second follows it ."),
                _group("the third follows that ."),
            ]
        ],
    )
    cands = extract_candidates([doc], lexicon)
    assert [c.pair_idx for c in cands] == [1, 2]
    assert cands[0].arg1 == "the first sentence stands alone ."
    assert cands[0].arg2 == "the second follows it ."
    assert cands[1].arg1 == "the second follows it ."
    assert cands[0].target_refs == {"fr": "phrase cible ."}


def test_pairs_do_not_cross_paragraphs(lexicon):
    doc = ParallelDocument(
        doc_id="d0",
        paragraphs=[
            [_group("only sentence in paragraph one .")],
            [_group("only sentence in paragraph two .")],
        ],
    )
    assert extract_candidates([doc], lexicon) == []


def test_initial_connective_disqualifies(lexicon):
    doc = ParallelDocument(
        doc_id="d0",
        paragraphs=[
            [
                _group("the first sentence stands alone ."),
                _group("But the second one disagrees ."),
            ]
        ],
    )
    assert extract_candidates([doc], lexicon) == []


def test_medial_adverbial_disqualifies(lexicon):
    doc = ParallelDocument(
        doc_id="d0",
        paragraphs=[
            [
                _group("the first sentence stands alone ."),
                _group("the second , however , disagrees ."),
            ]
        ],
    )
    assert extract_candidates([doc], lexicon) == []


def test_connective_in_arg1_is_fine(lexicon):
    doc = ParallelDocument(
        doc_id="d0",
        paragraphs=[
            [
                _group("But the first sentence disagrees ."),
                _group("the second one stands alone ."),
            ]
        ],
    )
    cands = extract_candidates([doc], lexicon)
    assert len(cands) == 1
    assert cands[0].ref == ("d0", 0, 1)


def test_output_order_follows_corpus(lexicon):
    docs = [
        ParallelDocument(
            doc_id=f"d{i}",
            paragraphs=[
                [
                    _group("paragraph opener sentence here ."),
                    _group("a following sentence here ."),
                ]
                for _ in range(2)
            ],
        )
        for i in range(2)
    ]
    refs = [c.ref for c in extract_candidates(docs, lexicon)]
    assert refs == [("d0", 0, 1), ("d0", 1, 1), ("d1", 0, 1), ("d1", 1, 1)]


def test_round_trip(tmp_path, lexicon):
    doc = ParallelDocument(
        doc_id="d0",
        paragraphs=[
            [
                _group("the first sentence stands alone ."),
                _group("the second follows it ."),
            ]
        ],
    )
    cands = extract_candidates([doc], lexicon)
    path = tmp_path / "cands.jsonl"
    write_candidates(cands, path)
    assert read_candidates(path) == cands


def test_ref_property():
    cand = CandidateInstance(
        doc_id="d7", paragraph_idx=2, pair_idx=3, arg1="a", arg2="b", target_refs={}
    )
    assert cand.ref == ("d7", 2, 3)
