import pytest
from hypothesis import given, strategies as st

from metaseq.preprocess import (
    NoPredicateError,
    declarative_sentences,
    detect_wh,
    interrogative_sentence,
    normalize_text,
    segment,
    strip_leading_cc,
)
from metaseq.model import TaggedSentence
from support import john_traveled_wordlevel, tagged, where_did_john_wordlevel


@pytest.mark.parametrize(
    "text,expected",
    [
        ("I'm gonna leave", "I am going to leave"),
        ("John left.", "John left."),
        ("they've a.k.a. met", "they have also known as met"),
        ("you're wanna gotta", "you are want to got to"),
        ("don't gimme that", "do not give me that"),
        ("lemme see ya", "let me see you"),
        ("e.g. this, i.e. that", "for example this, that is that"),
        ("the yard is big", "the yard is big"),
        ("It's e.g.done", "It is e.g.done"),
    ],
)
def test_normalize_text(text, expected):
    assert normalize_text(text) == expected


_TEXT_PIECES = st.lists(
    st.sampled_from(
        ["I'm", "gonna", "they've", "a.k.a.", "don't", "ya", "plain", "words",
         "it's", "we're", "e.g.", "run"]
    ),
    min_size=0,
    max_size=8,
)


@given(_TEXT_PIECES)
def test_normalize_text_idempotent(pieces):
    once = normalize_text(" ".join(pieces))
    assert normalize_text(once) == once


def test_segment_single_frame():
    ts = john_traveled_wordlevel()
    out = segment(ts)
    assert len(out) == 1
    srs = [u.sr for u in out[0].units]
    assert srs == ["ARG0", "V", "ARG1", "ARG1", "TMP", "TMP"]
    texts = [u.token.text for u in out[0].units]
    assert texts == ["John", "traveled", "to", "Boston", "last", "week"]


def test_segment_two_frames_drops_objectless_candidate():
    ts = tagged(
        "Maya canceled the picnic because the rain fell.",
        ("Maya", "NNP", "PER", None),
        ("canceled", "VBD", None, None, "cancel"),
        ("the", "DT", None, None),
        ("picnic", "NN", None, None),
        ("because", "IN", None, None),
        ("the", "DT", None, None),
        ("rain", "NN", None, None),
        ("fell", "VBD", None, None, "fall"),
        (".", ".", None, None),
        frames=[
            {0: "ARG0", 1: "V", 2: "ARG1", 3: "ARG1",
             4: "ARGM-CAU", 5: "ARGM-CAU", 6: "ARGM-CAU", 7: "ARGM-CAU"},
            {5: "ARG1", 6: "ARG1", 7: "V"},
        ],
    )
    candidates = segment(ts)
    assert len(candidates) == 2
    survivors = declarative_sentences(ts)
    # the "the rain fell" clause has no object and is discarded
    assert len(survivors) == 1
    assert [u.token.text for u in survivors[0].units][:2] == ["Maya", "canceled"]


def test_segment_objectless_only_frame_yields_nothing():
    ts = tagged(
        "The ceremony ended.",
        ("The", "DT", None, "ARG1"),
        ("ceremony", "NN", None, "ARG1"),
        ("ended", "VBD", None, "V", "end"),
        (".", ".", None, None),
    )
    assert declarative_sentences(ts) == []


def test_segment_no_frames_raises():
    ts = TaggedSentence(text="Absolutely not.", tokens=(), frames=())
    with pytest.raises(NoPredicateError):
        segment(ts)


def test_strip_leading_cc():
    ts = tagged(
        "But John left early and stayed.",
        ("But", "CC", None, "ARGM-DIS"),
        ("John", "NNP", "PER", "ARG0"),
        ("left", "VBD", None, "V", "leave"),
        ("early", "RB", None, "ARGM-TMP"),
        ("and", "CC", None, "ARGM-DIS"),
        ("stayed", "VBD", None, "ARG1", "stay"),
        predicate=2,
    )
    s = segment(ts)[0]
    stripped = strip_leading_cc(s)
    texts = [u.token.text for u in stripped.units]
    assert texts[0] == "John"
    # a conjunction after the subject is retained
    assert "and" in texts
    assert "But" not in texts


def test_strip_leading_cc_noop_without_cc():
    s = segment(john_traveled_wordlevel())[0]
    assert strip_leading_cc(s) == s


def test_strip_leading_cc_preserves_core_roles():
    from metaseq.matcher import find_roles

    s = segment(john_traveled_wordlevel())[0]
    stripped = strip_leading_cc(s)
    roles = find_roles([u.sr for u in stripped.units])
    assert roles.subject is not None
    assert roles.predicate is not None
    assert roles.object is not None


def test_detect_wh_leading_pronoun():
    s = segment(where_did_john_wordlevel())[0]
    out = detect_wh(s)
    assert out.is_interrogative
    assert out.units[0].wh == "Where"
    assert [u.token.text for u in out.units[1:]] == ["did", "John", "travel", "to", "last", "week"]


def test_detect_wh_no_pronoun_keeps_units():
    s = segment(john_traveled_wordlevel())[0]
    out = detect_wh(s)
    assert out.is_interrogative
    assert [u.token.text for u in out.units] == [u.token.text for u in s.units]


def test_detect_wh_how_many_bigram():
    ts = tagged(
        "How many did Hugo adopt?",
        ("How", "WRB", None, "ARGM-EXT"),
        ("many", "JJ", None, "ARGM-EXT"),
        ("did", "VBD", None, "V", "do"),
        ("Hugo", "NNP", "PER", "ARG0"),
        ("adopt", "VB", None, "V"),
        ("?", ".", None, None),
        predicate=4,
    )
    out = detect_wh(segment(ts)[0])
    assert out.units[0].wh == "How many"
    assert [u.token.text for u in out.units[1:]] == ["did", "Hugo", "adopt"]


def test_detect_wh_how_much_bigram():
    ts = tagged(
        "How much did the meal cost?",
        ("How", "WRB", None, "ARGM-EXT"),
        ("much", "JJ", None, "ARGM-EXT"),
        ("did", "VBD", None, "V", "do"),
        ("the", "DT", None, "ARG0"),
        ("meal", "NN", None, "ARG0"),
        ("cost", "VB", None, "V"),
        ("?", ".", None, None),
        predicate=5,
    )
    out = detect_wh(segment(ts)[0])
    assert out.units[0].wh == "How much"


def test_detect_wh_ignores_mid_sentence_relative():
    ts = tagged(
        "Rita kept the map which faded.",
        ("Rita", "NNP", "PER", "ARG0"),
        ("kept", "VBD", None, "V", "keep"),
        ("the", "DT", None, "ARG1"),
        ("map", "NN", None, "ARG1"),
        ("which", "WDT", None, "ARG1"),
        ("faded", "VBD", None, "ARG1", "fade"),
        (".", ".", None, None),
        predicate=1,
    )
    out = detect_wh(segment(ts)[0])
    assert all(u.wh is None for u in out.units)


def test_detect_wh_unlabeled_pronoun_prepended():
    ts = tagged(
        "Where is Nadia?",
        ("Where", "WRB", None, None),
        ("is", "VBZ", None, "V", "be"),
        ("Nadia", "NNP", "PER", "ARG1"),
        ("?", ".", None, None),
    )
    out = detect_wh(segment(ts)[0])
    assert out.units[0].wh == "Where"
    assert len(out.units) == 3


def test_interrogative_sentence_pipeline():
    s = interrogative_sentence(where_did_john_wordlevel())
    assert s is not None
    assert s.is_interrogative
    assert s.units[0].wh == "Where"


def test_imperative_discarded():
    ts = tagged(
        "Close the door quietly.",
        ("Close", "VB", None, "V"),
        ("the", "DT", None, "ARG1"),
        ("door", "NN", None, "ARG1"),
        ("quietly", "RB", None, "ARGM-MNR"),
        (".", ".", None, None),
    )
    assert declarative_sentences(ts) == []


def test_token_order_preserved():
    ts = john_traveled_wordlevel()
    for s in (segment(ts)[0], strip_leading_cc(segment(ts)[0])):
        indices = [u.token.index for u in s.units]
        assert indices == sorted(indices)
