import pytest
from hypothesis import given, settings, strategies as st

from metaseq.builder import (
    build_sequence,
    build_units,
    merge_phrasal_aware,
    merge_standard,
)
from metaseq.model import (
    ConstraintError,
    EngineConfig,
    INTERROGATIVE,
    SSU,
    Token,
)
from metaseq.preprocess import detect_wh, interrogative_sentence, segment
from support import (
    john_traveled_wordlevel,
    lincoln_sentence,
    mary_flew_wordlevel,
    tagged,
    where_did_john_wordlevel,
)

CFG = EngineConfig()


def units_of(ts):
    return build_units(segment(ts)[0])


def test_build_units_lincoln():
    units = units_of(lincoln_sentence())
    assert len(units) == 10
    assert units[0][0] == SSU.tagged("ARG1", "NNP", "PER")
    assert units[2][0] == SSU.tagged("V", "VBZ")
    assert units[-1][0] == SSU.tagged("ARG2", "NNP", "LOC")


def test_build_units_single_token():
    ts = tagged("Go.", ("Go", "VB", None, "V"))
    assert len(units_of(ts)) == 1


def test_build_units_wh_literal_first():
    s = detect_wh(segment(where_did_john_wordlevel())[0])
    units = build_units(s)
    assert units[0][0] == SSU.wh_literal("Where")
    assert units[1][0] == SSU.tagged("V", "VBD")


def test_merge_standard_lincoln():
    ms, smap = merge_standard(units_of(lincoln_sentence()))
    assert ms.encoding() == "ARG1/NNP/PER V/VBZ/ ARG2/NNP/LOC"
    assert [e.text for e in smap.entries] == [
        "Abraham Lincoln",
        "was",
        "the 16th president of the United States",
    ]


def test_merge_standard_tmp_group():
    ms, smap = merge_standard(units_of(john_traveled_wordlevel()))
    assert ms.ssus[-1] == SSU.tagged("TMP", "NN")
    assert smap.entries[-1].text == "last week"


def test_merge_standard_fixed_point():
    ms, smap = merge_standard(units_of(lincoln_sentence()))
    re_units = [
        (e.ssu, (Token(i, e.text, e.head_lemma or e.text.lower(), e.raw_pos or "NN", e.ssu.ne),))
        for i, e in enumerate(smap.entries)
    ]
    ms2, _ = merge_standard(re_units)
    assert ms2.ssus == ms.ssus


def test_merge_no_consecutive_equal_sr():
    ms, _ = merge_standard(units_of(lincoln_sentence()))
    for a, b in zip(ms.ssus, ms.ssus[1:]):
        assert a.is_wh or b.is_wh or a.sr != b.sr


def test_merge_phrasal_keeps_preposition_next_to_verb():
    ms, smap = merge_phrasal_aware(units_of(mary_flew_wordlevel()))
    assert ms.encoding() == "ARG0/NNP/PER V/VBD/ ARG1/IN/ ARG1/NNP/LOC TMP/NN/"
    assert smap.entries[2].text == "to"
    assert smap.entries[3].text == "London"


def test_merge_standard_joins_that_preposition():
    ms, _ = merge_standard(units_of(mary_flew_wordlevel()))
    assert ms.encoding() == "ARG0/NNP/PER V/VBD/ ARG1/NNP/LOC TMP/NN/"


def test_merge_phrasal_equals_standard_without_adjacent_prepositions():
    ts = tagged(
        "Clara sold the old piano.",
        ("Clara", "NNP", "PER", "ARG0"),
        ("sold", "VBD", None, "V", "sell"),
        ("the", "DT", None, "ARG1"),
        ("old", "JJ", None, "ARG1"),
        ("piano", "NN", None, "ARG1"),
        (".", ".", None, None),
    )
    a, _ = merge_standard(units_of(ts))
    b, _ = merge_phrasal_aware(units_of(ts))
    assert a.ssus == b.ssus


def test_merge_phrasal_adjacent_prepositions_merge_together():
    ts = tagged(
        "Ron looked up to Ada.",
        ("Ron", "NNP", "PER", "ARG0"),
        ("looked", "VBD", None, "V", "look"),
        ("up", "RB", None, "ARG1"),
        ("to", "IN", None, "ARG1"),
        ("Ada", "NNP", "PER", "ARG1"),
        (".", ".", None, None),
    )
    ms, smap = merge_phrasal_aware(units_of(ts))
    assert ms.encoding() == "ARG0/NNP/PER V/VBD/ ARG1/IN/ ARG1/NNP/PER"
    assert smap.entries[2].text == "up to"


def test_merge_head_lemma_for_verb_groups():
    _, smap = merge_phrasal_aware(units_of(mary_flew_wordlevel()))
    v_entry = next(e for e in smap.entries if e.ssu.sr == "V")
    assert v_entry.head_lemma == "fly"


def test_merge_repetition_bound_violation():
    specs = []
    for i in range(4):
        specs.append((f"w{i}a", "NN", None, "ARG1"))
        specs.append((f"w{i}b", "VBD", None, "V" if i == 0 else "ARGM-TMP"))
    ts = tagged("bound case.", *specs, predicate=1)
    with pytest.raises(ConstraintError):
        merge_standard(units_of(ts), INTERROGATIVE, CFG)


def test_merge_empty_units_rejected():
    with pytest.raises(ValueError):
        merge_standard([])


_SR_CHOICES = ["ARG0", "ARG1", "ARG2", "V", "TMP", "LOC", "CAU", "MNR"]
_POS_CHOICES = ["NN", "NNS", "NNP", "DT", "JJ", "VBD", "VBZ", "VB", "IN", "RB", "CD"]
_NE_CHOICES = [None, None, None, "PER", "LOC", "ORG"]


@st.composite
def _unit_lists(draw, max_size=20):
    n = draw(st.integers(min_value=1, max_value=max_size))
    units = []
    for i in range(n):
        sr = draw(st.sampled_from(_SR_CHOICES))
        pos = draw(st.sampled_from(_POS_CHOICES))
        ne = draw(st.sampled_from(_NE_CHOICES))
        tok = Token(index=i, text=f"w{i}", lemma=f"w{i}", pos=pos, ne=ne)
        units.append((SSU.tagged(sr, pos, ne), (tok,)))
    return units


@given(_unit_lists())
@settings(max_examples=300)
def test_fuzz_merge_standard_proposition_one(units):
    try:
        ms, _ = merge_standard(units, INTERROGATIVE, EngineConfig(r=64, max_len=64))
    except ConstraintError:
        return
    for a, b in zip(ms.ssus, ms.ssus[1:]):
        assert a.sr != b.sr


@given(_unit_lists())
@settings(max_examples=200)
def test_fuzz_merge_text_preserving(units):
    cfg = EngineConfig(r=64, max_len=64)
    for merge in (merge_standard, merge_phrasal_aware):
        _, smap = merge(units, INTERROGATIVE, cfg)
        joined = " ".join(e.text for e in smap.entries)
        original = " ".join(t.text for _, toks in units for t in toks)
        assert joined == original


@given(_unit_lists())
@settings(max_examples=200)
def test_fuzz_merge_length_non_increasing(units):
    cfg = EngineConfig(r=64, max_len=64)
    ms, _ = merge_standard(units, INTERROGATIVE, cfg)
    assert len(ms) <= len(units)


@given(_unit_lists())
@settings(max_examples=200)
def test_fuzz_phrasal_equals_standard_when_no_prep_near_verb(units):
    prep_near_v = any(
        ssu.pos in ("IN", "RB", "RBR", "RBS")
        and (
            (i > 0 and units[i - 1][0].sr == "V")
            or (i + 1 < len(units) and units[i + 1][0].sr == "V")
        )
        for i, (ssu, _) in enumerate(units)
    )
    cfg = EngineConfig(r=64, max_len=64)
    a, _ = merge_standard(units, INTERROGATIVE, cfg)
    b, _ = merge_phrasal_aware(units, INTERROGATIVE, cfg)
    if not prep_near_v:
        assert a.ssus == b.ssus


@given(_unit_lists())
@settings(max_examples=200)
def test_fuzz_merges_idempotent(units):
    cfg = EngineConfig(r=64, max_len=64)
    for merge in (merge_standard, merge_phrasal_aware):
        ms, smap = merge(units, INTERROGATIVE, cfg)
        re_units = [
            (
                e.ssu,
                (
                    Token(
                        i,
                        e.text,
                        e.head_lemma or e.text.lower(),
                        e.raw_pos or "NN",
                        e.ssu.ne,
                    ),
                ),
            )
            for i, e in enumerate(smap.entries)
        ]
        ms2, _ = merge(re_units, INTERROGATIVE, cfg)
        assert ms2.ssus == ms.ssus


def test_build_sequence_dispatches_on_config():
    s = segment(mary_flew_wordlevel())[0]
    ms_phrasal, _ = build_sequence(s, EngineConfig(phrasal_merge=True))
    ms_std, _ = build_sequence(s, EngineConfig(phrasal_merge=False))
    assert len(ms_phrasal) == 5
    assert len(ms_std) == 4


def test_build_sequence_kind_follows_sentence():
    q = interrogative_sentence(where_did_john_wordlevel())
    ms, _ = build_sequence(q, CFG)
    assert ms.kind == INTERROGATIVE


def test_phrasal_lexicon_pre_join(tmp_path):
    from metaseq.builder import apply_phrasal_lexicon, load_phrasal_lexicon

    lexicon_file = tmp_path / "phrasal.txt"
    lexicon_file.write_text("travel to\nlook up\n", encoding="utf-8")
    phrases = load_phrasal_lexicon(str(lexicon_file))
    assert phrases == {"travel to", "look up"}

    units = units_of(john_traveled_wordlevel())
    joined = apply_phrasal_lexicon(units, phrases)
    # "traveled" absorbs "to"; the rest is unchanged
    assert len(joined) == len(units) - 1
    v_ssu, v_tokens = joined[1]
    assert v_ssu.sr == "V"
    assert " ".join(t.text for t in v_tokens) == "traveled to"
    ms, smap = merge_standard(joined)
    assert ms.encoding() == "ARG0/NNP/PER V/VBD/ ARG1/NNP/LOC TMP/NN/"
    assert smap.entries[1].text == "traveled to"


def test_phrasal_lexicon_no_match_is_identity(tmp_path):
    from metaseq.builder import apply_phrasal_lexicon

    units = units_of(john_traveled_wordlevel())
    assert apply_phrasal_lexicon(units, frozenset({"give up"})) == units
