"""Question-answer generation: set-algebra construction of the question
meta sequence, helping-verb resolution, surface realization, and answer
extraction, composed into the per-sentence generation pipeline."""

import hashlib
import logging
from dataclasses import dataclass, field

from .builder import MapEntry, SSUTextMap, build_sequence
from .learner import MDIPair, Snapshot
from .matcher import (
    MatchResult,
    PERFECT,
    SUCCESSFUL,
    best_match,
    grammatical_roles,
    ranked_matches,
)
from .model import (
    ConstraintError,
    EngineConfig,
    INTERROGATIVE,
    MetaSequence,
    SSU,
    TaggedSentence,
    VERB_POS,
    make_meta_sequence,
    ssu_matches,
)
from .preprocess import NoPredicateError, declarative_sentences

logger = logging.getLogger(__name__)

NEAR_MISS_LIMIT = 3

_PLURAL_PRONOUNS = frozenset({"i", "you", "we", "they"})


class SuppressedQAP(Exception):
    """A question-answer pair was dropped instead of being emitted partially."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


@dataclass(frozen=True)
class QAPair:
    question: str
    answer: str
    wh: str | None
    question_ms: MetaSequence
    answer_ssus: tuple[SSU, ...]
    pair_id: str
    classification: str
    sentence_ref: str
    sentence: str

    def to_json(self) -> dict:
        return {
            "sentence": self.sentence,
            "question": self.question,
            "answer": self.answer,
            "wh": self.wh,
            "pair_id": self.pair_id,
            "match": self.classification,
        }


@dataclass
class TeachRequest:
    id: str
    sentence_ref: str
    text: str
    meta_sequence: MetaSequence
    near_misses: list[dict]
    status: str = "pending"
    tagged: TaggedSentence | None = None


@dataclass(frozen=True)
class Diagnostic:
    sentence_ref: str
    stage: str
    reason: str


@dataclass
class GenerationResult:
    qaps: list[QAPair] = field(default_factory=list)
    teach_requests: list[TeachRequest] = field(default_factory=list)
    diagnostics: list[Diagnostic] = field(default_factory=list)
    candidates: int = 0


def build_question_ssus(
    x: MetaSequence,
    y: MetaSequence,
    xs: MetaSequence,
    z_span: tuple[int, int, int],
    cfg: EngineConfig = EngineConfig(),
) -> MetaSequence:
    """Construct the question meta sequence.

    The pattern interrogative loses the SSUs shared by both pattern sides but
    absent from the input; when the matched run does not cover the whole
    input, the input's leftover SSUs are appended (after-segment first by
    default). Wh literals are never deleted."""
    z_len, _, xs_off = z_span
    deletion = (x.canonical_set() & y.canonical_set()) - xs.canonical_set()
    core = [u for u in y.ssus if u.is_wh or u.canonical_key() not in deletion]
    result = core
    if z_len < len(xs):
        span_keys = {xs.ssus[i].canonical_key() for i in range(xs_off, xs_off + z_len)}
        after = [
            u
            for u in xs.ssus[xs_off + z_len:]
            if u.canonical_key() not in span_keys
        ]
        before = [u for u in xs.ssus[:xs_off] if u.canonical_key() not in span_keys]
        if cfg.case2_order == "after_then_before":
            result = core + after + before
        else:
            result = core + before + after
    if not any(not u.is_wh and u.sr == "V" for u in result):
        raise SuppressedQAP("question would have no predicate")
    try:
        return make_meta_sequence(result, INTERROGATIVE, r=cfg.r, max_len=cfg.max_len)
    except ConstraintError as exc:
        raise SuppressedQAP(f"question sequence invalid: {exc}") from exc


def _main_verb_text(entry: MapEntry) -> str:
    """Base form of the map's verb entry: the head verb's lemma plus any
    particle tokens kept as written."""
    head = next((t for t in entry.tokens if t.pos in VERB_POS), entry.tokens[0])
    return " ".join(t.lemma if t is head else t.text for t in entry.tokens)


def _question_text(entry: MapEntry) -> str:
    """Entry text as it should appear inside a question: a sentence-initial
    capital is dropped unless the first token is a proper noun or "I"."""
    text = entry.text
    first = entry.tokens[0]
    if (
        first.index == 0
        and first.pos not in ("NNP", "NNPS")
        and first.text != "I"
        and text[:1].isupper()
    ):
        return text[0].lower() + text[1:]
    return text


def _lookup(
    y_s: MetaSequence, entries: tuple[MapEntry, ...], skip: frozenset[int] = frozenset()
) -> tuple[list[str | None], list[bool]]:
    used = [False] * len(entries)
    texts: list[str | None] = [None] * len(y_s.ssus)
    for i, u in enumerate(y_s.ssus):
        if i in skip:
            continue
        if u.is_wh:
            texts[i] = u.wh
            continue
        for j, e in enumerate(entries):
            if not used[j] and ssu_matches(u, e.ssu):
                used[j] = True
                texts[i] = _question_text(e)
                break
    return texts, used


def _subject_number(x_s: MetaSequence, smap: SSUTextMap) -> str:
    roles = grammatical_roles(x_s)
    if roles.subject is None:
        return "singular"
    entry = smap.entries[roles.subject]
    pos = entry.raw_pos
    if pos in ("NNS", "NNPS"):
        return "plural"
    if pos == "PRP":
        if entry.text.strip().lower() in _PLURAL_PRONOUNS:
            return "plural"
        return "singular"
    return "singular"


def resolve_helping_verbs(
    y_s: MetaSequence, x_s: MetaSequence, smap: SSUTextMap
) -> list[str]:
    """Realize every question SSU as text.

    SSUs are replaced by the leftmost unused map entry with a matching value.
    When the pattern carries a helping verb (two V SSUs, the second a bare
    VB), the first V realizes as do/does/did from the pattern's tense and the
    input subject's number, and the second as the input verb's base form."""
    entries = smap.entries
    texts, _ = _lookup(y_s, entries)
    if all(t is not None for t in texts):
        return texts  # type: ignore[return-value]

    v_positions = [
        i for i, u in enumerate(y_s.ssus) if not u.is_wh and u.sr == "V"
    ]
    two_v = len(v_positions) >= 2 and y_s.ssus[v_positions[1]].pos == "VB"
    if not two_v:
        missing = [y_s.ssus[i].raw_key() for i, t in enumerate(texts) if t is None]
        raise SuppressedQAP(f"no text for SSU(s): {', '.join(missing)}")

    helping_pos, main_pos = v_positions[0], v_positions[1]
    texts, used = _lookup(y_s, entries, skip=frozenset((helping_pos, main_pos)))
    tense_pos = y_s.ssus[helping_pos].pos
    if tense_pos == "VBD":
        helping = "did"
    elif tense_pos in ("VBP", "VBZ"):
        helping = "do" if _subject_number(x_s, smap) == "plural" else "does"
    else:
        raise SuppressedQAP(f"cannot resolve helping verb for POS {tense_pos!r}")
    main_entry = None
    for j, e in enumerate(entries):
        if not used[j] and not e.ssu.is_wh and e.ssu.sr == "V":
            main_entry = e
            used[j] = True
            break
    if main_entry is None:
        raise SuppressedQAP("no verb entry available for the main verb")
    if main_entry.head_lemma is None:
        raise SuppressedQAP(f"verb entry {main_entry.text!r} has no lemma")
    texts[helping_pos] = helping
    texts[main_pos] = _main_verb_text(main_entry)
    if any(t is None for t in texts):
        missing = [y_s.ssus[i].raw_key() for i, t in enumerate(texts) if t is None]
        raise SuppressedQAP(f"no text for SSU(s): {', '.join(missing)}")
    return texts  # type: ignore[return-value]


def realize_question(tokens: list[str]) -> str:
    """Join realized texts into a question string: single spaces, leading
    capital, incorporated terminal punctuation stripped, one question mark."""
    parts = [t.rstrip(".!?").strip() for t in tokens]
    parts = [p for p in parts if p]
    if not parts:
        raise ValueError("no realized tokens")
    q = " ".join(parts)
    return q[0].upper() + q[1:] + "?"


def extract_answer(
    x: MetaSequence, y: MetaSequence, xs: MetaSequence, smap: SSUTextMap
) -> tuple[tuple[SSU, ...], str]:
    """The answer SSUs are the pattern-declarative values absent from the
    pattern interrogative, realized at their input positions in input order."""
    a_set = x.canonical_set() - y.canonical_set()
    positions = [
        i for i, u in enumerate(xs.ssus) if u.canonical_key() in a_set
    ]
    if not positions:
        raise SuppressedQAP("no answer SSU realizable in the input")
    answer_ssus = tuple(xs.ssus[i] for i in positions)
    answer = " ".join(smap.entries[i].text for i in positions)
    return answer_ssus, answer


def sentence_ref_for(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()[:12]


def _make_qap(
    pair: MDIPair,
    match: MatchResult,
    xs: MetaSequence,
    smap: SSUTextMap,
    cfg: EngineConfig,
    sentence_ref: str,
    sentence: str,
) -> QAPair:
    y_s = build_question_ssus(
        pair.md, pair.mi, xs, (match.z_len, match.x_off, match.xs_off), cfg
    )
    tokens = resolve_helping_verbs(y_s, xs, smap)
    question = realize_question(tokens)
    answer_ssus, answer = extract_answer(pair.md, pair.mi, xs, smap)
    q_keys = {u.canonical_key() for u in y_s.ssus}
    if any(u.canonical_key() in q_keys for u in answer_ssus):
        raise SuppressedQAP("answer SSU also appears in the question")
    wh = next((u.wh for u in y_s.ssus if u.is_wh), None)
    return QAPair(
        question=question,
        answer=answer,
        wh=wh,
        question_ms=y_s,
        answer_ssus=answer_ssus,
        pair_id=pair.id,
        classification=match.classification,
        sentence_ref=sentence_ref,
        sentence=sentence,
    )


def _near_misses(xs: MetaSequence, snapshot: Snapshot) -> list[dict]:
    roles = grammatical_roles(xs)
    out = []
    for m in ranked_matches(xs, snapshot)[:NEAR_MISS_LIMIT]:
        if m.z_len == 0:
            continue
        span = range(m.xs_off, m.xs_off + m.z_len)
        missing = [
            name
            for name, position in (
                ("subject", roles.subject),
                ("predicate", roles.predicate),
                ("object", roles.object),
            )
            if position is None or position not in span
        ]
        out.append(
            {
                "pair_id": m.pair.id if m.pair else None,
                "z_len": m.z_len,
                "classification": m.classification,
                "missing": missing,
            }
        )
    return out


def generate(
    ts: TaggedSentence,
    snapshot: Snapshot,
    cfg: EngineConfig | None = None,
    sentence_ref: str | None = None,
) -> GenerationResult:
    """Run the full generation pipeline for one tagged sentence against a
    store snapshot: segment, build meta sequences, match, and either emit
    question-answer pairs, queue a teach request, or both."""
    cfg = cfg or snapshot.cfg
    ref = sentence_ref or sentence_ref_for(ts.text)
    result = GenerationResult()
    try:
        candidates = declarative_sentences(ts)
    except NoPredicateError as exc:
        result.diagnostics.append(Diagnostic(ref, "segment", str(exc)))
        return result
    result.candidates = len(candidates)
    for s in candidates:
        try:
            xs, smap = build_sequence(s, cfg)
        except ConstraintError as exc:
            result.diagnostics.append(Diagnostic(ref, "merge", str(exc)))
            continue
        match = best_match(xs, snapshot)
        if match.classification in (PERFECT, SUCCESSFUL):
            for pair in snapshot.pairs_for_md(match.md_key):
                try:
                    result.qaps.append(
                        _make_qap(pair, match, xs, smap, cfg, ref, ts.text)
                    )
                except SuppressedQAP as exc:
                    result.diagnostics.append(
                        Diagnostic(ref, "generate", f"{pair.id}: {exc.reason}")
                    )
        if match.classification != PERFECT:
            request_id = hashlib.sha256(
                (ref + "|" + xs.canonical_encoding()).encode("utf-8")
            ).hexdigest()[:12]
            result.teach_requests.append(
                TeachRequest(
                    id=request_id,
                    sentence_ref=ref,
                    text=ts.text,
                    meta_sequence=xs,
                    near_misses=_near_misses(xs, snapshot),
                    tagged=ts,
                )
            )
    return result
