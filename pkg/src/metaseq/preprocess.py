"""Sentence preprocessing: contraction/slang normalization, frame-based
segmentation into simple sentences, leading-conjunction stripping, and
interrogative-pronoun detection."""

import logging
import re
from dataclasses import dataclass, replace

from .matcher import find_roles
from .model import TaggedSentence, Token, WH_POS, normalize_sr_label

logger = logging.getLogger(__name__)

# Applied in order; each pattern is token-boundary aware.
_REPLACEMENTS: list[tuple[re.Pattern, str]] = [
    (re.compile(r"(?<=\w)'m\b"), " am"),
    (re.compile(r"(?<=\w)'s\b"), " is"),
    (re.compile(r"(?<=\w)'re\b"), " are"),
    (re.compile(r"(?<=\w)'ve\b"), " have"),
    (re.compile(r"(?<=\w)n't\b"), " not"),
    (re.compile(r"\be\.g\.(?!\w)"), "for example"),
    (re.compile(r"\bi\.e\.(?!\w)"), "that is"),
    (re.compile(r"\ba\.k\.a\.(?!\w)"), "also known as"),
    (re.compile(r"\bgonna\b"), "going to"),
    (re.compile(r"\bwanna\b"), "want to"),
    (re.compile(r"\bgotta\b"), "got to"),
    (re.compile(r"\bgimme\b"), "give me"),
    (re.compile(r"\blemme\b"), "let me"),
    (re.compile(r"\bya\b"), "you"),
]

_PAST_PARTICIPLE_AFTER_S = re.compile(r"\b(\w+)'s\s+\w+(ed|en)\b")


def normalize_text(text: str) -> str:
    """Expand contractions and slang per the fixed replacement table.

    The table maps 's to "is" unconditionally, which misreads possessives and
    "has"; a diagnostic is logged when the following word looks like a past
    participle."""
    if _PAST_PARTICIPLE_AFTER_S.search(text):
        logger.warning("'s before a past participle; expansion to 'is' may be wrong: %r", text)
    for pattern, repl in _REPLACEMENTS:
        text = pattern.sub(repl, text)
    return text


class NoPredicateError(ValueError):
    """The sentence has no frame at all and cannot be segmented."""


@dataclass(frozen=True)
class Unit:
    """One meta-sequence position before merging: either an SR-tagged token
    or a wh literal spanning one or more tokens."""

    sr: str | None
    tokens: tuple[Token, ...]
    wh: str | None = None

    @property
    def token(self) -> Token:
        return self.tokens[0]


@dataclass(frozen=True)
class SimpleSentence:
    source: TaggedSentence
    units: tuple[Unit, ...]
    is_interrogative: bool = False


def segment(ts: TaggedSentence) -> list[SimpleSentence]:
    """One candidate simple sentence per frame, keeping exactly the tokens
    that frame labels, with SR labels normalized."""
    if not ts.frames:
        raise NoPredicateError(f"no predicate found in: {ts.text!r}")
    out = []
    for frame in ts.frames:
        units = []
        for token, label in zip(ts.tokens, frame.labels):
            if label is None:
                continue
            units.append(Unit(sr=normalize_sr_label(label), tokens=(token,)))
        out.append(SimpleSentence(source=ts, units=tuple(units)))
    return out


def strip_leading_cc(s: SimpleSentence) -> SimpleSentence:
    """Drop coordinating-conjunction tokens that precede the subject unit."""
    roles = find_roles([u.sr for u in s.units])
    if roles.subject is None:
        return s
    kept = [
        u
        for i, u in enumerate(s.units)
        if not (i < roles.subject and u.wh is None and u.token.pos == "CC")
    ]
    return replace(s, units=tuple(kept))


def _leading_wh_run(ts: TaggedSentence) -> list[Token]:
    run: list[Token] = []
    for tok in ts.tokens:
        if tok.index == len(run) and tok.pos in WH_POS:
            run.append(tok)
        else:
            break
    # "How many" / "How much" count as one interrogative pronoun
    if run and run[-1].text.lower() == "how" and len(ts.tokens) > len(run):
        nxt = ts.tokens[len(run)]
        if nxt.text.lower() in ("many", "much"):
            run.append(nxt)
    return run


def detect_wh(s: SimpleSentence) -> SimpleSentence:
    """Mark sentence-initial interrogative-pronoun tokens as a single wh
    literal and flag the sentence interrogative.

    An interrogative with no detectable pronoun is still usable; a warning is
    logged and only the flag is set."""
    run = _leading_wh_run(s.source)
    if not run:
        logger.warning("no interrogative pronoun detected in: %r", s.source.text)
        return replace(s, is_interrogative=True)
    run_indices = {t.index for t in run}
    rest = tuple(u for u in s.units if u.wh is not None or u.token.index not in run_indices)
    wh_unit = Unit(sr=None, tokens=tuple(run), wh=" ".join(t.text for t in run))
    return replace(s, units=(wh_unit,) + rest, is_interrogative=True)


def _has_core_roles(s: SimpleSentence) -> bool:
    roles = find_roles([u.sr for u in s.units])
    return roles.subject is not None and roles.predicate is not None and roles.object is not None


def declarative_sentences(ts: TaggedSentence) -> list[SimpleSentence]:
    """Segment, strip leading conjunctions, and keep only candidates with a
    subject, a predicate, and an object."""
    return [s for s in (strip_leading_cc(c) for c in segment(ts)) if _has_core_roles(s)]


def interrogative_sentence(ts: TaggedSentence) -> SimpleSentence | None:
    """First segmented candidate of a training interrogative, with leading
    conjunctions stripped and the wh literal detected."""
    candidates = segment(ts)
    if not candidates:
        return None
    if len(candidates) > 1:
        logger.warning("interrogative has %d frames; using the first: %r",
                       len(candidates), ts.text)
    return detect_wh(strip_leading_cc(candidates[0]))
