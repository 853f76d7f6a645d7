"""Core data model: tag sets, semantic-syntactic units, meta sequences,
and the tagged-sentence interchange format.

Everything here is an immutable value; instances are safe to share across
threads and to use as dict keys.
"""

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

SR_ARG_TAGS = ("ARG0", "ARG1", "ARG2", "ARG3", "ARG4", "ARG5")
SR_MODIFIER_TAGS = (
    "LOC", "EXT", "DIS", "ADV", "NEG", "MOD",
    "CAU", "TMP", "PRP", "MNR", "GOL", "DIR",
)
SR_TAGS = frozenset(SR_ARG_TAGS) | {"V"} | frozenset(SR_MODIFIER_TAGS)

PENN_TAGS = frozenset({
    "CC", "CD", "DT", "EX", "FW", "IN", "JJ", "JJR", "JJS", "LS", "MD",
    "NN", "NNS", "NNP", "NNPS", "PDT", "POS", "PRP", "PRP$",
    "RB", "RBR", "RBS", "RP", "SYM", "TO", "UH",
    "VB", "VBD", "VBG", "VBN", "VBP", "VBZ",
    "WDT", "WP", "WP$", "WRB",
    # punctuation / symbol tags that real taggers emit
    ".", ",", ":", "(", ")", "``", "''", "#", "$",
})

NE_TAGS = frozenset({"PER", "ORG", "LOC", "TIME", "DATE", "MONEY", "PERCENT"})

NOUN_POS = frozenset({"NN", "NNP", "NNS", "NNPS"})
PRES3_POS = frozenset({"VBP", "VBZ"})
VERB_POS = frozenset({"VB", "VBD", "VBG", "VBN", "VBP", "VBZ"})
PREP_ADV_POS = frozenset({"IN", "RB", "RBR", "RBS"})
WH_POS = frozenset({"WP", "WP$", "WRB", "WDT"})

DECLARATIVE = "declarative"
INTERROGATIVE = "interrogative"

DEFAULT_R = 3
DEFAULT_MAX_LEN = 64


class TagError(ValueError):
    """An SR/POS/NE label is outside its closed tag set."""


class ConstraintError(ValueError):
    """A meta sequence violates a structural bound (repetition, length, kind)."""

    def __init__(self, message: str, ssus: tuple = ()):
        super().__init__(message)
        self.ssus = ssus


def normalize_sr_label(raw: str) -> str:
    """Strip BIO chunk prefixes and the ARGM- modifier prefix from an SR label.

    Raises TagError when the stripped label is not in the closed SR tag set.
    """
    if not raw:
        raise TagError("empty semantic-role label")
    label = raw
    if label.startswith(("B-", "I-")):
        label = label[2:]
    if label.startswith("ARGM-"):
        label = label[5:]
    if label not in SR_TAGS:
        raise TagError(f"unknown semantic-role label: {raw!r}")
    return label


def pos_equiv_class(pos: str) -> str:
    """Equivalence class used during matching: all noun tags collapse to NOUN
    and the two present-tense tags collapse to PRES3; every other tag is its
    own singleton class."""
    if pos in NOUN_POS:
        return "NOUN"
    if pos in PRES3_POS:
        return "PRES3"
    return pos


_CLASS_REPRESENTATIVE = {"NOUN": "NN", "PRES3": "VBZ"}


def pos_class_representative(pos: str) -> str:
    cls = pos_equiv_class(pos)
    return _CLASS_REPRESENTATIVE.get(cls, pos)


@dataclass(frozen=True)
class SSU:
    """Semantic-syntactic unit: an (SR, POS, NE) tag vector, or a verbatim
    interrogative pronoun kept untagged."""

    sr: str | None = None
    pos: str | None = None
    ne: str | None = None
    wh: str | None = None

    def __post_init__(self):
        if self.wh is not None:
            if not self.wh:
                raise TagError("wh literal must be non-empty")
            if self.sr is not None or self.pos is not None or self.ne is not None:
                raise TagError("wh literal carries no tags")
            return
        if self.sr is None:
            raise TagError("tagged SSU requires an SR tag")
        if self.sr not in SR_TAGS:
            raise TagError(f"unknown SR tag: {self.sr!r}")
        if self.pos is not None and self.pos not in PENN_TAGS:
            raise TagError(f"unknown POS tag: {self.pos!r}")
        if self.ne is not None and self.ne not in NE_TAGS:
            raise TagError(f"unknown NE tag: {self.ne!r}")

    @classmethod
    def tagged(cls, sr: str, pos: str | None = None, ne: str | None = None) -> "SSU":
        return cls(sr=sr, pos=pos, ne=ne)

    @classmethod
    def wh_literal(cls, text: str) -> "SSU":
        return cls(wh=text)

    @property
    def is_wh(self) -> bool:
        return self.wh is not None

    def raw_key(self) -> str:
        """Display encoding with raw tags, e.g. "ARG1/NNP/PER" or "ARG1//"."""
        if self.is_wh:
            return self.wh  # type: ignore[return-value]
        return f"{self.sr}/{self.pos or ''}/{self.ne or ''}"

    def canonical_key(self) -> str:
        """Matching encoding: POS replaced by its equivalence-class
        representative. Two SSUs share a canonical key iff ssu_matches."""
        if self.is_wh:
            return self.wh  # type: ignore[return-value]
        pos = pos_class_representative(self.pos) if self.pos else ""
        return f"{self.sr}/{pos}/{self.ne or ''}"


def ssu_matches(a: SSU, b: SSU) -> bool:
    """Equality under matching semantics: wh literals by text, tagged SSUs by
    SR tag, POS equivalence class, and exact NE (null only equals null)."""
    if a.is_wh or b.is_wh:
        return a.wh == b.wh
    if a.sr != b.sr or a.ne != b.ne:
        return False
    if (a.pos is None) != (b.pos is None):
        return False
    if a.pos is None:
        return True
    return pos_equiv_class(a.pos) == pos_equiv_class(b.pos)


@dataclass(frozen=True)
class MetaSequence:
    """Ordered SSUs for one sentence after merging."""

    ssus: tuple[SSU, ...]
    kind: str = DECLARATIVE

    def __len__(self) -> int:
        return len(self.ssus)

    def encoding(self) -> str:
        return " ".join(u.raw_key() for u in self.ssus)

    def canonical_encoding(self) -> str:
        return " ".join(u.canonical_key() for u in self.ssus)

    def canonical_set(self) -> frozenset[str]:
        return frozenset(u.canonical_key() for u in self.ssus)


def make_meta_sequence(
    ssus: Iterable[SSU],
    kind: str,
    r: int = DEFAULT_R,
    max_len: int = DEFAULT_MAX_LEN,
) -> MetaSequence:
    """Construct a MetaSequence, enforcing the structural invariants:
    each SR tag occurs at most r times, total length is bounded, and a
    declarative sequence has at least 3 SSUs and no wh literal."""
    tup = tuple(ssus)
    if len(tup) > max_len:
        raise ConstraintError(f"meta sequence length {len(tup)} exceeds {max_len}", tup)
    counts: dict[str, int] = {}
    for u in tup:
        if u.is_wh:
            continue
        counts[u.sr] = counts.get(u.sr, 0) + 1  # type: ignore[index]
        if counts[u.sr] > r:  # type: ignore[index]
            raise ConstraintError(f"SR tag {u.sr} occurs more than {r} times", tup)
    if kind == DECLARATIVE:
        if len(tup) < 3:
            raise ConstraintError(
                f"declarative meta sequence has {len(tup)} SSUs, needs at least 3", tup
            )
        if any(u.is_wh for u in tup):
            raise ConstraintError("declarative meta sequence contains a wh literal", tup)
    elif kind != INTERROGATIVE:
        raise ValueError(f"unknown meta sequence kind: {kind!r}")
    return MetaSequence(tup, kind)


class SymbolTable:
    """Shared SSU-to-symbol interning for substring search.

    Two SSUs receive the same id exactly when ssu_matches holds, via the
    canonical key."""

    def __init__(self, max_len: int = DEFAULT_MAX_LEN):
        self._ids: dict[str, int] = {}
        self.max_len = max_len

    def id_for(self, ssu: SSU) -> int:
        key = ssu.canonical_key()
        if key not in self._ids:
            self._ids[key] = len(self._ids)
        return self._ids[key]

    def encode(self, ms: MetaSequence) -> list[int]:
        if len(ms) > self.max_len:
            raise ConstraintError(
                f"meta sequence length {len(ms)} exceeds {self.max_len}", ms.ssus
            )
        return [self.id_for(u) for u in ms.ssus]

    def __len__(self) -> int:
        return len(self._ids)


def encode(ms: MetaSequence, table: SymbolTable) -> list[int]:
    return table.encode(ms)


@dataclass(frozen=True)
class Token:
    index: int
    text: str
    lemma: str
    pos: str
    ne: str | None = None

    def __post_init__(self):
        if not self.text:
            raise ValueError("token text must be non-empty")
        if self.pos not in PENN_TAGS:
            raise TagError(f"unknown POS tag: {self.pos!r}")
        if self.ne is not None and self.ne not in NE_TAGS:
            raise TagError(f"unknown NE tag: {self.ne!r}")


@dataclass(frozen=True)
class Frame:
    """One predicate's labeling: an optional raw SR label per token."""

    predicate_index: int
    labels: tuple[str | None, ...]


@dataclass(frozen=True)
class TaggedSentence:
    text: str
    tokens: tuple[Token, ...]
    frames: tuple[Frame, ...]

    def __post_init__(self):
        for i, tok in enumerate(self.tokens):
            if tok.index != i:
                raise ValueError(f"token indices not contiguous at position {i}")
        for f in self.frames:
            if len(f.labels) != len(self.tokens):
                raise ValueError("frame label count does not match token count")
            if not 0 <= f.predicate_index < len(self.tokens):
                raise ValueError(f"predicate index {f.predicate_index} out of range")
            label = f.labels[f.predicate_index]
            if label is None or normalize_sr_label(label) != "V":
                raise ValueError(
                    f"predicate token at {f.predicate_index} is not labeled V"
                )


@dataclass(frozen=True)
class EngineConfig:
    """Tunables for merging and question construction.

    case2_order controls where the input sentence's unmatched segments land
    when the matched region does not cover the whole input: the default keeps
    the after-segment first, then the before-segment.
    """

    r: int = DEFAULT_R
    max_len: int = DEFAULT_MAX_LEN
    phrasal_merge: bool = True
    case2_order: str = "after_then_before"

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("r must be at least 1")
        if self.max_len < 3:
            raise ValueError("max_len must be at least 3")
        if self.case2_order not in ("after_then_before", "before_then_after"):
            raise ValueError(f"unknown case2_order: {self.case2_order!r}")


class SchemaError(ValueError):
    """A tagged-sentence interchange document does not match the schema."""


def tagged_sentence_from_dict(obj: Mapping) -> TaggedSentence:
    """Parse the interchange JSON object:
    {"text": str,
     "tokens": [{"i": int, "text": str, "lemma": str, "pos": str, "ne": str|null}],
     "frames": [{"predicate": int, "labels": [str|null, ...]}]}
    """
    try:
        text = obj["text"]
        raw_tokens = obj["tokens"]
        raw_frames = obj["frames"]
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"missing interchange field: {exc}") from exc
    if not isinstance(text, str) or not text:
        raise SchemaError("text must be a non-empty string")
    tokens = []
    for pos_i, t in enumerate(raw_tokens):
        try:
            tokens.append(
                Token(
                    index=int(t["i"]),
                    text=t["text"],
                    lemma=t["lemma"],
                    pos=t["pos"],
                    ne=t.get("ne"),
                )
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(f"bad token at position {pos_i}: {exc}") from exc
    frames = []
    for pos_i, f in enumerate(raw_frames):
        try:
            frames.append(
                Frame(
                    predicate_index=int(f["predicate"]),
                    labels=tuple(f["labels"]),
                )
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(f"bad frame at position {pos_i}: {exc}") from exc
    try:
        return TaggedSentence(text=text, tokens=tuple(tokens), frames=tuple(frames))
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def tagged_sentence_to_dict(ts: TaggedSentence) -> dict:
    return {
        "text": ts.text,
        "tokens": [
            {"i": t.index, "text": t.text, "lemma": t.lemma, "pos": t.pos, "ne": t.ne}
            for t in ts.tokens
        ],
        "frames": [
            {"predicate": f.predicate_index, "labels": list(f.labels)}
            for f in ts.frames
        ],
    }


def ssu_to_json(ssu: SSU):
    if ssu.is_wh:
        return {"wh": ssu.wh}
    return [ssu.sr, ssu.pos, ssu.ne]


def ssu_from_json(obj) -> SSU:
    if isinstance(obj, Mapping):
        return SSU.wh_literal(obj["wh"])
    if isinstance(obj, Sequence) and len(obj) == 3:
        return SSU.tagged(obj[0], obj[1], obj[2])
    raise SchemaError(f"bad SSU record: {obj!r}")
