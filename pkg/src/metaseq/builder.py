"""Meta-sequence generation: per-token SSU assembly, merging of consecutive
same-role units (standard and phrasal-aware variants), and the positional
SSU-text map used for realization."""

from dataclasses import dataclass

from .model import (
    DECLARATIVE,
    INTERROGATIVE,
    EngineConfig,
    MetaSequence,
    NOUN_POS,
    PREP_ADV_POS,
    SSU,
    Token,
    VERB_POS,
    make_meta_sequence,
)
from .preprocess import SimpleSentence


@dataclass(frozen=True)
class MapEntry:
    ssu: SSU
    text: str
    head_lemma: str | None
    raw_pos: str | None
    tokens: tuple[Token, ...]


@dataclass(frozen=True)
class SSUTextMap:
    entries: tuple[MapEntry, ...]

    def __len__(self) -> int:
        return len(self.entries)


def build_units(s: SimpleSentence) -> list[tuple[SSU, tuple[Token, ...]]]:
    """One SSU per unit: tagged units become (SR, POS, NE) vectors, wh units
    become untagged literals."""
    out = []
    for u in s.units:
        if u.wh is not None:
            out.append((SSU.wh_literal(u.wh), u.tokens))
        else:
            tok = u.token
            out.append((SSU.tagged(u.sr, tok.pos, tok.ne), u.tokens))
    return out


def load_phrasal_lexicon(path: str) -> frozenset[str]:
    """One lowercase phrase per line; blank lines ignored."""
    with open(path, encoding="utf-8") as fh:
        return frozenset(line.strip() for line in fh if line.strip())


def apply_phrasal_lexicon(
    units: list[tuple[SSU, tuple[Token, ...]]], phrases: frozenset[str]
) -> list[tuple[SSU, tuple[Token, ...]]]:
    """Pre-join a verb unit with its following particle when the combined
    surface is a known phrasal verb. The joined unit keeps the verb's SSU."""
    out: list[tuple[SSU, tuple[Token, ...]]] = []
    i = 0
    while i < len(units):
        ssu, tokens = units[i]
        if (
            not ssu.is_wh
            and ssu.sr == "V"
            and i + 1 < len(units)
            and not units[i + 1][0].is_wh
            and units[i + 1][0].pos in PREP_ADV_POS
        ):
            particle_tokens = units[i + 1][1]
            combined = " ".join(
                [tokens[-1].lemma.lower()]
                + [t.text.lower() for t in particle_tokens]
            )
            if combined in phrases:
                out.append((ssu, tokens + particle_tokens))
                i += 2
                continue
        out.append((ssu, tokens))
        i += 1
    return out


def _merged_entry(group: list[tuple[SSU, tuple[Token, ...]]]) -> MapEntry:
    first_ssu = group[0][0]
    tokens = tuple(t for _, toks in group for t in toks)
    text = " ".join(t.text for t in tokens)
    if first_ssu.is_wh:
        return MapEntry(ssu=first_ssu, text=text, head_lemma=None, raw_pos=None,
                        tokens=tokens)
    pos = None
    for ssu, _ in group:
        if ssu.pos in NOUN_POS:
            pos = ssu.pos  # rightmost noun wins
    if pos is None:
        pos = group[-1][0].pos
    ne = None
    for ssu, _ in group:
        if ssu.ne is not None:
            ne = ssu.ne  # rightmost non-null wins
    head_lemma = None
    if first_ssu.sr == "V":
        head = next((t for t in tokens if t.pos in VERB_POS), tokens[0])
        head_lemma = head.lemma
    merged = SSU.tagged(first_ssu.sr, pos, ne)
    return MapEntry(ssu=merged, text=text, head_lemma=head_lemma, raw_pos=pos,
                    tokens=tokens)


def _merge(
    units: list[tuple[SSU, tuple[Token, ...]]],
    kind: str,
    cfg: EngineConfig,
    phrasal: bool,
) -> tuple[MetaSequence, SSUTextMap]:
    if not units:
        raise ValueError("cannot merge an empty unit list")
    protected = [False] * len(units)
    if phrasal:
        for i, (ssu, _) in enumerate(units):
            if ssu.is_wh or ssu.pos not in PREP_ADV_POS:
                continue
            left_v = i > 0 and units[i - 1][0].sr == "V"
            right_v = i + 1 < len(units) and units[i + 1][0].sr == "V"
            protected[i] = left_v or right_v

    groups: list[list[int]] = []
    for i, (ssu, _) in enumerate(units):
        if groups:
            head = units[groups[-1][0]][0]
            same_sr = not ssu.is_wh and not head.is_wh and ssu.sr == head.sr
            if same_sr and phrasal:
                group_guarded = any(protected[j] for j in groups[-1])
                if protected[i] or group_guarded:
                    all_prep_adv = ssu.pos in PREP_ADV_POS and all(
                        units[j][0].pos in PREP_ADV_POS for j in groups[-1]
                    )
                    same_sr = all_prep_adv
            if same_sr:
                groups[-1].append(i)
                continue
        groups.append([i])

    entries = tuple(_merged_entry([units[j] for j in g]) for g in groups)
    ms = make_meta_sequence(
        (e.ssu for e in entries), kind, r=cfg.r, max_len=cfg.max_len
    )
    return ms, SSUTextMap(entries)


def merge_standard(
    units: list[tuple[SSU, tuple[Token, ...]]],
    kind: str = DECLARATIVE,
    cfg: EngineConfig = EngineConfig(),
) -> tuple[MetaSequence, SSUTextMap]:
    """Greedy left-to-right merge of consecutive SSUs sharing an SR tag.

    The merged POS is the rightmost noun POS when the group contains a noun,
    otherwise the rightmost POS; the merged NE is the rightmost non-null one."""
    return _merge(units, kind, cfg, phrasal=False)


def merge_phrasal_aware(
    units: list[tuple[SSU, tuple[Token, ...]]],
    kind: str = DECLARATIVE,
    cfg: EngineConfig = EngineConfig(),
) -> tuple[MetaSequence, SSUTextMap]:
    """Like merge_standard, but a preposition/adverb unit sitting next to a
    V unit keeps its own SSU instead of merging into a same-role neighbor,
    unless that neighbor is itself a preposition or adverb."""
    return _merge(units, kind, cfg, phrasal=True)


def build_sequence(
    s: SimpleSentence, cfg: EngineConfig = EngineConfig()
) -> tuple[MetaSequence, SSUTextMap]:
    """Assemble and merge a simple sentence into its meta sequence and text map."""
    kind = INTERROGATIVE if s.is_interrogative else DECLARATIVE
    units = build_units(s)
    if cfg.phrasal_merge:
        return merge_phrasal_aware(units, kind, cfg)
    return merge_standard(units, kind, cfg)
