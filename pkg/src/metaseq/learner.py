"""Pattern learning: builds declarative/interrogative meta-sequence pairs
from training sentences and maintains the deduplicated persistent store."""

import hashlib
import json
import logging
import os
import tempfile
from dataclasses import dataclass
from datetime import datetime, timezone

from .builder import build_sequence
from .model import (
    ConstraintError,
    DECLARATIVE,
    EngineConfig,
    INTERROGATIVE,
    MetaSequence,
    TaggedSentence,
    ssu_from_json,
    ssu_to_json,
)
from .preprocess import declarative_sentences, interrogative_sentence

logger = logging.getLogger(__name__)

STORE_VERSION = 1
DEFAULT_CAP = 100_000

INSERTED = "inserted"
DUPLICATE = "duplicate"


class MalformedPairError(ValueError):
    """A training pair cannot produce a valid pattern."""


class StoreLoadError(ValueError):
    def __init__(self, message: str, record_index: int | None = None):
        super().__init__(message)
        self.record_index = record_index


class StoreCapacityError(RuntimeError):
    pass


@dataclass(frozen=True)
class MDIPair:
    id: str
    md: MetaSequence
    mi: MetaSequence
    source: str = "seed"
    created_at: str = ""


def pair_key(md: MetaSequence, mi: MetaSequence) -> str:
    return md.canonical_encoding() + " || " + mi.canonical_encoding()


def pair_id(md: MetaSequence, mi: MetaSequence) -> str:
    return hashlib.sha256(pair_key(md, mi).encode("utf-8")).hexdigest()[:12]


def make_pair(md: MetaSequence, mi: MetaSequence, source: str = "seed") -> MDIPair:
    created = datetime.now(timezone.utc).isoformat(timespec="seconds")
    return MDIPair(id=pair_id(md, mi), md=md, mi=mi, source=source, created_at=created)


def learn_pair(
    decl: TaggedSentence,
    interrogatives: list[TaggedSentence],
    cfg: EngineConfig = EngineConfig(),
    source: str = "seed",
) -> list[MDIPair]:
    """Build one (MD, MI) pair per interrogative from a training declarative.

    Only the first surviving simple sentence of the declarative is used;
    multi-clause training input is reported as a warning."""
    candidates = declarative_sentences(decl)
    if not candidates:
        raise MalformedPairError(
            f"declarative yields no usable simple sentence: {decl.text!r}"
        )
    if len(candidates) > 1:
        logger.warning("training declarative has %d clauses; using the first: %r",
                       len(candidates), decl.text)
    try:
        md, _ = build_sequence(candidates[0], cfg)
    except ConstraintError as exc:
        raise MalformedPairError(f"declarative pattern invalid: {exc}") from exc
    pairs = []
    for q in interrogatives:
        ss = interrogative_sentence(q)
        if ss is None:
            raise MalformedPairError(f"interrogative yields no sentence: {q.text!r}")
        try:
            mi, _ = build_sequence(ss, cfg)
        except ConstraintError as exc:
            raise MalformedPairError(f"interrogative pattern invalid: {exc}") from exc
        if not any(not u.is_wh and u.sr == "V" for u in mi.ssus):
            raise MalformedPairError(f"interrogative has no predicate SSU: {q.text!r}")
        pairs.append(make_pair(md, mi, source=source))
    return pairs


class Snapshot:
    """Immutable view of a store used by matching and generation."""

    def __init__(self, pairs: tuple[MDIPair, ...], cfg: EngineConfig):
        self.pairs = pairs
        self.cfg = cfg
        self.md_groups: dict[str, tuple[MetaSequence, list[MDIPair]]] = {}
        for p in pairs:
            key = p.md.canonical_encoding()
            if key not in self.md_groups:
                self.md_groups[key] = (p.md, [])
            self.md_groups[key][1].append(p)

    def pairs_for_md(self, md_key: str) -> list[MDIPair]:
        group = self.md_groups.get(md_key)
        return list(group[1]) if group else []

    def __len__(self) -> int:
        return len(self.pairs)


class MSDIP:
    """Deduplicated store of learned (MD, MI) pairs.

    Mutations are single-writer; readers should take a snapshot() and run
    against it."""

    def __init__(self, cfg: EngineConfig = EngineConfig(), cap: int = DEFAULT_CAP):
        self.cfg = cfg
        self.cap = cap
        self._pairs: dict[str, MDIPair] = {}

    def __len__(self) -> int:
        return len(self._pairs)

    @property
    def pairs(self) -> list[MDIPair]:
        return list(self._pairs.values())

    def insert(self, pair: MDIPair) -> str:
        key = pair_key(pair.md, pair.mi)
        if key in self._pairs:
            return DUPLICATE
        if len(self._pairs) >= self.cap:
            raise StoreCapacityError(f"store capacity {self.cap} exceeded")
        self._pairs[key] = pair
        return INSERTED

    def snapshot(self) -> Snapshot:
        return Snapshot(tuple(self._pairs.values()), self.cfg)

    def clone(self) -> "MSDIP":
        other = MSDIP(cfg=self.cfg, cap=self.cap)
        other._pairs = dict(self._pairs)
        return other

    def to_dict(self) -> dict:
        return {
            "version": STORE_VERSION,
            "config": {"r": self.cfg.r, "phrasal_merge": self.cfg.phrasal_merge},
            "pairs": [
                {
                    "id": p.id,
                    "source": p.source,
                    "created_at": p.created_at,
                    "md": [ssu_to_json(u) for u in p.md.ssus],
                    "mi": [ssu_to_json(u) for u in p.mi.ssus],
                }
                for p in self._pairs.values()
            ],
        }

    def save(self, path: str) -> None:
        """Atomic write: the store file is replaced only after a full dump."""
        payload = json.dumps(self.to_dict(), ensure_ascii=False, indent=1)
        directory = os.path.dirname(os.path.abspath(path))
        fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(payload)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    @classmethod
    def load(cls, path: str, cap: int = DEFAULT_CAP) -> "MSDIP":
        with open(path, encoding="utf-8") as fh:
            try:
                doc = json.load(fh)
            except json.JSONDecodeError as exc:
                raise StoreLoadError(f"store file is not valid JSON: {exc}") from exc
        if doc.get("version") != STORE_VERSION:
            raise StoreLoadError(
                f"unsupported store version: {doc.get('version')!r}"
            )
        header = doc.get("config", {})
        cfg = EngineConfig(
            r=int(header.get("r", EngineConfig.r)),
            phrasal_merge=bool(header.get("phrasal_merge", EngineConfig.phrasal_merge)),
        )
        store = cls(cfg=cfg, cap=cap)
        duplicates = 0
        for i, rec in enumerate(doc.get("pairs", [])):
            try:
                md = MetaSequence(
                    tuple(ssu_from_json(u) for u in rec["md"]), DECLARATIVE
                )
                mi = MetaSequence(
                    tuple(ssu_from_json(u) for u in rec["mi"]), INTERROGATIVE
                )
                pair = MDIPair(
                    id=rec["id"],
                    md=md,
                    mi=mi,
                    source=rec.get("source", "seed"),
                    created_at=rec.get("created_at", ""),
                )
            except (KeyError, TypeError, ValueError) as exc:
                raise StoreLoadError(f"malformed pair record: {exc}", record_index=i) from exc
            if store.insert(pair) == DUPLICATE:
                duplicates += 1
        if duplicates:
            logger.warning("store %s contained %d duplicate records; collapsed",
                           path, duplicates)
        return store
