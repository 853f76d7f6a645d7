"""Meta-sequence matching: grammatical role detection, longest common
substring of two symbol-encoded sequences, and best-pattern selection."""

from dataclasses import dataclass
from typing import Sequence

from .model import SR_ARG_TAGS, MetaSequence, SymbolTable

PERFECT = "perfect"
SUCCESSFUL = "successful"
UNSUCCESSFUL = "unsuccessful"
NONE = "none"

_ARGN = frozenset(SR_ARG_TAGS)


@dataclass(frozen=True)
class Roles:
    subject: int | None = None
    predicate: int | None = None
    object: int | None = None

    def missing(self) -> list[str]:
        out = []
        if self.subject is None:
            out.append("subject")
        if self.predicate is None:
            out.append("predicate")
        if self.object is None:
            out.append("object")
        return out


def find_roles(srs: Sequence[str | None]) -> Roles:
    """Locate subject/predicate/object positions in a sequence of SR tags
    (None marks an untagged wh position).

    The predicate is the first V; the subject is the first ARG0, falling back
    to the first numbered argument before the predicate; the object is the
    first numbered argument after the predicate at a different position than
    the subject."""
    predicate = next((i for i, sr in enumerate(srs) if sr == "V"), None)
    subject = next((i for i, sr in enumerate(srs) if sr == "ARG0"), None)
    if subject is None and predicate is not None:
        subject = next(
            (i for i, sr in enumerate(srs[:predicate]) if sr in _ARGN), None
        )
    obj = None
    if predicate is not None:
        obj = next(
            (
                i
                for i, sr in enumerate(srs)
                if i > predicate and i != subject and sr in _ARGN
            ),
            None,
        )
    return Roles(subject=subject, predicate=predicate, object=obj)


def grammatical_roles(ms: MetaSequence) -> Roles:
    return find_roles([u.sr for u in ms.ssus])


class _SuffixAutomaton:
    """Suffix automaton over a symbol sequence; linear construction.

    min_end[state] is the smallest end position (index of last symbol) of any
    occurrence of the state's substrings, used to report the leftmost match
    offset in the indexed sequence."""

    def __init__(self, symbols: Sequence[int]):
        self.next: list[dict[int, int]] = [{}]
        self.link = [-1]
        self.length = [0]
        self.min_end = [-1]
        last = 0
        for i, c in enumerate(symbols):
            cur = self._new_state(self.length[last] + 1, i)
            p = last
            while p >= 0 and c not in self.next[p]:
                self.next[p][c] = cur
                p = self.link[p]
            if p < 0:
                self.link[cur] = 0
            else:
                q = self.next[p][c]
                if self.length[p] + 1 == self.length[q]:
                    self.link[cur] = q
                else:
                    clone = self._new_state(self.length[p] + 1, self.min_end[q])
                    self.next[clone] = dict(self.next[q])
                    self.link[clone] = self.link[q]
                    while p >= 0 and self.next[p].get(c) == q:
                        self.next[p][c] = clone
                        p = self.link[p]
                    self.link[q] = clone
                    self.link[cur] = clone
            last = cur
        # propagate minimal end positions up the suffix-link tree
        order = sorted(range(1, len(self.length)), key=self.length.__getitem__, reverse=True)
        for v in order:
            parent = self.link[v]
            if parent > 0 and self.min_end[v] < self.min_end[parent]:
                self.min_end[parent] = self.min_end[v]

    def _new_state(self, length: int, min_end: int) -> int:
        self.next.append({})
        self.link.append(-1)
        self.length.append(length)
        self.min_end.append(min_end)
        return len(self.length) - 1


def lcs_symbols(a: Sequence[int], b: Sequence[int]) -> tuple[int, int, int]:
    """Longest common substring of two symbol sequences.

    Returns (length, a_offset, b_offset); ties are broken by the smallest
    offset in a, then the smallest offset in b. A zero length reports (0, 0, 0).
    """
    if not a or not b:
        return (0, 0, 0)
    sam = _SuffixAutomaton(a)
    best_len = 0
    best: tuple[int, int] | None = None  # (a_off, b_off)
    state, cur = 0, 0
    for j, c in enumerate(b):
        while state and c not in sam.next[state]:
            state = sam.link[state]
            cur = sam.length[state]
        if c in sam.next[state]:
            state = sam.next[state][c]
            cur += 1
        else:
            state, cur = 0, 0
            continue
        if cur == 0:
            continue
        a_off = sam.min_end[state] - cur + 1
        b_off = j - cur + 1
        if cur > best_len or (cur == best_len and (a_off, b_off) < best):  # type: ignore[operator]
            best_len = cur
            best = (a_off, b_off)
    if best_len == 0:
        return (0, 0, 0)
    return (best_len, best[0], best[1])  # type: ignore[index]


def lcs(
    a: MetaSequence, b: MetaSequence, table: SymbolTable | None = None
) -> tuple[int, int, int]:
    """Longest run of matching SSUs between two meta sequences, matched under
    the shared symbol table's equivalence semantics."""
    if table is None:
        table = SymbolTable()
    return lcs_symbols(table.encode(a), table.encode(b))


def classify(
    z_len: int, x_off: int, xs_off: int, x: MetaSequence, xs: MetaSequence
) -> str:
    """Classify a match: perfect when the common run is both sequences in
    full; successful when it covers the input's subject, predicate, and
    object; unsuccessful when one of those is outside the run; none when
    nothing matched."""
    if z_len == 0:
        return NONE
    if z_len == len(x) == len(xs):
        return PERFECT
    roles = grammatical_roles(xs)
    span = range(xs_off, xs_off + z_len)
    for position in (roles.subject, roles.predicate, roles.object):
        if position is None or position not in span:
            return UNSUCCESSFUL
    return SUCCESSFUL


@dataclass(frozen=True)
class MatchResult:
    pair: object | None  # MDIPair of the matched pattern, or None
    md_key: str | None
    z_len: int
    x_off: int
    xs_off: int
    classification: str

    @property
    def matched(self) -> bool:
        return self.classification in (PERFECT, SUCCESSFUL)


_NO_MATCH = MatchResult(None, None, 0, 0, 0, NONE)


def ranked_matches(xs: MetaSequence, snapshot) -> list[MatchResult]:
    """Score every distinct pattern in the store against the input, ordered
    best first. Rank: longest common run, then successful/perfect over
    unsuccessful, then the shorter pattern, then the smaller encoding."""
    table = SymbolTable()
    xs_sym = table.encode(xs)
    results = []
    for md_key, (md, pairs) in snapshot.md_groups.items():
        z_len, x_off, xs_off = lcs_symbols(table.encode(md), xs_sym)
        cls = classify(z_len, x_off, xs_off, md, xs)
        results.append(MatchResult(pairs[0], md_key, z_len, x_off, xs_off, cls))
    results.sort(
        key=lambda m: (
            -m.z_len,
            0 if m.classification in (PERFECT, SUCCESSFUL) else 1,
            len(m.pair.md) if m.pair is not None else 0,
            m.md_key or "",
        )
    )
    return results


def best_match(xs: MetaSequence, snapshot) -> MatchResult:
    ranked = ranked_matches(xs, snapshot)
    if not ranked or ranked[0].z_len == 0:
        return _NO_MATCH
    return ranked[0]
