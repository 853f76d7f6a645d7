"""Per-pronoun run statistics and the results table."""

from dataclasses import dataclass, field

CANONICAL_COLUMNS = ["Where", "Who", "What", "When", "Why", "How"]
NO_PRONOUN = "(none)"


def pronoun_column(wh: str | None) -> str:
    """Bucket a pronoun under its table column; "How many"/"How much" fall
    under "How", anything unrecognized keeps its first word."""
    if not wh:
        return NO_PRONOUN
    head = wh.split()[0]
    return head[0].upper() + head[1:].lower()


@dataclass
class RunStats:
    pairs_by_pronoun: dict = field(default_factory=dict)
    qaps_by_pronoun: dict = field(default_factory=dict)
    sentences_processed: int = 0
    sentences_discarded: int = 0
    teach_queue_size: int = 0
    mean_ms_per_sentence: float = 0.0

    @property
    def total_pairs(self) -> int:
        return sum(self.pairs_by_pronoun.values())

    @property
    def total_qaps(self) -> int:
        return sum(self.qaps_by_pronoun.values())

    def count_pair(self, wh: str | None) -> None:
        col = pronoun_column(wh)
        self.pairs_by_pronoun[col] = self.pairs_by_pronoun.get(col, 0) + 1

    def count_qap(self, wh: str | None) -> None:
        col = pronoun_column(wh)
        self.qaps_by_pronoun[col] = self.qaps_by_pronoun.get(col, 0) + 1

    def columns(self) -> list[str]:
        extra = sorted(
            (set(self.pairs_by_pronoun) | set(self.qaps_by_pronoun))
            - set(CANONICAL_COLUMNS)
        )
        return CANONICAL_COLUMNS + extra

    def table(self) -> str:
        cols = self.columns()
        rows = [
            [""] + cols + ["Total"],
            ["MSDIP pairs"]
            + [str(self.pairs_by_pronoun.get(c, 0)) for c in cols]
            + [str(self.total_pairs)],
            ["QAPs generated"]
            + [str(self.qaps_by_pronoun.get(c, 0)) for c in cols]
            + [str(self.total_qaps)],
        ]
        widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
        lines = [
            " | ".join(
                cell.ljust(w) if i == 0 else cell.rjust(w)
                for i, (cell, w) in enumerate(zip(row, widths))
            )
            for row in rows
        ]
        lines.append("")
        lines.append(f"sentences processed: {self.sentences_processed}")
        lines.append(f"sentences discarded: {self.sentences_discarded}")
        lines.append(f"teach queue size:    {self.teach_queue_size}")
        lines.append(f"mean ms/sentence:    {self.mean_ms_per_sentence:.2f}")
        return "\n".join(lines)


def pair_pronoun(pair) -> str | None:
    return next((u.wh for u in pair.mi.ssus if u.is_wh), None)


def stats_for_store(store) -> RunStats:
    stats = RunStats()
    for pair in store.pairs:
        stats.count_pair(pair_pronoun(pair))
    return stats
