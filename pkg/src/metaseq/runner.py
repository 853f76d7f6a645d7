"""Batch operations behind the CLI: learning a pairs file into the store,
running generation over a sentence corpus, and the match debug report."""

import json
import os
import sys
import time

from .generator import generate
from .learner import INSERTED, MSDIP, MalformedPairError, learn_pair
from .matcher import ranked_matches
from .model import EngineConfig, SchemaError, tagged_sentence_from_dict
from .preprocess import NoPredicateError, declarative_sentences
from .builder import build_sequence
from .stats import RunStats, stats_for_store
from .teachqueue import append_requests


class RunnerError(RuntimeError):
    pass


def load_store(msdip_path: str, cap: int | None = None) -> MSDIP:
    if os.path.exists(msdip_path):
        return MSDIP.load(msdip_path) if cap is None else MSDIP.load(msdip_path, cap=cap)
    return MSDIP(EngineConfig())


def run_learn(pairs_file: str, msdip_path: str) -> dict:
    """Learn every record of the pairs file and persist the store once.

    A malformed record aborts the run with its index; nothing is persisted."""
    with open(pairs_file, encoding="utf-8") as fh:
        records = json.load(fh)
    if not isinstance(records, list):
        raise RunnerError("pairs file must be a JSON array")
    store = load_store(msdip_path)
    inserted = duplicates = 0
    for i, rec in enumerate(records):
        try:
            decl = tagged_sentence_from_dict(rec["decl"])
            questions = [tagged_sentence_from_dict(q) for q in rec["interrogatives"]]
            pairs = learn_pair(decl, questions, store.cfg)
        except (KeyError, TypeError, SchemaError, MalformedPairError, NoPredicateError) as exc:
            raise RunnerError(f"pairs record {i}: {exc}") from exc
        for pair in pairs:
            if store.insert(pair) == INSERTED:
                inserted += 1
            else:
                duplicates += 1
    store.save(msdip_path)
    return {"inserted": inserted, "duplicates": duplicates, "store_size": len(store)}


def _iter_sentences(input_file: str):
    with open(input_file, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if line:
                yield lineno, json.loads(line)


def run_generate(
    input_file: str,
    msdip_path: str,
    out_path: str,
    teach_queue_path: str | None = None,
    stream=sys.stderr,
) -> RunStats:
    """Generate question-answer pairs for every input sentence.

    Output lines are written in input order; per-sentence failures become
    diagnostics on the error stream, never partial output lines."""
    store = MSDIP.load(msdip_path)
    snapshot = store.snapshot()
    stats = stats_for_store(store)
    all_requests = []
    elapsed = 0.0
    with open(out_path, "w", encoding="utf-8") as out:
        for lineno, obj in _iter_sentences(input_file):
            try:
                ts = tagged_sentence_from_dict(obj)
            except SchemaError as exc:
                print(f"line {lineno}: schema error: {exc}", file=stream)
                stats.sentences_discarded += 1
                continue
            stats.sentences_processed += 1
            started = time.perf_counter()
            result = generate(ts, snapshot, store.cfg, sentence_ref=f"s{lineno:06d}")
            elapsed += time.perf_counter() - started
            for d in result.diagnostics:
                print(f"line {lineno}: [{d.stage}] {d.reason}", file=stream)
            if result.candidates == 0 and not result.qaps:
                stats.sentences_discarded += 1
            for qap in result.qaps:
                stats.count_qap(qap.wh)
                out.write(json.dumps(qap.to_json(), ensure_ascii=False) + "\n")
            all_requests.extend(result.teach_requests)
    if teach_queue_path and all_requests:
        append_requests(teach_queue_path, all_requests)
    stats.teach_queue_size = len(all_requests)
    if stats.sentences_processed:
        stats.mean_ms_per_sentence = elapsed * 1000.0 / stats.sentences_processed
    return stats


def run_match(input_file: str, msdip_path: str, stream=sys.stdout) -> None:
    """Per-sentence ranked match candidates with spans and classification."""
    store = MSDIP.load(msdip_path)
    snapshot = store.snapshot()
    for lineno, obj in _iter_sentences(input_file):
        ts = tagged_sentence_from_dict(obj)
        print(f"# line {lineno}: {ts.text}", file=stream)
        try:
            candidates = declarative_sentences(ts)
        except NoPredicateError as exc:
            print(f"  no predicate: {exc}", file=stream)
            continue
        if not candidates:
            print("  discarded (no subject/predicate/object clause)", file=stream)
            continue
        for s in candidates:
            try:
                xs, _ = build_sequence(s, store.cfg)
            except Exception as exc:
                print(f"  merge error: {exc}", file=stream)
                continue
            print(f"  X_s = {xs.encoding()}", file=stream)
            ranked = ranked_matches(xs, snapshot)
            if not ranked or ranked[0].z_len == 0:
                print("  none", file=stream)
                continue
            for rank, m in enumerate(ranked, start=1):
                if m.z_len == 0:
                    continue
                print(
                    f"  {rank}. z_len={m.z_len} x_off={m.x_off} xs_off={m.xs_off} "
                    f"{m.classification} pair={m.pair.id} md={m.pair.md.encoding()}",
                    file=stream,
                )
