"""HTTP service exposing generation and the human-in-the-loop teach flow.

All linguistic work stays in the core modules; tagging of raw text is
delegated to an external oracle endpoint. Mutations go through a single
writer lock and are persisted atomically before they become visible."""

import logging
import threading
from typing import Callable

import httpx
from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from .generator import generate
from .learner import DUPLICATE, MSDIP, MalformedPairError, learn_pair
from .model import (
    SchemaError,
    TaggedSentence,
    tagged_sentence_from_dict,
)
from .preprocess import NoPredicateError, normalize_text
from .stats import pair_pronoun
from .teachqueue import load_queue, teach_request_to_json, write_queue

logger = logging.getLogger(__name__)

Tagger = Callable[[str], TaggedSentence]


class OracleError(RuntimeError):
    """The tagging oracle is unreachable or returned an unusable document."""


def http_tagger(oracle_url: str, timeout: float = 30.0) -> Tagger:
    base = oracle_url.rstrip("/")

    def tag(text: str) -> TaggedSentence:
        try:
            response = httpx.post(f"{base}/tag", json={"text": text}, timeout=timeout)
            response.raise_for_status()
            return tagged_sentence_from_dict(response.json())
        except (httpx.HTTPError, SchemaError, ValueError) as exc:
            raise OracleError(f"oracle at {base} failed: {exc}") from exc

    return tag


class TeachBody(BaseModel):
    request_id: str
    interrogatives: list[str] = Field(min_length=1)


class PairsBody(BaseModel):
    decl: dict
    interrogatives: list[dict] = Field(min_length=1)


class GenerateBody(BaseModel):
    text: str = Field(min_length=1)


def create_app(
    msdip_path: str,
    queue_path: str | None = None,
    tagger: Tagger | None = None,
    console_dir: str | None = None,
) -> FastAPI:
    app = FastAPI(title="metaseq service")
    state = _ServiceState(msdip_path, queue_path, tagger)
    app.state.service = state

    @app.get("/queue")
    def get_queue():
        return {"requests": state.pending_requests()}

    @app.delete("/queue/{request_id}")
    def dismiss(request_id: str):
        if not state.dismiss(request_id):
            raise HTTPException(status_code=404, detail="unknown teach request")
        return {"status": "dismissed"}

    @app.post("/teach")
    def teach(body: TeachBody):
        request = state.find_request(body.request_id)
        if request is None:
            raise HTTPException(status_code=404, detail="unknown teach request")
        if request.tagged is None:
            raise HTTPException(status_code=409, detail="request has no tagged sentence")
        tagged_questions = [state.tag(text) for text in body.interrogatives]
        try:
            pairs = learn_pair(
                request.tagged, tagged_questions, state.store.cfg, source="taught"
            )
        except (MalformedPairError, NoPredicateError) as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        outcome = state.insert_pairs(pairs)
        state.mark_taught(body.request_id)
        result = generate(request.tagged, state.store.snapshot(), state.store.cfg,
                          sentence_ref=request.sentence_ref)
        return {
            "learned": outcome["learned"],
            "duplicates": outcome["duplicates"],
            "qaps": [q.to_json() for q in result.qaps],
        }

    @app.post("/pairs")
    def pairs(body: PairsBody):
        try:
            decl = tagged_sentence_from_dict(body.decl)
            questions = [tagged_sentence_from_dict(q) for q in body.interrogatives]
        except SchemaError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        try:
            learned = learn_pair(decl, questions, state.store.cfg, source="taught")
        except (MalformedPairError, NoPredicateError) as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        return state.insert_pairs(learned)

    @app.get("/msdip")
    def msdip():
        pairs_view = [
            {
                "id": p.id,
                "source": p.source,
                "wh": pair_pronoun(p),
                "md": p.md.encoding(),
                "mi": p.mi.encoding(),
            }
            for p in state.store.pairs
        ]
        return {
            "config": {
                "r": state.store.cfg.r,
                "phrasal_merge": state.store.cfg.phrasal_merge,
            },
            "size": len(pairs_view),
            "pairs": pairs_view,
        }

    @app.post("/generate")
    def generate_endpoint(body: GenerateBody):
        ts = state.tag(normalize_text(body.text))
        result = generate(ts, state.store.snapshot(), state.store.cfg)
        queued = state.enqueue(result.teach_requests)
        return {
            "qaps": [q.to_json() for q in result.qaps],
            "teach_request": teach_request_to_json(queued[0]) if queued else None,
            "diagnostics": [
                {"stage": d.stage, "reason": d.reason} for d in result.diagnostics
            ],
        }

    if console_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=console_dir, html=True), name="console")

    return app


class _ServiceState:
    def __init__(self, msdip_path: str, queue_path: str | None, tagger: Tagger | None):
        self.msdip_path = msdip_path
        self.queue_path = queue_path
        self.tagger = tagger
        self.lock = threading.Lock()
        import os

        if os.path.exists(msdip_path):
            self.store = MSDIP.load(msdip_path)
        else:
            self.store = MSDIP()
            self.store.save(msdip_path)
        self.queue = load_queue(queue_path) if queue_path else []

    # -- tagging ------------------------------------------------------

    def tag(self, text: str) -> TaggedSentence:
        if self.tagger is None:
            raise HTTPException(
                status_code=503,
                detail="no tagging oracle configured; retry once one is available",
            )
        try:
            return self.tagger(text)
        except OracleError as exc:
            raise HTTPException(status_code=503, detail=str(exc))

    # -- store mutations ------------------------------------------------

    def insert_pairs(self, pairs) -> dict:
        """Insert under the single-writer rule; the store file is written
        before the in-memory store is swapped, so a failed write rolls back."""
        with self.lock:
            draft = self.store.clone()
            learned, duplicates = [], []
            for pair in pairs:
                if draft.insert(pair) == DUPLICATE:
                    duplicates.append(pair.id)
                else:
                    learned.append(pair.id)
            if learned:
                draft.save(self.msdip_path)
                self.store = draft
            return {"learned": learned, "duplicates": duplicates}

    # -- queue ----------------------------------------------------------

    def pending_requests(self) -> list[dict]:
        with self.lock:
            return [
                teach_request_to_json(tr)
                for tr in self.queue
                if tr.status == "pending"
            ]

    def find_request(self, request_id: str):
        with self.lock:
            return next((tr for tr in self.queue if tr.id == request_id), None)

    def enqueue(self, requests) -> list:
        if not requests:
            return []
        with self.lock:
            known = {tr.id for tr in self.queue}
            fresh = [tr for tr in requests if tr.id not in known]
            self.queue.extend(fresh)
            self._persist_queue()
            return requests

    def mark_taught(self, request_id: str) -> None:
        with self.lock:
            for tr in self.queue:
                if tr.id == request_id:
                    tr.status = "taught"
            self._persist_queue()

    def dismiss(self, request_id: str) -> bool:
        with self.lock:
            found = False
            for tr in self.queue:
                if tr.id == request_id:
                    tr.status = "dismissed"
                    found = True
            if found:
                self._persist_queue()
            return found

    def _persist_queue(self) -> None:
        if self.queue_path:
            write_queue(self.queue_path, self.queue)
