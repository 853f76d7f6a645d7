"""Teach-queue persistence: JSON-lines records of pending teach requests."""

import json
import os
import tempfile

from .generator import TeachRequest
from .model import (
    DECLARATIVE,
    MetaSequence,
    ssu_from_json,
    ssu_to_json,
    tagged_sentence_from_dict,
    tagged_sentence_to_dict,
)


def teach_request_to_json(tr: TeachRequest) -> dict:
    return {
        "id": tr.id,
        "sentence_ref": tr.sentence_ref,
        "text": tr.text,
        "meta_sequence": [ssu_to_json(u) for u in tr.meta_sequence.ssus],
        "encoding": tr.meta_sequence.encoding(),
        "near_misses": tr.near_misses,
        "status": tr.status,
        "tagged": tagged_sentence_to_dict(tr.tagged) if tr.tagged else None,
    }


def teach_request_from_json(obj: dict) -> TeachRequest:
    ms = MetaSequence(
        tuple(ssu_from_json(u) for u in obj["meta_sequence"]), DECLARATIVE
    )
    tagged = tagged_sentence_from_dict(obj["tagged"]) if obj.get("tagged") else None
    return TeachRequest(
        id=obj["id"],
        sentence_ref=obj["sentence_ref"],
        text=obj["text"],
        meta_sequence=ms,
        near_misses=list(obj.get("near_misses", [])),
        status=obj.get("status", "pending"),
        tagged=tagged,
    )


def append_requests(path: str, requests: list[TeachRequest]) -> None:
    with open(path, "a", encoding="utf-8") as fh:
        for tr in requests:
            fh.write(json.dumps(teach_request_to_json(tr), ensure_ascii=False) + "\n")


def load_queue(path: str) -> list[TeachRequest]:
    if not os.path.exists(path):
        return []
    out = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                out.append(teach_request_from_json(json.loads(line)))
    return out


def write_queue(path: str, requests: list[TeachRequest]) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            for tr in requests:
                fh.write(json.dumps(teach_request_to_json(tr), ensure_ascii=False) + "\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
