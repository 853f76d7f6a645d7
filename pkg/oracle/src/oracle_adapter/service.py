"""Tagging microservice: POST /tag wraps the rule-based tagger."""

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from .tagger import TAGGER_VERSION, TagFailure, tag


class TagBody(BaseModel):
    text: str = Field(min_length=0)


def create_app() -> FastAPI:
    app = FastAPI(title="oracle adapter")

    @app.post("/tag")
    def tag_endpoint(body: TagBody):
        try:
            return tag(body.text)
        except TagFailure as exc:
            raise HTTPException(status_code=422, detail=str(exc))

    @app.get("/health")
    def health():
        return {"status": "ok", "tagger_version": TAGGER_VERSION}

    return app
