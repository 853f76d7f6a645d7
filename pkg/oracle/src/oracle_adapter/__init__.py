"""Rule-based English tagging adapter emitting the interchange format."""

from .tagger import TAGGER_VERSION, TagFailure, tag, tokenize

__all__ = ["TAGGER_VERSION", "TagFailure", "tag", "tokenize"]
