"""Meta-sequence pattern learning and question-answer generation."""

from .model import (
    EngineConfig,
    MetaSequence,
    SSU,
    TaggedSentence,
    Token,
    Frame,
    make_meta_sequence,
    ssu_matches,
)
from .learner import MDIPair, MSDIP, learn_pair
from .generator import QAPair, TeachRequest, generate

__version__ = "0.1.0"

__all__ = [
    "EngineConfig",
    "Frame",
    "MDIPair",
    "MSDIP",
    "MetaSequence",
    "QAPair",
    "SSU",
    "TaggedSentence",
    "TeachRequest",
    "Token",
    "__version__",
    "generate",
    "learn_pair",
    "make_meta_sequence",
    "ssu_matches",
]
