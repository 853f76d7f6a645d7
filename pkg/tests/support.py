"""Compact construction of hand-tagged sentences for tests and fixtures.

A token spec is (text, pos, ne, sr) or (text, pos, ne, sr, lemma); the lemma
defaults to the lowercased text. The default frame is derived from the sr
column with the last V-labeled token as the predicate.
"""

from metaseq.model import Frame, TaggedSentence, Token


def tagged(text, *token_specs, frames=None, predicate=None):
    tokens = []
    labels = []
    for i, spec in enumerate(token_specs):
        word, pos, ne, sr = spec[:4]
        lemma = spec[4] if len(spec) > 4 else word.lower()
        tokens.append(Token(index=i, text=word, lemma=lemma, pos=pos, ne=ne))
        labels.append(sr)
    if frames is None:
        v_indices = [i for i, sr in enumerate(labels) if sr in ("V", "B-V")]
        if v_indices:
            pred = predicate if predicate is not None else v_indices[-1]
            frames = [Frame(predicate_index=pred, labels=tuple(labels))]
        else:
            frames = []
    else:
        built = []
        for fr in frames:
            fr_labels = tuple(fr.get(i) for i in range(len(tokens)))
            v_idx = [i for i, lab in enumerate(fr_labels) if lab in ("V", "B-V")]
            built.append(Frame(predicate_index=v_idx[-1], labels=fr_labels))
        frames = built
    return TaggedSentence(text=text, tokens=tuple(tokens), frames=tuple(frames))


# Frequently used fixture sentences.

def john_traveled_wordlevel():
    return tagged(
        "John traveled to Boston last week.",
        ("John", "NNP", "PER", "ARG0"),
        ("traveled", "VBD", None, "V", "travel"),
        ("to", "IN", None, "ARG1"),
        ("Boston", "NNP", "LOC", "ARG1"),
        ("last", "NN", None, "ARGM-TMP"),
        ("week", "NN", None, "ARGM-TMP"),
        (".", ".", None, None),
    )


def where_did_john_wordlevel():
    return tagged(
        "Where did John travel to last week?",
        ("Where", "WRB", None, "ARGM-LOC"),
        ("did", "VBD", None, "V", "do"),
        ("John", "NNP", "PER", "ARG0"),
        ("travel", "VB", None, "V"),
        ("to", "IN", None, "ARG1"),
        ("last", "NN", None, "ARGM-TMP"),
        ("week", "NN", None, "ARGM-TMP"),
        ("?", ".", None, None),
        predicate=3,
    )


def mary_flew_wordlevel():
    return tagged(
        "Mary flew to London last month.",
        ("Mary", "NNP", "PER", "ARG0"),
        ("flew", "VBD", None, "V", "fly"),
        ("to", "IN", None, "ARG1"),
        ("London", "NNP", "LOC", "ARG1"),
        ("last", "NN", None, "ARGM-TMP"),
        ("month", "NN", None, "ARGM-TMP"),
        (".", ".", None, None),
    )


def john_traveled_joined():
    return tagged(
        "John traveled to Boston last week.",
        ("John", "NNP", "PER", "ARG0"),
        ("traveled to", "VBD", None, "V", "travel to"),
        ("Boston", "NNP", "LOC", "ARG1"),
        ("last", "NN", None, "ARGM-TMP"),
        ("week", "NN", None, "ARGM-TMP"),
        (".", ".", None, None),
    )


def where_did_john_joined():
    return tagged(
        "Where did John travel to last week?",
        ("Where", "WRB", None, "ARGM-LOC"),
        ("did", "VBD", None, "V", "do"),
        ("John", "NNP", "PER", "ARG0"),
        ("travel to", "VB", None, "V", "travel to"),
        ("last", "NN", None, "ARGM-TMP"),
        ("week", "NN", None, "ARGM-TMP"),
        ("?", ".", None, None),
        predicate=3,
    )


def mary_flew_joined():
    return tagged(
        "Mary flew to London last month.",
        ("Mary", "NNP", "PER", "ARG0"),
        ("flew to", "VBD", None, "V", "fly to"),
        ("London", "NNP", "LOC", "ARG1"),
        ("last", "NN", None, "ARGM-TMP"),
        ("month", "NN", None, "ARGM-TMP"),
        (".", ".", None, None),
    )


def lincoln_sentence():
    return tagged(
        "Abraham Lincoln was the 16th president of the United States.",
        ("Abraham", "NNP", "PER", "ARG1"),
        ("Lincoln", "NNP", "PER", "ARG1"),
        ("was", "VBZ", None, "V", "be"),
        ("the", "DT", None, "ARG2"),
        ("16th", "JJ", None, "ARG2"),
        ("president", "NN", None, "ARG2"),
        ("of", "IN", None, "ARG2"),
        ("the", "DT", None, "ARG2"),
        ("United", "NNP", "LOC", "ARG2"),
        ("States", "NNP", "LOC", "ARG2"),
        (".", ".", None, None),
    )
