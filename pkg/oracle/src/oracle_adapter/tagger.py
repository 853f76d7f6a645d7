"""Rule-based English tagging: tokenization, POS, named entities, lemmas,
and a single-frame semantic-role labeling heuristic.

Output follows the tagged-sentence interchange format. The rules are
deterministic; the same text always yields the same document. Accuracy is
best-effort by design: downstream consumers review fixture taggings.
"""

import re

from .lexicon import (
    ADJECTIVES,
    ADVERBS,
    AUXILIARIES,
    BE_FORMS,
    CONJUNCTIONS,
    DETERMINERS,
    IRREGULAR_VERBS,
    MODALS,
    NUMBER_WORDS,
    ORGANIZATIONS,
    PERSON_NAMES,
    PLACE_PHRASES,
    PLACES,
    POSSESSIVE_PRONOUNS,
    PREPOSITIONS,
    PRONOUNS,
    TIME_NOUNS,
    VERB_LEMMAS,
    WH_PRONOUNS,
)

TAGGER_VERSION = "0.1.0"

_PUNCT = {".": ".", ",": ",", "?": ".", "!": ".", ";": ":", ":": ":"}
_ORDINAL = re.compile(r"^\d+(st|nd|rd|th)$")
_NUMBER = re.compile(r"^\d+([.,]\d+)?$")
_YEAR = re.compile(r"^\d{4}$")
_NP_POS = {"DT", "JJ", "CD", "NN", "NNS", "NNP", "NNPS", "PRP", "PRP$"}


class TagFailure(ValueError):
    """The text cannot be tagged (empty or unusable)."""


def tokenize(text: str) -> list[str]:
    out = []
    for raw in text.split():
        head = raw
        tail = []
        while head and head[-1] in _PUNCT and not _ORDINAL.match(head):
            tail.append(head[-1])
            head = head[:-1]
        if head:
            out.append(head)
        out.extend(reversed(tail))
    return out


def _verb_lemma(lower: str) -> str | None:
    """Lemma when the word is a recognizable verb form, else None."""
    if lower in AUXILIARIES:
        return AUXILIARIES[lower][1]
    if lower in IRREGULAR_VERBS:
        return IRREGULAR_VERBS[lower]
    if lower in VERB_LEMMAS:
        return lower
    if lower.endswith("ies") and lower[:-3] + "y" in VERB_LEMMAS:
        return lower[:-3] + "y"
    if lower.endswith("es") and lower[:-2] in VERB_LEMMAS:
        return lower[:-2]
    if lower.endswith("s") and lower[:-1] in VERB_LEMMAS:
        return lower[:-1]
    if lower.endswith("ied") and lower[:-3] + "y" in VERB_LEMMAS:
        return lower[:-3] + "y"
    if lower.endswith("ed"):
        stem = lower[:-2]
        if stem in VERB_LEMMAS:
            return stem
        if stem + "e" in VERB_LEMMAS:
            return stem + "e"
        if len(stem) > 2 and stem[-1] == stem[-2] and stem[:-1] in VERB_LEMMAS:
            return stem[:-1]
    if lower.endswith("ing"):
        stem = lower[:-3]
        if stem in VERB_LEMMAS:
            return stem
        if stem + "e" in VERB_LEMMAS:
            return stem + "e"
        if len(stem) > 2 and stem[-1] == stem[-2] and stem[:-1] in VERB_LEMMAS:
            return stem[:-1]
    return None


def _verb_pos(lower: str) -> str | None:
    if lower in AUXILIARIES:
        return AUXILIARIES[lower][0]
    if lower in IRREGULAR_VERBS:
        return "VBD"
    if lower in VERB_LEMMAS:
        return "VB?"  # base form; VB vs VBP resolved in context
    lemma = _verb_lemma(lower)
    if lemma is None:
        return None
    if lower.endswith("ing"):
        return "VBG"
    if lower.endswith(("ed", "d")) and lower != lemma:
        return "VBD"
    if lower.endswith("s"):
        return "VBZ"
    return "VB?"


def _noun_lemma(lower: str) -> str:
    if lower.endswith("ies") and len(lower) > 3:
        return lower[:-3] + "y"
    if lower.endswith("ses") or lower.endswith("xes") or lower.endswith("zes") \
            or lower.endswith("ches") or lower.endswith("shes"):
        return lower[:-2]
    if lower.endswith("s") and not lower.endswith("ss"):
        return lower[:-1]
    return lower


def _pos_tags(words: list[str]) -> list[str]:
    tags: list[str] = []
    for i, word in enumerate(words):
        lower = word.lower()
        if word in _PUNCT:
            tags.append(_PUNCT[word])
        elif _ORDINAL.match(lower):
            tags.append("JJ")
        elif _NUMBER.match(lower) or lower in NUMBER_WORDS:
            tags.append("CD")
        elif lower in AUXILIARIES:
            tags.append(AUXILIARIES[lower][0])
        elif lower in MODALS:
            tags.append("MD")
        elif lower in DETERMINERS:
            tags.append("DT")
        elif lower in CONJUNCTIONS:
            tags.append("CC")
        elif lower in PRONOUNS:
            tags.append("PRP")
        elif lower in POSSESSIVE_PRONOUNS:
            tags.append("PRP$")
        elif lower in WH_PRONOUNS:
            tags.append(WH_PRONOUNS[lower])
        elif lower in PREPOSITIONS:
            tags.append("IN")
        elif lower in ADVERBS or (lower.endswith("ly") and len(lower) > 3):
            tags.append("RB")
        elif _verb_pos(lower) is not None and lower not in ADJECTIVES:
            tags.append(_verb_pos(lower))
        elif lower in ADJECTIVES:
            tags.append("JJ")
        elif lower in PERSON_NAMES or lower in PLACES or lower in ORGANIZATIONS:
            tags.append("NNP")
        elif word[0].isupper() and (i > 0 or lower not in VERB_LEMMAS):
            tags.append("NNP")
        elif lower.endswith("s") and not lower.endswith("ss"):
            tags.append("NNS")
        else:
            tags.append("NN")

    # context fixes
    for i, tag in enumerate(tags):
        lower = words[i].lower()
        if (
            tag.startswith("VB")
            and lower not in AUXILIARIES
            and lower not in IRREGULAR_VERBS
            and i > 0
            and tags[i - 1] in ("DT", "JJ", "CD", "PRP$")
        ):
            # an ambiguous verb form right after a determiner reads as a noun
            tags[i] = "NNS" if lower.endswith("s") and not lower.endswith("ss") else "NN"
        elif tag == "VB?":
            has_support = any(
                words[j].lower() in ("did", "does", "do") or tags[j] == "MD"
                or (words[j].lower() == "to" and j == i - 1)
                for j in range(i)
            )
            tags[i] = "VB" if has_support else "VBP"
        elif tag == "VBD":
            prev = next(
                (j for j in range(i - 1, -1, -1) if tags[j] not in ("RB", ",")), None
            )
            if prev is not None and words[prev].lower() in BE_FORMS | {"has", "have", "had"}:
                tags[i] = "VBN"
    return tags


def _ne_tags(words: list[str], tags: list[str]) -> list[str | None]:
    nes: list[str | None] = [None] * len(words)
    lowers = [w.lower() for w in words]
    for phrase in PLACE_PHRASES:
        for i in range(len(words) - len(phrase) + 1):
            if tuple(lowers[i:i + len(phrase)]) == phrase:
                for j in range(i, i + len(phrase)):
                    nes[j] = "LOC"
                    tags[j] = "NNP"
    for i, lower in enumerate(lowers):
        if nes[i] is not None:
            continue
        if tags[i] in ("NNP", "NNPS"):
            if lower in PERSON_NAMES:
                nes[i] = "PER"
            elif lower in PLACES:
                nes[i] = "LOC"
            elif lower in ORGANIZATIONS:
                nes[i] = "ORG"
        elif tags[i] == "CD" and _YEAR.match(lower):
            nes[i] = "DATE"
    # an untagged proper noun adjacent to a person name is part of the name
    for i, tag in enumerate(tags):
        if tag == "NNP" and nes[i] is None:
            if (i > 0 and nes[i - 1] == "PER") or (
                i + 1 < len(words) and nes[i + 1] == "PER"
            ):
                nes[i] = "PER"
    return nes


def _lemmas(words: list[str], tags: list[str]) -> list[str]:
    out = []
    for word, tag in zip(words, tags):
        lower = word.lower()
        if tag.startswith("VB"):
            out.append(_verb_lemma(lower) or lower)
        elif tag in ("NNS", "NNPS"):
            out.append(_noun_lemma(lower))
        else:
            out.append(lower)
    return out


_TEMPORAL_LEAD = {"last", "next", "this", "every"}
_SINGLE_TEMPORAL = {"yesterday", "today", "tomorrow"}


def _np_span(words, tags, start):
    """Contiguous noun-phrase tokens from start (inclusive), stopping before
    a temporal phrase so "to Boston last week" splits into two chunks."""
    end = start
    while end < len(words) and tags[end] in _NP_POS:
        lower = words[end].lower()
        if lower in _SINGLE_TEMPORAL or (
            lower in _TEMPORAL_LEAD
            and end + 1 < len(words)
            and words[end + 1].lower() in TIME_NOUNS
        ):
            break
        end += 1
    return end


def _chunk_is_temporal(words, tags, nes, span):
    return any(
        words[i].lower() in TIME_NOUNS or nes[i] in ("DATE", "TIME")
        for i in span
    )


def _chunk_is_location(nes, span):
    return any(nes[i] == "LOC" for i in span)


def _srl(words, tags, nes, lemmas):
    n = len(words)
    verb_indices = [i for i, t in enumerate(tags) if t.startswith("VB")]
    if not verb_indices:
        return None
    aux_lemmas = {"be", "do", "have"}
    content_verbs = [i for i in verb_indices if lemmas[i] not in aux_lemmas]
    main = content_verbs[-1] if content_verbs else verb_indices[-1]
    copular = lemmas[main] == "be"
    passive = tags[main] == "VBN" and any(
        lemmas[i] == "be" for i in verb_indices if i < main
    )

    labels: list[str | None] = [None] * n

    # interrogative pronouns at the start
    wh_end = 0
    if tags[0] in ("WP", "WP$", "WRB", "WDT"):
        lower = words[0].lower()
        wh_end = 1
        if lower == "how" and n > 1 and words[1].lower() in ("many", "much"):
            labels[0] = labels[1] = "ARGM-EXT"
            wh_end = 2
        elif lower == "where":
            labels[0] = "ARGM-LOC"
        elif lower == "when":
            labels[0] = "ARGM-TMP"
        elif lower == "why":
            labels[0] = "ARGM-CAU"
        else:
            subject_question = main == 1
            labels[0] = "ARG0" if subject_question else "ARG1"

    subject_label = "ARG1" if (copular or passive) else "ARG0"

    for i in verb_indices:
        if lemmas[i] in aux_lemmas or i == main:
            labels[i] = "V"
    for i in range(n):
        if labels[i] is not None or i >= main:
            continue
        lower = words[i].lower()
        if tags[i] == "MD":
            labels[i] = "ARGM-MOD"
        elif lower in ("not", "never"):
            labels[i] = "ARGM-NEG"
        elif tags[i] == "RB" or (lower.endswith("ly") and tags[i] == "RB"):
            labels[i] = "ARGM-MNR"
        elif tags[i] in _NP_POS and i >= wh_end:
            labels[i] = subject_label

    # post-verb chunks
    first_argument_done = any(
        lab == ("ARG2" if copular else "ARG1") for lab in labels[:main]
    )
    i = main + 1
    while i < n:
        tag = tags[i]
        lower = words[i].lower()
        if tag in (".", ",", ":", "``", "''"):
            i += 1
            continue
        if lower == "because":
            end = n
            while end > i and tags[end - 1] in (".", ",", ":"):
                end -= 1
            for j in range(i, end):
                labels[j] = "ARGM-CAU"
            break
        if lower in _SINGLE_TEMPORAL:
            labels[i] = "ARGM-TMP"
            i += 1
            continue
        if lower in _TEMPORAL_LEAD and i + 1 < n and words[i + 1].lower() in TIME_NOUNS:
            labels[i] = labels[i + 1] = "ARGM-TMP"
            i += 2
            continue
        if tag == "IN":
            np_end = _np_span(words, tags, i + 1)
            span = range(i, np_end)
            if lower == "by" and passive:
                label = "ARG0"
            elif _chunk_is_temporal(words, tags, nes, span):
                label = "ARGM-TMP"
            elif copular:
                label = "ARG2"
            elif not first_argument_done:
                label = "ARG1"
                first_argument_done = True
            elif _chunk_is_location(nes, span):
                label = "ARGM-LOC"
            else:
                label = "ARG2"
            for j in span:
                labels[j] = label
            i = max(np_end, i + 1)
            continue
        if tag in _NP_POS:
            np_end = _np_span(words, tags, i)
            span = range(i, np_end)
            if _chunk_is_temporal(words, tags, nes, span):
                label = "ARGM-TMP"
            elif copular:
                label = "ARG2"
            elif not first_argument_done:
                label = "ARG1"
                first_argument_done = True
            else:
                label = "ARG2"
            for j in span:
                labels[j] = label
            i = np_end
            continue
        if tag == "RB":
            labels[i] = "ARGM-NEG" if lower in ("not", "never") else "ARGM-MNR"
            i += 1
            continue
        if tag.startswith("VB"):
            labels[i] = "V" if i == main else labels[i]
            i += 1
            continue
        i += 1

    return {"predicate": main, "labels": labels}


def tag(text: str) -> dict:
    """Tag one sentence into the interchange document."""
    if not text or not text.strip():
        raise TagFailure("empty text")
    words = tokenize(text)
    if not words:
        raise TagFailure("no tokens")
    tags = _pos_tags(words)
    nes = _ne_tags(words, tags)
    lemmas = _lemmas(words, tags)
    frame = _srl(words, tags, nes, lemmas)
    return {
        "text": text,
        "tokens": [
            {"i": i, "text": w, "lemma": lemmas[i], "pos": tags[i], "ne": nes[i]}
            for i, w in enumerate(words)
        ],
        "frames": [frame] if frame else [],
        "tagger_version": TAGGER_VERSION,
    }
