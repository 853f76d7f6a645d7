#!/usr/bin/env python3
"""Build the golden-corpus fixture files.

Seed training pairs and input sentences are hand-tagged here; the expected
question/answer lines were derived by hand from the merging, matching, and
set-equation rules before the pipeline ran, and are embedded literally.
Only pair ids are filled in mechanically from the seed patterns.
"""

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from support import tagged  # noqa: E402

from metaseq.learner import MSDIP, learn_pair  # noqa: E402
from metaseq.model import EngineConfig, tagged_sentence_to_dict  # noqa: E402

OUT_DIR = Path(__file__).resolve().parent.parent / "tests" / "data" / "golden"

D = None  # no named entity


def S(text, *specs, predicate=None):
    return tagged(text, *specs, predicate=predicate)


SEEDS = [
    (
        "P1",
        S(
            "John traveled to Boston last week.",
            ("John", "NNP", "PER", "ARG0"),
            ("traveled", "VBD", D, "V", "travel"),
            ("to", "IN", D, "ARG1"),
            ("Boston", "NNP", "LOC", "ARG1"),
            ("last", "NN", D, "ARGM-TMP"),
            ("week", "NN", D, "ARGM-TMP"),
            (".", ".", D, None),
        ),
        [
            S(
                "Where did John travel to last week?",
                ("Where", "WRB", D, "ARGM-LOC"),
                ("did", "VBD", D, "V", "do"),
                ("John", "NNP", "PER", "ARG0"),
                ("travel", "VB", D, "V"),
                ("to", "IN", D, "ARG1"),
                ("last", "NN", D, "ARGM-TMP"),
                ("week", "NN", D, "ARGM-TMP"),
                ("?", ".", D, None),
            ),
        ],
    ),
    (
        "P2",
        S(
            "Clara sold the old piano.",
            ("Clara", "NNP", "PER", "ARG0"),
            ("sold", "VBD", D, "V", "sell"),
            ("the", "DT", D, "ARG1"),
            ("old", "JJ", D, "ARG1"),
            ("piano", "NN", D, "ARG1"),
            (".", ".", D, None),
        ),
        [
            S(
                "Who sold the old piano?",
                ("Who", "WP", D, "ARG0"),
                ("sold", "VBD", D, "V", "sell"),
                ("the", "DT", D, "ARG1"),
                ("old", "JJ", D, "ARG1"),
                ("piano", "NN", D, "ARG1"),
                ("?", ".", D, None),
            ),
            S(
                "What did Clara sell?",
                ("What", "WP", D, "ARG1"),
                ("did", "VBD", D, "V", "do"),
                ("Clara", "NNP", "PER", "ARG0"),
                ("sell", "VB", D, "V"),
                ("?", ".", D, None),
            ),
        ],
    ),
    (
        "P3",
        S(
            "Liam visited the museum yesterday.",
            ("Liam", "NNP", "PER", "ARG0"),
            ("visited", "VBD", D, "V", "visit"),
            ("the", "DT", D, "ARG1"),
            ("museum", "NN", D, "ARG1"),
            ("yesterday", "NN", D, "ARGM-TMP"),
            (".", ".", D, None),
        ),
        [
            S(
                "When did Liam visit the museum?",
                ("When", "WRB", D, "ARGM-TMP"),
                ("did", "VBD", D, "V", "do"),
                ("Liam", "NNP", "PER", "ARG0"),
                ("visit", "VB", D, "V"),
                ("the", "DT", D, "ARG1"),
                ("museum", "NN", D, "ARG1"),
                ("?", ".", D, None),
            ),
            S(
                "Who visited the museum yesterday?",
                ("Who", "WP", D, "ARG0"),
                ("visited", "VBD", D, "V", "visit"),
                ("the", "DT", D, "ARG1"),
                ("museum", "NN", D, "ARG1"),
                ("yesterday", "NN", D, "ARGM-TMP"),
                ("?", ".", D, None),
            ),
        ],
    ),
    (
        "P4",
        S(
            "Maya canceled the picnic because the rain fell.",
            ("Maya", "NNP", "PER", "ARG0"),
            ("canceled", "VBD", D, "V", "cancel"),
            ("the", "DT", D, "ARG1"),
            ("picnic", "NN", D, "ARG1"),
            ("because", "IN", D, "ARGM-CAU"),
            ("the", "DT", D, "ARGM-CAU"),
            ("rain", "NN", D, "ARGM-CAU"),
            ("fell", "VBD", D, "ARGM-CAU", "fall"),
            (".", ".", D, None),
            predicate=1,
        ),
        [
            S(
                "Why did Maya cancel the picnic?",
                ("Why", "WRB", D, "ARGM-CAU"),
                ("did", "VBD", D, "V", "do"),
                ("Maya", "NNP", "PER", "ARG0"),
                ("cancel", "VB", D, "V"),
                ("the", "DT", D, "ARG1"),
                ("picnic", "NN", D, "ARG1"),
                ("?", ".", D, None),
            ),
        ],
    ),
    (
        "P5",
        S(
            "Elena is the mayor of the village.",
            ("Elena", "NNP", "PER", "ARG1"),
            ("is", "VBZ", D, "V", "be"),
            ("the", "DT", D, "ARG2"),
            ("mayor", "NN", D, "ARG2"),
            ("of", "IN", D, "ARG2"),
            ("the", "DT", D, "ARG2"),
            ("village", "NN", D, "ARG2"),
            (".", ".", D, None),
        ),
        [
            S(
                "Who is the mayor of the village?",
                ("Who", "WP", D, "ARG1"),
                ("is", "VBZ", D, "V", "be"),
                ("the", "DT", D, "ARG2"),
                ("mayor", "NN", D, "ARG2"),
                ("of", "IN", D, "ARG2"),
                ("the", "DT", D, "ARG2"),
                ("village", "NN", D, "ARG2"),
                ("?", ".", D, None),
            ),
            S(
                "What is Elena?",
                ("What", "WP", D, "ARG2"),
                ("is", "VBZ", D, "V", "be"),
                ("Elena", "NNP", "PER", "ARG1"),
                ("?", ".", D, None),
            ),
        ],
    ),
    (
        "P6",
        S(
            "Rosa owns a small bakery.",
            ("Rosa", "NNP", "PER", "ARG0"),
            ("owns", "VBZ", D, "V", "own"),
            ("a", "DT", D, "ARG1"),
            ("small", "JJ", D, "ARG1"),
            ("bakery", "NN", D, "ARG1"),
            (".", ".", D, None),
        ),
        [
            S(
                "What does Rosa own?",
                ("What", "WP", D, "ARG1"),
                ("does", "VBZ", D, "V", "do"),
                ("Rosa", "NNP", "PER", "ARG0"),
                ("own", "VB", D, "V"),
                ("?", ".", D, None),
            ),
        ],
    ),
    (
        "P7",
        S(
            "The brothers own a small farm.",
            ("The", "DT", D, "ARG0"),
            ("brothers", "NNS", D, "ARG0", "brother"),
            ("own", "VBP", D, "V"),
            ("a", "DT", D, "ARG1"),
            ("small", "JJ", D, "ARG1"),
            ("farm", "NN", D, "ARG1"),
            (".", ".", D, None),
        ),
        [
            S(
                "What do the brothers own?",
                ("What", "WP", D, "ARG1"),
                ("do", "VBP", D, "V"),
                ("the", "DT", D, "ARG0"),
                ("brothers", "NNS", D, "ARG0", "brother"),
                ("own", "VB", D, "V"),
                ("?", ".", D, None),
            ),
        ],
    ),
    (
        "P8",
        S(
            "The shelter rescued nine puppies.",
            ("The", "DT", D, "ARG0"),
            ("shelter", "NN", D, "ARG0"),
            ("rescued", "VBD", D, "V", "rescue"),
            ("nine", "CD", D, "ARG1"),
            ("puppies", "NNS", D, "ARG1", "puppy"),
            (".", ".", D, None),
        ),
        [
            S(
                "How many did the shelter rescue?",
                ("How", "WRB", D, "ARGM-EXT"),
                ("many", "JJ", D, "ARGM-EXT"),
                ("did", "VBD", D, "V", "do"),
                ("the", "DT", D, "ARG0"),
                ("shelter", "NN", D, "ARG0"),
                ("rescue", "VB", D, "V"),
                ("?", ".", D, None),
            ),
        ],
    ),
    (
        "P9",
        S(
            "Dana met Aaron in Oslo.",
            ("Dana", "NNP", "PER", "ARG0"),
            ("met", "VBD", D, "V", "meet"),
            ("Aaron", "NNP", "PER", "ARG1"),
            ("in", "IN", D, "ARGM-LOC"),
            ("Oslo", "NNP", "LOC", "ARGM-LOC"),
            (".", ".", D, None),
        ),
        [
            S(
                "Who met Aaron in Oslo?",
                ("Who", "WP", D, "ARG0"),
                ("met", "VBD", D, "V", "meet"),
                ("Aaron", "NNP", "PER", "ARG1"),
                ("in", "IN", D, "ARGM-LOC"),
                ("Oslo", "NNP", "LOC", "ARGM-LOC"),
                ("?", ".", D, None),
            ),
            S(
                "Where did Dana meet Aaron?",
                ("Where", "WRB", D, "ARGM-LOC"),
                ("did", "VBD", D, "V", "do"),
                ("Dana", "NNP", "PER", "ARG0"),
                ("meet", "VB", D, "V"),
                ("Aaron", "NNP", "PER", "ARG1"),
                ("?", ".", D, None),
            ),
        ],
    ),
    (
        "P10",
        S(
            "Nadia is in Lisbon.",
            ("Nadia", "NNP", "PER", "ARG1"),
            ("is", "VBZ", D, "V", "be"),
            ("in", "IN", D, "ARG2"),
            ("Lisbon", "NNP", "LOC", "ARG2"),
            (".", ".", D, None),
        ),
        [
            S(
                "Where is Nadia?",
                ("Where", "WRB", D, "ARGM-LOC"),
                ("is", "VBZ", D, "V", "be"),
                ("Nadia", "NNP", "PER", "ARG1"),
                ("?", ".", D, None),
            ),
        ],
    ),
    (
        "P11",
        S(
            "Iris can visit the harbor.",
            ("Iris", "NNP", "PER", "ARG0"),
            ("can", "MD", D, "ARGM-MOD"),
            ("visit", "VB", D, "V"),
            ("the", "DT", D, "ARG1"),
            ("harbor", "NN", D, "ARG1"),
            (".", ".", D, None),
        ),
        [
            S(
                "What can Iris visit?",
                ("What", "WP", D, "ARG1"),
                ("can", "MD", D, "ARGM-MOD"),
                ("Iris", "NNP", "PER", "ARG0"),
                ("visit", "VB", D, "V"),
                ("?", ".", D, None),
            ),
        ],
    ),
    (
        "P12",
        S(
            "Owen did not sign the contract.",
            ("Owen", "NNP", "PER", "ARG0"),
            ("did", "VBD", D, "V", "do"),
            ("not", "RB", D, "ARGM-NEG"),
            ("sign", "VB", D, "V"),
            ("the", "DT", D, "ARG1"),
            ("contract", "NN", D, "ARG1"),
            (".", ".", D, None),
        ),
        [
            S(
                "What did Owen not sign?",
                ("What", "WP", D, "ARG1"),
                ("did", "VBD", D, "V", "do"),
                ("Owen", "NNP", "PER", "ARG0"),
                ("not", "RB", D, "ARGM-NEG"),
                ("sign", "VB", D, "V"),
                ("?", ".", D, None),
            ),
        ],
    ),
    (
        "P13",
        S(
            "Tomas lives in Berlin.",
            ("Tomas", "NNP", "PER", "ARG0"),
            ("lives", "VBZ", D, "V", "live"),
            ("in", "IN", D, "ARG1"),
            ("Berlin", "NNP", "LOC", "ARG1"),
            (".", ".", D, None),
        ),
        [
            S(
                "Where does Tomas live?",
                ("Where", "WRB", D, "ARGM-LOC"),
                ("does", "VBZ", D, "V", "do"),
                ("Tomas", "NNP", "PER", "ARG0"),
                ("live", "VB", D, "V"),
                ("?", ".", D, None),
            ),
        ],
    ),
]


# (text, token specs, expected QAPs as (seed_name, mi_index, question, answer, wh, match))
INPUTS = [
    (
        S(
            "Mary flew to London last month.",
            ("Mary", "NNP", "PER", "ARG0"),
            ("flew", "VBD", D, "V", "fly"),
            ("to", "IN", D, "ARG1"),
            ("London", "NNP", "LOC", "ARG1"),
            ("last", "NN", D, "ARGM-TMP"),
            ("month", "NN", D, "ARGM-TMP"),
            (".", ".", D, None),
        ),
        [("P1", 0, "Where did Mary fly to last month?", "London", "Where", "perfect")],
    ),
    (
        S(
            "Victor sailed to Athens last summer.",
            ("Victor", "NNP", "PER", "ARG0"),
            ("sailed", "VBD", D, "V", "sail"),
            ("to", "IN", D, "ARG1"),
            ("Athens", "NNP", "LOC", "ARG1"),
            ("last", "NN", D, "ARGM-TMP"),
            ("summer", "NN", D, "ARGM-TMP"),
            (".", ".", D, None),
        ),
        [("P1", 0, "Where did Victor sail to last summer?", "Athens", "Where", "perfect")],
    ),
    (
        S(
            "Nora repaired the wooden fence.",
            ("Nora", "NNP", "PER", "ARG0"),
            ("repaired", "VBD", D, "V", "repair"),
            ("the", "DT", D, "ARG1"),
            ("wooden", "JJ", D, "ARG1"),
            ("fence", "NN", D, "ARG1"),
            (".", ".", D, None),
        ),
        [
            ("P2", 0, "Who repaired the wooden fence?", "Nora", "Who", "perfect"),
            ("P2", 1, "What did Nora repair?", "the wooden fence", "What", "perfect"),
        ],
    ),
    (
        S(
            "Nora repaired the wooden fence last spring.",
            ("Nora", "NNP", "PER", "ARG0"),
            ("repaired", "VBD", D, "V", "repair"),
            ("the", "DT", D, "ARG1"),
            ("wooden", "JJ", D, "ARG1"),
            ("fence", "NN", D, "ARG1"),
            ("last", "NN", D, "ARGM-TMP"),
            ("spring", "NN", D, "ARGM-TMP"),
            (".", ".", D, None),
        ),
        [
            ("P3", 0, "When did Nora repair the wooden fence?", "last spring", "When", "perfect"),
            ("P3", 1, "Who repaired the wooden fence last spring?", "Nora", "Who", "perfect"),
        ],
    ),
    (
        S(
            "Petra toured the castle yesterday.",
            ("Petra", "NNP", "PER", "ARG0"),
            ("toured", "VBD", D, "V", "tour"),
            ("the", "DT", D, "ARG1"),
            ("castle", "NN", D, "ARG1"),
            ("yesterday", "NN", D, "ARGM-TMP"),
            (".", ".", D, None),
        ),
        [
            ("P3", 0, "When did Petra tour the castle?", "yesterday", "When", "perfect"),
            ("P3", 1, "Who toured the castle yesterday?", "Petra", "Who", "perfect"),
        ],
    ),
    (
        S(
            "Oscar postponed the journey because the storm came.",
            ("Oscar", "NNP", "PER", "ARG0"),
            ("postponed", "VBD", D, "V", "postpone"),
            ("the", "DT", D, "ARG1"),
            ("journey", "NN", D, "ARG1"),
            ("because", "IN", D, "ARGM-CAU"),
            ("the", "DT", D, "ARGM-CAU"),
            ("storm", "NN", D, "ARGM-CAU"),
            ("came", "VBD", D, "ARGM-CAU", "come"),
            (".", ".", D, None),
            predicate=1,
        ),
        [
            ("P4", 0, "Why did Oscar postpone the journey?",
             "because the storm came", "Why", "perfect"),
        ],
    ),
    (
        S(
            "Victor is the captain of the team.",
            ("Victor", "NNP", "PER", "ARG1"),
            ("is", "VBZ", D, "V", "be"),
            ("the", "DT", D, "ARG2"),
            ("captain", "NN", D, "ARG2"),
            ("of", "IN", D, "ARG2"),
            ("the", "DT", D, "ARG2"),
            ("team", "NN", D, "ARG2"),
            (".", ".", D, None),
        ),
        [
            ("P5", 0, "Who is the captain of the team?", "Victor", "Who", "perfect"),
            ("P5", 1, "What is Victor?", "the captain of the team", "What", "perfect"),
        ],
    ),
    (
        S(
            "Felix runs a busy cafe.",
            ("Felix", "NNP", "PER", "ARG0"),
            ("runs", "VBZ", D, "V", "run"),
            ("a", "DT", D, "ARG1"),
            ("busy", "JJ", D, "ARG1"),
            ("cafe", "NN", D, "ARG1"),
            (".", ".", D, None),
        ),
        [("P6", 0, "What does Felix run?", "a busy cafe", "What", "perfect")],
    ),
    (
        S(
            "The sisters manage a tiny hotel.",
            ("The", "DT", D, "ARG0"),
            ("sisters", "NNS", D, "ARG0", "sister"),
            ("manage", "VBP", D, "V"),
            ("a", "DT", D, "ARG1"),
            ("tiny", "JJ", D, "ARG1"),
            ("hotel", "NN", D, "ARG1"),
            (".", ".", D, None),
        ),
        [("P7", 0, "What do the sisters manage?", "a tiny hotel", "What", "perfect")],
    ),
    (
        S(
            "The clinic treated twelve patients.",
            ("The", "DT", D, "ARG0"),
            ("clinic", "NN", D, "ARG0"),
            ("treated", "VBD", D, "V", "treat"),
            ("twelve", "CD", D, "ARG1"),
            ("patients", "NNS", D, "ARG1", "patient"),
            (".", ".", D, None),
        ),
        [("P8", 0, "How many did the clinic treat?", "twelve patients", "How many", "perfect")],
    ),
    (
        S(
            "Lena met Jonas in Prague.",
            ("Lena", "NNP", "PER", "ARG0"),
            ("met", "VBD", D, "V", "meet"),
            ("Jonas", "NNP", "PER", "ARG1"),
            ("in", "IN", D, "ARGM-LOC"),
            ("Prague", "NNP", "LOC", "ARGM-LOC"),
            (".", ".", D, None),
        ),
        [
            ("P9", 0, "Who met Jonas in Prague?", "Lena", "Who", "perfect"),
            ("P9", 1, "Where did Lena meet Jonas?", "in Prague", "Where", "perfect"),
        ],
    ),
    (
        S(
            "Lena met Jonas.",
            ("Lena", "NNP", "PER", "ARG0"),
            ("met", "VBD", D, "V", "meet"),
            ("Jonas", "NNP", "PER", "ARG1"),
            (".", ".", D, None),
        ),
        # the location question is suppressed: its answer never occurs here
        [("P9", 0, "Who met Jonas?", "Lena", "Who", "successful")],
    ),
    (
        S(
            "Marco is in Geneva.",
            ("Marco", "NNP", "PER", "ARG1"),
            ("is", "VBZ", D, "V", "be"),
            ("in", "IN", D, "ARG2"),
            ("Geneva", "NNP", "LOC", "ARG2"),
            (".", ".", D, None),
        ),
        [("P10", 0, "Where is Marco?", "in Geneva", "Where", "perfect")],
    ),
    (
        S(
            "Noah can climb the tower.",
            ("Noah", "NNP", "PER", "ARG0"),
            ("can", "MD", D, "ARGM-MOD"),
            ("climb", "VB", D, "V"),
            ("the", "DT", D, "ARG1"),
            ("tower", "NN", D, "ARG1"),
            (".", ".", D, None),
        ),
        [("P11", 0, "What can Noah climb?", "the tower", "What", "perfect")],
    ),
    (
        S(
            "Tara did not accept the offer.",
            ("Tara", "NNP", "PER", "ARG0"),
            ("did", "VBD", D, "V", "do"),
            ("not", "RB", D, "ARGM-NEG"),
            ("accept", "VB", D, "V"),
            ("the", "DT", D, "ARG1"),
            ("offer", "NN", D, "ARG1"),
            (".", ".", D, None),
        ),
        [("P12", 0, "What did Tara not accept?", "the offer", "What", "perfect")],
    ),
    (
        S(
            "Ethan wrote the report at midnight.",
            ("Ethan", "NNP", "PER", "ARG0"),
            ("wrote", "VBD", D, "V", "write"),
            ("the", "DT", D, "ARG1"),
            ("report", "NN", D, "ARG1"),
            ("at", "IN", D, "ARGM-TMP"),
            ("midnight", "NN", D, "ARGM-TMP"),
            (".", ".", D, None),
        ),
        [
            ("P3", 0, "When did Ethan write the report?", "at midnight", "When", "perfect"),
            ("P3", 1, "Who wrote the report at midnight?", "Ethan", "Who", "perfect"),
        ],
    ),
    (
        S(
            "Last winter Ruth painted the cabin.",
            ("Last", "NN", D, "ARGM-TMP"),
            ("winter", "NN", D, "ARGM-TMP"),
            ("Ruth", "NNP", "PER", "ARG0"),
            ("painted", "VBD", D, "V", "paint"),
            ("the", "DT", D, "ARG1"),
            ("cabin", "NN", D, "ARG1"),
            (".", ".", D, None),
        ),
        # leading modifier: matched against the tighter pattern, leftover
        # appended at the end of each question
        [
            ("P2", 0, "Who painted the cabin last winter?", "Ruth", "Who", "successful"),
            ("P2", 1, "What did Ruth paint last winter?", "the cabin", "What", "successful"),
        ],
    ),
    (
        S(
            "The bridge was built by engineers.",
            ("The", "DT", D, "ARG1"),
            ("bridge", "NN", D, "ARG1"),
            ("was", "VBZ", D, "V", "be"),
            ("built", "VBN", D, "V", "build"),
            ("by", "IN", D, "ARG0"),
            ("engineers", "NNS", D, "ARG0", "engineer"),
            (".", ".", D, None),
        ),
        [],  # passive shape unseen in the seed: teach request only
    ),
    (
        S(
            "Close the door quietly.",
            ("Close", "VB", D, "V"),
            ("the", "DT", D, "ARG1"),
            ("door", "NN", D, "ARG1"),
            ("quietly", "RB", D, "ARGM-MNR"),
            (".", ".", D, None),
        ),
        [],  # imperative: no subject, discarded
    ),
    (
        S(
            "Absolutely not.",
            ("Absolutely", "RB", D, None),
            ("not", "RB", D, None),
            (".", ".", D, None),
        ),
        [],  # no predicate at all
    ),
    (
        S(
            "Simon guards the north gate.",
            ("Simon", "NNP", "PER", "ARG0"),
            ("guards", "VBZ", D, "V", "guard"),
            ("the", "DT", D, "ARG1"),
            ("north", "JJ", D, "ARG1"),
            ("gate", "NN", D, "ARG1"),
            (".", ".", D, None),
        ),
        [("P6", 0, "What does Simon guard?", "the north gate", "What", "perfect")],
    ),
    (
        S(
            "The twins paint small murals.",
            ("The", "DT", D, "ARG0"),
            ("twins", "NNS", D, "ARG0", "twin"),
            ("paint", "VBP", D, "V"),
            ("small", "JJ", D, "ARG1"),
            ("murals", "NNS", D, "ARG1", "mural"),
            (".", ".", D, None),
        ),
        [("P7", 0, "What do the twins paint?", "small murals", "What", "perfect")],
    ),
    (
        S(
            "The garage stored seven bicycles.",
            ("The", "DT", D, "ARG0"),
            ("garage", "NN", D, "ARG0"),
            ("stored", "VBD", D, "V", "store"),
            ("seven", "CD", D, "ARG1"),
            ("bicycles", "NNS", D, "ARG1", "bicycle"),
            (".", ".", D, None),
        ),
        [("P8", 0, "How many did the garage store?", "seven bicycles", "How many", "perfect")],
    ),
    (
        S(
            "Dmitri lives in Tallinn.",
            ("Dmitri", "NNP", "PER", "ARG0"),
            ("lives", "VBZ", D, "V", "live"),
            ("in", "IN", D, "ARG1"),
            ("Tallinn", "NNP", "LOC", "ARG1"),
            (".", ".", D, None),
        ),
        [("P13", 0, "Where does Dmitri live?", "in Tallinn", "Where", "perfect")],
    ),
    (
        S(
            "Grace sealed the letters yesterday.",
            ("Grace", "NNP", "PER", "ARG0"),
            ("sealed", "VBD", D, "V", "seal"),
            ("the", "DT", D, "ARG1"),
            ("letters", "NNS", D, "ARG1", "letter"),
            ("yesterday", "NN", D, "ARGM-TMP"),
            (".", ".", D, None),
        ),
        [
            ("P3", 0, "When did Grace seal the letters?", "yesterday", "When", "perfect"),
            ("P3", 1, "Who sealed the letters yesterday?", "Grace", "Who", "perfect"),
        ],
    ),
    (
        S(
            "Ivan is the founder of the institute.",
            ("Ivan", "NNP", "PER", "ARG1"),
            ("is", "VBZ", D, "V", "be"),
            ("the", "DT", D, "ARG2"),
            ("founder", "NN", D, "ARG2"),
            ("of", "IN", D, "ARG2"),
            ("the", "DT", D, "ARG2"),
            ("institute", "NN", D, "ARG2"),
            (".", ".", D, None),
        ),
        [
            ("P5", 0, "Who is the founder of the institute?", "Ivan", "Who", "perfect"),
            ("P5", 1, "What is Ivan?", "the founder of the institute", "What", "perfect"),
        ],
    ),
    (
        S(
            "Mona mailed the parcel because the deadline loomed.",
            ("Mona", "NNP", "PER", "ARG0"),
            ("mailed", "VBD", D, "V", "mail"),
            ("the", "DT", D, "ARG1"),
            ("parcel", "NN", D, "ARG1"),
            ("because", "IN", D, "ARGM-CAU"),
            ("the", "DT", D, "ARGM-CAU"),
            ("deadline", "NN", D, "ARGM-CAU"),
            ("loomed", "VBD", D, "ARGM-CAU", "loom"),
            (".", ".", D, None),
            predicate=1,
        ),
        [
            ("P4", 0, "Why did Mona mail the parcel?",
             "because the deadline loomed", "Why", "perfect"),
        ],
    ),
    (
        S(
            "Amir guided Paula in Cairo.",
            ("Amir", "NNP", "PER", "ARG0"),
            ("guided", "VBD", D, "V", "guide"),
            ("Paula", "NNP", "PER", "ARG1"),
            ("in", "IN", D, "ARGM-LOC"),
            ("Cairo", "NNP", "LOC", "ARGM-LOC"),
            (".", ".", D, None),
        ),
        [
            ("P9", 0, "Who guided Paula in Cairo?", "Amir", "Who", "perfect"),
            ("P9", 1, "Where did Amir guide Paula?", "in Cairo", "Where", "perfect"),
        ],
    ),
    (
        S(
            "Zoe can ride the gray mare.",
            ("Zoe", "NNP", "PER", "ARG0"),
            ("can", "MD", D, "ARGM-MOD"),
            ("ride", "VB", D, "V"),
            ("the", "DT", D, "ARG1"),
            ("gray", "JJ", D, "ARG1"),
            ("mare", "NN", D, "ARG1"),
            (".", ".", D, None),
        ),
        [("P11", 0, "What can Zoe ride?", "the gray mare", "What", "perfect")],
    ),
    (
        S(
            "Toby did not return the ladder.",
            ("Toby", "NNP", "PER", "ARG0"),
            ("did", "VBD", D, "V", "do"),
            ("not", "RB", D, "ARGM-NEG"),
            ("return", "VB", D, "V"),
            ("the", "DT", D, "ARG1"),
            ("ladder", "NN", D, "ARG1"),
            (".", ".", D, None),
        ),
        [("P12", 0, "What did Toby not return?", "the ladder", "What", "perfect")],
    ),
    (
        S(
            "Ida walked to Madrid last night quietly.",
            ("Ida", "NNP", "PER", "ARG0"),
            ("walked", "VBD", D, "V", "walk"),
            ("to", "IN", D, "ARG1"),
            ("Madrid", "NNP", "LOC", "ARG1"),
            ("last", "NN", D, "ARGM-TMP"),
            ("night", "NN", D, "ARGM-TMP"),
            ("quietly", "RB", D, "ARGM-MNR"),
            (".", ".", D, None),
        ),
        [
            ("P1", 0, "Where did Ida walk to last night quietly?",
             "Madrid", "Where", "successful"),
        ],
    ),
]


def main():
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    cfg = EngineConfig()

    seed_records = []
    pair_ids = {}
    store = MSDIP(cfg)
    for name, decl, questions in SEEDS:
        seed_records.append(
            {
                "decl": tagged_sentence_to_dict(decl),
                "interrogatives": [tagged_sentence_to_dict(q) for q in questions],
            }
        )
        pairs = learn_pair(decl, questions, cfg)
        for i, pair in enumerate(pairs):
            store.insert(pair)
            pair_ids[(name, i)] = pair.id

    (OUT_DIR / "seed_pairs.json").write_text(
        json.dumps(seed_records, ensure_ascii=False, indent=1) + "\n", encoding="utf-8"
    )

    with open(OUT_DIR / "sentences.jsonl", "w", encoding="utf-8") as fh:
        for ts, _ in INPUTS:
            fh.write(json.dumps(tagged_sentence_to_dict(ts), ensure_ascii=False) + "\n")

    with open(OUT_DIR / "expected_qaps.jsonl", "w", encoding="utf-8") as fh:
        for ts, expectations in INPUTS:
            for seed_name, mi_index, question, answer, wh, match in expectations:
                line = {
                    "sentence": ts.text,
                    "question": question,
                    "answer": answer,
                    "wh": wh,
                    "pair_id": pair_ids[(seed_name, mi_index)],
                    "match": match,
                }
                fh.write(json.dumps(line, ensure_ascii=False) + "\n")

    print(f"wrote {len(seed_records)} seed records, {len(INPUTS)} sentences, "
          f"{sum(len(e) for _, e in INPUTS)} expected QAPs to {OUT_DIR}")


if __name__ == "__main__":
    main()
