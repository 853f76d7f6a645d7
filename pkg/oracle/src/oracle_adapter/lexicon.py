"""Word lists backing the rule-based tagger."""

DETERMINERS = {"the", "a", "an", "this", "that", "these", "those", "each",
               "every", "some", "any", "no", "another"}

PREPOSITIONS = {"to", "in", "on", "at", "by", "of", "with", "from", "into",
                "over", "under", "about", "after", "before", "during",
                "between", "through", "against", "because", "since", "until",
                "for", "near", "inside", "outside", "toward", "towards"}

CONJUNCTIONS = {"and", "but", "or", "nor", "yet", "so", "plus", "therefore"}

MODALS = {"can", "could", "will", "would", "may", "might", "must", "shall",
          "should"}

PRONOUNS = {"i", "you", "he", "she", "it", "we", "they", "me", "him", "her",
            "us", "them"}

POSSESSIVE_PRONOUNS = {"my", "your", "his", "its", "our", "their"}

WH_PRONOUNS = {"who": "WP", "whom": "WP", "what": "WP", "which": "WDT",
               "whose": "WP$", "where": "WRB", "when": "WRB", "why": "WRB",
               "how": "WRB"}

ADVERBS = {"not", "never", "always", "often", "sometimes", "here", "there",
           "now", "then", "very", "too", "quite", "almost", "already",
           "yesterday", "today", "tomorrow"}

NUMBER_WORDS = {"one", "two", "three", "four", "five", "six", "seven",
                "eight", "nine", "ten", "eleven", "twelve", "twenty",
                "thirty", "hundred", "thousand", "million"}

ADJECTIVES = {"old", "new", "small", "big", "busy", "tiny", "wooden", "gray",
              "north", "south", "east", "west", "unusual", "many", "much",
              "few", "several", "last", "next", "first", "final", "early",
              "late", "young", "long", "short", "red", "blue", "green"}

# auxiliary and copular forms with their fixed tags and lemmas; "was"/"is"
# share the third-singular tag so copular patterns line up across tenses
AUXILIARIES = {
    "is": ("VBZ", "be"),
    "was": ("VBZ", "be"),
    "are": ("VBP", "be"),
    "were": ("VBP", "be"),
    "am": ("VBP", "be"),
    "be": ("VB", "be"),
    "been": ("VBN", "be"),
    "being": ("VBG", "be"),
    "does": ("VBZ", "do"),
    "did": ("VBD", "do"),
    "do": ("VBP", "do"),
    "done": ("VBN", "do"),
    "has": ("VBZ", "have"),
    "have": ("VBP", "have"),
    "had": ("VBD", "have"),
    "having": ("VBG", "have"),
}

BE_FORMS = {"is", "was", "are", "were", "am", "be", "been", "being"}
DO_FORMS = {"did", "does", "do"}

# irregular past/participle forms -> lemma
IRREGULAR_VERBS = {
    "flew": "fly", "flown": "fly",
    "met": "meet",
    "sold": "sell",
    "went": "go", "gone": "go",
    "built": "build",
    "came": "come",
    "fell": "fall", "fallen": "fall",
    "wrote": "write", "written": "write",
    "bought": "buy",
    "brought": "bring",
    "caught": "catch",
    "taught": "teach",
    "told": "tell",
    "said": "say",
    "made": "make",
    "found": "find",
    "took": "take", "taken": "take",
    "gave": "give", "given": "give",
    "saw": "see", "seen": "see",
    "ran": "run", "run": "run",
    "ate": "eat", "eaten": "eat",
    "drove": "drive", "driven": "drive",
    "grew": "grow", "grown": "grow",
    "knew": "know", "known": "know",
    "left": "leave",
    "lost": "lose",
    "paid": "pay",
    "read": "read",
    "rode": "ride", "ridden": "ride",
    "sang": "sing", "sung": "sing",
    "sat": "sit",
    "spoke": "speak", "spoken": "speak",
    "stood": "stand",
    "swam": "swim", "swum": "swim",
    "threw": "throw", "thrown": "throw",
    "wore": "wear", "worn": "wear",
    "won": "win",
    "held": "hold",
    "kept": "keep",
    "led": "lead",
    "sent": "send",
    "spent": "spend",
}

# base forms of verbs the tagger recognizes beyond auxiliaries
VERB_LEMMAS = {
    "travel", "fly", "meet", "sell", "buy", "go", "build", "come", "fall",
    "write", "visit", "cancel", "own", "rescue", "adopt", "sign", "live",
    "work", "paint", "move", "carry", "design", "restore", "guard", "clean",
    "manage", "repair", "tour", "postpone", "run", "seal", "mail", "guide",
    "ride", "return", "walk", "sail", "climb", "accept", "treat", "store",
    "teach", "study", "read", "play", "watch", "open", "close", "start",
    "stop", "finish", "help", "call", "ask", "answer", "send", "give",
    "take", "make", "find", "keep", "hold", "lead", "spend", "win", "stay",
    "arrive", "leave", "plant", "grow", "cook", "bake", "drive", "publish",
    "record", "direct", "compose", "edit", "translate", "deliver", "collect",
    "organize", "host", "train", "coach", "found", "launch", "develop",
    "loom", "exceed", "agree", "borrow", "lend", "wash", "fix", "wrap",
}

PERSON_NAMES = {
    "john", "mary", "abraham", "lincoln", "james", "sarah", "michael",
    "emma", "david", "anna", "peter", "laura", "tom", "alice", "boris",
    "carla", "dev", "elif", "farid", "gina", "hans", "ines", "jon", "kara",
    "leo", "mira", "nils", "ola", "pia", "clara", "liam", "maya", "elena",
    "rosa", "dana", "aaron", "nadia", "iris", "owen", "tomas", "victor",
    "nora", "petra", "oscar", "felix", "lena", "jonas", "marco", "noah",
    "tara", "ethan", "ruth", "simon", "dmitri", "grace", "ivan", "mona",
    "amir", "paula", "zoe", "toby", "ida", "hugo", "nina",
}

PLACES = {
    "boston", "london", "paris", "berlin", "madrid", "rome", "oslo", "lima",
    "cairo", "turin", "quito", "osaka", "perth", "dakar", "bergen", "malta",
    "athens", "prague", "geneva", "lisbon", "tallinn", "vienna", "dublin",
    "america", "england", "france", "germany", "spain", "italy", "norway",
    "egypt", "japan", "kenya", "brazil", "canada",
}

# multi-word place names, lowercase, longest first
PLACE_PHRASES = [
    ("united", "states"),
    ("new", "york"),
    ("united", "kingdom"),
]

ORGANIZATIONS = {"congress", "parliament", "senate", "nasa", "unesco"}

TIME_NOUNS = {"week", "month", "year", "day", "night", "morning", "evening",
              "afternoon", "summer", "winter", "spring", "autumn", "fall",
              "noon", "midnight", "decade", "century", "hour", "minute",
              "monday", "tuesday", "wednesday", "thursday", "friday",
              "saturday", "sunday", "january", "february", "march", "april",
              "may", "june", "july", "august", "september", "october",
              "november", "december"}
