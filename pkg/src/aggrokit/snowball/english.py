"""Porter2 (Snowball English) stemmer.

Pure string rewriter over the a-z + apostrophe alphabet; anything else
passes through unchanged. Region bookkeeping (R1/R2) is carried as суffix
strings that shrink in lockstep with the word, which is how the widely
deployed ports of the algorithm behave on the short-region edge cases.
"""

_VOWELS = "aeiouy"
_DOUBLES = ("bb", "dd", "ff", "gg", "mm", "nn", "pp", "rr", "tt")
_LI_ENDING = "cdeghkmnrt"

_STEP0 = ("'s'", "'s", "'")
_STEP1A = ("sses", "ied", "ies", "us", "ss", "s")
_STEP1B = ("eedly", "ingly", "edly", "eed", "ing", "ed")
_STEP2 = (
    "ization", "ational", "fulness", "ousness", "iveness", "tional",
    "biliti", "lessli", "entli", "ation", "alism", "aliti", "ousli",
    "iviti", "fulli", "enci", "anci", "abli", "izer", "ator", "alli",
    "bli", "ogi", "li",
)
_STEP3 = ("ational", "tional", "alize", "icate", "iciti", "ative", "ical", "ness", "ful")
_STEP4 = (
    "ement", "ance", "ence", "able", "ible", "ment", "ant", "ent",
    "ism", "ate", "iti", "ous", "ive", "ize", "ion", "al", "er", "ic",
)

# Irregular forms stemmed by lookup, including the -s/-ed/-ing families of
# words whose apparent suffix is part of the root.
_SPECIAL = {
    "skis": "ski", "skies": "sky", "dying": "die", "lying": "lie",
    "tying": "tie", "idly": "idl", "gently": "gentl", "ugly": "ugli",
    "early": "earli", "only": "onli", "singly": "singl", "sky": "sky",
    "news": "news", "howe": "howe", "atlas": "atlas", "cosmos": "cosmos",
    "bias": "bias", "andes": "andes", "inning": "inning",
    "innings": "inning", "outing": "outing", "outings": "outing",
    "canning": "canning", "cannings": "canning", "herring": "herring",
    "herrings": "herring", "earring": "earring", "earrings": "earring",
    "proceed": "proceed", "proceeds": "proceed", "proceeded": "proceed",
    "proceeding": "proceed", "exceed": "exceed", "exceeds": "exceed",
    "exceeded": "exceed", "exceeding": "exceed", "succeed": "succeed",
    "succeeds": "succeed", "succeeded": "succeed", "succeeding": "succeed",
}

_APOSTROPHES = "’‘‛"
_ALPHABET = frozenset("abcdefghijklmnopqrstuvwxyz'" + _APOSTROPHES)


def _chop(word, r1, r2, n):
    return word[:-n], r1[:-n], r2[:-n]


def _replace(word, r1, r2, suffix, repl, r2_fallback=""):
    n = len(suffix)
    word = word[:-n] + repl
    r1 = r1[:-n] + repl if len(r1) >= n else ""
    r2 = r2[:-n] + repl if len(r2) >= n else r2_fallback
    return word, r1, r2


def _regions(word):
    """R1/R2 as suffix strings, with the gener-/commun-/arsen- exceptions."""
    if word.startswith(("gener", "commun", "arsen")):
        r1 = word[5:] if word.startswith(("gener", "arsen")) else word[6:]
        r2 = ""
        for i in range(1, len(r1)):
            if r1[i] not in _VOWELS and r1[i - 1] in _VOWELS:
                r2 = r1[i + 1:]
                break
        return r1, r2
    r1 = ""
    r2 = ""
    for i in range(1, len(word)):
        if word[i] not in _VOWELS and word[i - 1] in _VOWELS:
            r1 = word[i + 1:]
            break
    for i in range(1, len(r1)):
        if r1[i] not in _VOWELS and r1[i - 1] in _VOWELS:
            r2 = r1[i + 1:]
            break
    return r1, r2


def stem_english(token: str) -> str:
    """Return the Porter2 stem of a lowercase English token."""
    word = token.lower()
    if any(ch not in _ALPHABET for ch in word):
        return token

    if len(word) <= 2:
        return word
    if word in _SPECIAL:
        return _SPECIAL[word]

    for ch in _APOSTROPHES:
        word = word.replace(ch, "'")
    if word.startswith("'"):
        word = word[1:]

    # Mark consonant-y as Y so it is not treated as a vowel in the steps.
    if word.startswith("y"):
        word = "Y" + word[1:]
    for i in range(1, len(word)):
        if word[i - 1] in _VOWELS and word[i] == "y":
            word = word[:i] + "Y" + word[i + 1:]

    r1, r2 = _regions(word)

    # step 0: possessive markers
    for suffix in _STEP0:
        if word.endswith(suffix):
            word, r1, r2 = _chop(word, r1, r2, len(suffix))
            break

    # step 1a: plural-ish endings
    for suffix in _STEP1A:
        if word.endswith(suffix):
            if suffix == "sses":
                word, r1, r2 = _chop(word, r1, r2, 2)
            elif suffix in ("ied", "ies"):
                if len(word[:-3]) > 1:
                    word, r1, r2 = _chop(word, r1, r2, 2)
                else:
                    word, r1, r2 = _chop(word, r1, r2, 1)
            elif suffix == "s":
                if any(ch in _VOWELS for ch in word[:-2]):
                    word, r1, r2 = _chop(word, r1, r2, 1)
            break

    # step 1b: -ed / -ing families
    for suffix in _STEP1B:
        if word.endswith(suffix):
            if suffix in ("eed", "eedly"):
                if r1.endswith(suffix):
                    word, r1, r2 = _replace(word, r1, r2, suffix, "ee")
            else:
                if any(ch in _VOWELS for ch in word[: -len(suffix)]):
                    word, r1, r2 = _chop(word, r1, r2, len(suffix))
                    if word.endswith(("at", "bl", "iz")):
                        word += "e"
                        r1 += "e"
                        if len(word) > 5 or len(r1) >= 3:
                            r2 += "e"
                    elif word.endswith(_DOUBLES):
                        word, r1, r2 = _chop(word, r1, r2, 1)
                    elif (
                        r1 == ""
                        and len(word) >= 3
                        and word[-1] not in _VOWELS
                        and word[-1] not in "wxY"
                        and word[-2] in _VOWELS
                        and word[-3] not in _VOWELS
                    ) or (
                        r1 == ""
                        and len(word) == 2
                        and word[0] in _VOWELS
                        and word[1] not in _VOWELS
                    ):
                        # short word: restore the e
                        word += "e"
                        if len(r1) > 0:
                            r1 += "e"
                        if len(r2) > 0:
                            r2 += "e"
            break

    # step 1c: final y -> i after a consonant
    if len(word) > 2 and word[-1] in "yY" and word[-2] not in _VOWELS:
        word = word[:-1] + "i"
        r1 = r1[:-1] + "i" if len(r1) >= 1 else ""
        r2 = r2[:-1] + "i" if len(r2) >= 1 else ""

    # step 2: derivational suffixes, mapped within R1
    for suffix in _STEP2:
        if word.endswith(suffix):
            if r1.endswith(suffix):
                if suffix == "tional":
                    word, r1, r2 = _chop(word, r1, r2, 2)
                elif suffix in ("enci", "anci", "abli"):
                    word = word[:-1] + "e"
                    r1 = r1[:-1] + "e" if len(r1) >= 1 else ""
                    r2 = r2[:-1] + "e" if len(r2) >= 1 else ""
                elif suffix == "entli":
                    word, r1, r2 = _chop(word, r1, r2, 2)
                elif suffix in ("izer", "ization"):
                    word, r1, r2 = _replace(word, r1, r2, suffix, "ize")
                elif suffix in ("ational", "ation", "ator"):
                    word, r1, r2 = _replace(word, r1, r2, suffix, "ate", r2_fallback="e")
                elif suffix in ("alism", "aliti", "alli"):
                    word, r1, r2 = _replace(word, r1, r2, suffix, "al")
                elif suffix == "fulness":
                    word, r1, r2 = _chop(word, r1, r2, 4)
                elif suffix in ("ousli", "ousness"):
                    word, r1, r2 = _replace(word, r1, r2, suffix, "ous")
                elif suffix in ("iveness", "iviti"):
                    word, r1, r2 = _replace(word, r1, r2, suffix, "ive", r2_fallback="e")
                elif suffix in ("biliti", "bli"):
                    word, r1, r2 = _replace(word, r1, r2, suffix, "ble")
                elif suffix == "ogi" and word[-4] == "l":
                    word, r1, r2 = _chop(word, r1, r2, 1)
                elif suffix in ("fulli", "lessli"):
                    word, r1, r2 = _chop(word, r1, r2, 2)
                elif suffix == "li" and word[-3] in _LI_ENDING:
                    word, r1, r2 = _chop(word, r1, r2, 2)
            break

    # step 3
    for suffix in _STEP3:
        if word.endswith(suffix):
            if r1.endswith(suffix):
                if suffix == "tional":
                    word, r1, r2 = _chop(word, r1, r2, 2)
                elif suffix == "ational":
                    word, r1, r2 = _replace(word, r1, r2, suffix, "ate")
                elif suffix == "alize":
                    word, r1, r2 = _chop(word, r1, r2, 3)
                elif suffix in ("icate", "iciti", "ical"):
                    word, r1, r2 = _replace(word, r1, r2, suffix, "ic")
                elif suffix in ("ful", "ness"):
                    word, r1, r2 = _chop(word, r1, r2, len(suffix))
                elif suffix == "ative" and r2.endswith(suffix):
                    word, r1, r2 = _chop(word, r1, r2, 5)
            break

    # step 4: residual suffixes, gated on R2
    for suffix in _STEP4:
        if word.endswith(suffix):
            if r2.endswith(suffix):
                if suffix == "ion":
                    if word[-4] in "st":
                        word, r1, r2 = _chop(word, r1, r2, 3)
                else:
                    word, r1, r2 = _chop(word, r1, r2, len(suffix))
            break

    # step 5: final -e / -l cleanup
    if r2.endswith("l") and word[-2] == "l":
        word = word[:-1]
    elif r2.endswith("e"):
        word = word[:-1]
    elif r1.endswith("e"):
        if len(word) >= 4 and (
            word[-2] in _VOWELS
            or word[-2] in "wxY"
            or word[-3] not in _VOWELS
            or word[-4] in _VOWELS
        ):
            word = word[:-1]

    return word.replace("Y", "y")
