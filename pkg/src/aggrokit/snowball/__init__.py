"""Snowball stemming: Porter2 for English, the Snowball Russian algorithm for Russian.

Both stemmers are self-contained string rewriters. Tokens containing
characters outside the language's alphabet pass through unchanged, so
mixed-script tokens (Latin inside Russian text and vice versa) are stable.
"""

from aggrokit.snowball.english import stem_english
from aggrokit.snowball.russian import stem_russian

__all__ = ["stem", "stem_english", "stem_russian"]


def stem(token: str, language: str) -> str:
    """Stem a lowercase token with the algorithm for `language` ("en" or "ru")."""
    if language == "en":
        return stem_english(token)
    if language == "ru":
        return stem_russian(token)
    raise ValueError(f"unsupported language: {language!r}")
