"""discaudit: measure influencer advertising-disclosure compliance.

Classifies social-media posts against legal disclosure standards (green =
legally sufficient, yellow = insufficient, none), detects affiliate-marketing
content by term co-occurrence, and aggregates corpus-level compliance tables
and engagement statistics.
"""

__version__ = "0.1.0"

from .corpus import Account, Corpus, Language, Platform, Post, load_corpus, write_corpus
from .rules import (
    AmDisclosure,
    AmFinding,
    DisclosureClass,
    DisclosureFinding,
    Lexicon,
    classify_am_disclosure,
    classify_corpus,
    classify_disclosure,
    detect_affiliate,
    load_lexicon,
    tokenize,
)
from .langid import assign_languages, detect_language

__all__ = [
    "Account", "AmDisclosure", "AmFinding", "Corpus", "DisclosureClass",
    "DisclosureFinding", "Language", "Lexicon", "Platform", "Post",
    "assign_languages", "classify_am_disclosure", "classify_corpus",
    "classify_disclosure", "detect_affiliate", "detect_language",
    "load_corpus", "load_lexicon", "tokenize", "write_corpus", "__version__",
]
