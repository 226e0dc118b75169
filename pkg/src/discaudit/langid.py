"""English/Dutch language assignment for posts.

A deterministic stand-in for an off-the-shelf detector: character-trigram
log-likelihood combined with a stopword-hit score. Profiles ship as a
versioned data file (see scripts/build_lang_profiles.py); an external
detector can substitute through the same detect() interface, and per-post
label override files can bypass detection entirely.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping, Optional

from .corpus import Corpus, Language, Post
from .errors import IoError, ParseError

#: Minimum alphabetic tokens before detection is attempted.
MIN_ALPHA_TOKENS = 3
#: Minimum score margin between the top two profiles; below this -> Other.
MARGIN_THRESHOLD = 0.1
#: Stopword-hit fraction weight relative to mean trigram log-likelihood.
STOPWORD_WEIGHT = 2.0
#: Confidence = margin / (margin + this); 0.9 confidence at margin 0.54.
CONFIDENCE_SCALE = 0.06
#: Detection reads at most this many leading letter-characters of a post.
MAX_CHARS = 400

_TAG_RE = re.compile(r"(?:https?://\S+|www\.\S+|[#@]\w+)", re.UNICODE)
_LETTER_RUN = re.compile(r"[^\W\d_]+", re.UNICODE)


@dataclass(frozen=True)
class LanguageProfile:
    """Trigram log-probabilities plus stopwords for one language."""

    language: Language
    char_trigram_weights: dict[str, float]
    floor: float
    stopwords: frozenset[str]


@dataclass(frozen=True, slots=True)
class LangidReport:
    n_posts: int
    n_english: int
    n_dutch: int
    n_other: int
    n_overridden: int
    detector_version: str


class TrigramDetector:
    """Scores text against two language profiles; pure and thread-safe."""

    def __init__(self, english: LanguageProfile, dutch: LanguageProfile, version: str):
        self.version = version
        self.profiles = (english, dutch)
        # One lookup per trigram: trigram -> (english logp, dutch logp).
        en, nl = english, dutch
        merged = {}
        for g in set(en.char_trigram_weights) | set(nl.char_trigram_weights):
            merged[g] = (
                en.char_trigram_weights.get(g, en.floor),
                nl.char_trigram_weights.get(g, nl.floor),
            )
        self._merged = merged
        self._floors = (en.floor, nl.floor)
        self._stopwords = (en.stopwords, nl.stopwords)

    def detect(self, text: str) -> tuple[Language, float]:
        """Return (language, confidence in [0, 1]); deterministic.

        Hashtags, mentions, and URLs are stripped first. Returns Other with
        confidence 0.0 when fewer than MIN_ALPHA_TOKENS alphabetic tokens
        remain, and Other when the top-two margin is below MARGIN_THRESHOLD.
        Confidence grows monotonically with the margin.
        """
        words = _LETTER_RUN.findall(_TAG_RE.sub(" ", text).lower())
        if len(words) < MIN_ALPHA_TOKENS:
            return Language.OTHER, 0.0

        padded = " " + " ".join(words) + " "
        if len(padded) > MAX_CHARS:
            padded = padded[:MAX_CHARS]
        merged = self._merged
        floors = self._floors
        score_en = 0.0
        score_nl = 0.0
        n = len(padded) - 2
        for i in range(n):
            pair = merged.get(padded[i:i + 3], floors)
            score_en += pair[0]
            score_nl += pair[1]
        score_en /= n
        score_nl /= n

        sw_en, sw_nl = self._stopwords
        considered = words[:80]
        hits_en = sum(1 for w in considered if w in sw_en)
        hits_nl = sum(1 for w in considered if w in sw_nl)
        score_en += STOPWORD_WEIGHT * hits_en / len(considered)
        score_nl += STOPWORD_WEIGHT * hits_nl / len(considered)

        margin = abs(score_en - score_nl)
        confidence = margin / (margin + CONFIDENCE_SCALE)
        if margin < MARGIN_THRESHOLD:
            return Language.OTHER, confidence
        winner = Language.ENGLISH if score_en > score_nl else Language.DUTCH
        return winner, confidence


def default_profiles_path() -> Path:
    return Path(__file__).parent / "data" / "lang_profiles.json"


def load_detector(path=None) -> TrigramDetector:
    profile_path = Path(path) if path is not None else default_profiles_path()
    try:
        data = json.loads(profile_path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise IoError(f"cannot read language profiles {profile_path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"language profiles {profile_path}: {exc}") from exc

    def profile(name: str, language: Language) -> LanguageProfile:
        raw = data["languages"][name]
        weights = {g: float(w) for g, w in raw["trigrams"].items()}
        if not all(w == w and w != float("-inf") for w in weights.values()):
            raise ParseError(f"profile {name} contains non-finite weights")
        return LanguageProfile(
            language=language,
            char_trigram_weights=weights,
            floor=float(raw["floor"]),
            stopwords=frozenset(raw["stopwords"]),
        )

    english = profile("English", Language.ENGLISH)
    dutch = profile("Dutch", Language.DUTCH)
    if english.stopwords & dutch.stopwords:
        raise ParseError("English and Dutch stopword sets must be disjoint")
    return TrigramDetector(english, dutch, str(data["version"]))


_default_detector: Optional[TrigramDetector] = None


def get_default_detector() -> TrigramDetector:
    global _default_detector
    if _default_detector is None:
        _default_detector = load_detector()
    return _default_detector


def detect_language(text: str) -> tuple[Language, float]:
    """Detect with the bundled default profiles."""
    return get_default_detector().detect(text)


def assign_languages(
    corpus: Corpus,
    detector: Optional[TrigramDetector] = None,
    overrides: Optional[Mapping[str, Language]] = None,
) -> tuple[Corpus, LangidReport]:
    """Return a new corpus with a language on every post, plus counts.

    Posts listed in `overrides` (post id -> language) take that label
    unconditionally; everything else goes through the detector. Other-language
    posts stay in the corpus but are excluded from analytics downstream.
    """
    detector = detector or get_default_detector()
    overrides = overrides or {}
    detect = detector.detect
    counts = {Language.ENGLISH: 0, Language.DUTCH: 0, Language.OTHER: 0}
    overridden = 0
    posts = []
    for post in corpus.posts:
        label = overrides.get(post.id)
        if label is not None:
            overridden += 1
        else:
            label = detect(post.text)[0]
        counts[label] += 1
        posts.append(Post(
            id=post.id, account_id=post.account_id, platform=post.platform,
            timestamp=post.timestamp, text=post.text, likes=post.likes,
            comments=post.comments, toggle=post.toggle, language=label,
        ))
    report = LangidReport(
        n_posts=len(posts),
        n_english=counts[Language.ENGLISH],
        n_dutch=counts[Language.DUTCH],
        n_other=counts[Language.OTHER],
        n_overridden=overridden,
        detector_version=detector.version,
    )
    return corpus.with_posts(posts), report


_LABEL_ALIASES = {
    "english": Language.ENGLISH, "en": Language.ENGLISH,
    "dutch": Language.DUTCH, "nl": Language.DUTCH,
    "other": Language.OTHER,
}


def load_language_labels(path) -> dict[str, Language]:
    """Read a per-post label override file: post_id<TAB>language per line."""
    path = Path(path)
    try:
        raw = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise IoError(f"cannot read language labels {path}: {exc}") from exc
    labels: dict[str, Language] = {}
    for i, line in enumerate(raw.splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) < 2:
            raise ParseError(f"{path} line {i}: expected post_id<TAB>language")
        post_id, label = parts[0].strip(), parts[1].strip()
        language = _LABEL_ALIASES.get(label.lower())
        if language is None:
            raise ParseError(f"{path} line {i}: unknown language {label!r}")
        labels[post_id] = language
    return labels


def write_language_labels(rows, path) -> None:
    """Write (post_id, language, confidence) rows as a TSV label file."""
    path = Path(path)
    try:
        with path.open("w", encoding="utf-8", newline="\n") as fh:
            for post_id, language, confidence in rows:
                fh.write(f"{post_id}\t{language.value}\t{confidence:.6f}\n")
    except OSError as exc:
        raise IoError(f"cannot write language labels {path}: {exc}") from exc
