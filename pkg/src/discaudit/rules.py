"""Disclosure rule engine: tokenization, lexicon matching, green/yellow
classification with the five-word position rule and the paid-partnership
toggle, and affiliate-marketing co-occurrence detection.

All classification is pure: results depend only on the post and the lexicon,
so posts can be classified in parallel in any order.
"""

from __future__ import annotations

import re
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from enum import Enum
from pathlib import Path
from typing import Iterable, Optional, Sequence, Union

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .corpus import ANALYZABLE_LANGUAGES, Account, Corpus, Language, Post
from .errors import EmptyTermSet, IoError, LanguageUnassigned, ParseError

#: A green term counts as compliant only within the first this-many tokens.
POSITION_LIMIT = 5

_URL_PREFIX = re.compile(r"(?:https?://|www\.)", re.IGNORECASE)
_NON_WORD = re.compile(r"[\W_]+", re.UNICODE)


@dataclass(frozen=True, slots=True)
class Token:
    """A normalized word with its 1-based position in the post."""

    surface: str
    index: int


class DisclosureClass(Enum):
    GREEN_WORDS_POSITION = "green_words_position"
    GREEN_TOGGLE = "green_toggle"
    GREEN_TOGGLE_WORDS_POSITION = "green_toggle_words_position"
    YELLOW = "yellow"
    NONE = "none"

    @property
    def is_green(self) -> bool:
        return self in _GREEN_CLASSES

    @property
    def is_disclosed(self) -> bool:
        return self is not DisclosureClass.NONE


_GREEN_CLASSES = frozenset({
    DisclosureClass.GREEN_WORDS_POSITION,
    DisclosureClass.GREEN_TOGGLE,
    DisclosureClass.GREEN_TOGGLE_WORDS_POSITION,
})


class AmDisclosure(Enum):
    GREEN_DISCLOSED_AM = "green_disclosed_am"
    YELLOW_DISCLOSED_AM = "yellow_disclosed_am"
    UNDISCLOSED_AM = "undisclosed_am"
    NOT_AM = "not_am"


def normalize_word(raw: str) -> str:
    """Normalize one whitespace-delimited chunk to a token surface.

    Lowercases, removes leading #/@ signs, strips punctuation and symbol
    characters (which drops emoji), and collapses URLs to the surface "url".
    Returns "" for chunks with nothing left.
    """
    if _URL_PREFIX.match(raw):
        return "url"
    return _NON_WORD.sub("", raw.lstrip("#@").lower())


def token_surfaces(text: str) -> list[str]:
    """Normalized surfaces in order; empty results are dropped."""
    surfaces = []
    for chunk in text.split():
        surface = normalize_word(chunk)
        if surface:
            surfaces.append(surface)
    return surfaces


def tokenize(text: str) -> list[Token]:
    """Split on whitespace and normalize; token indices are 1-based."""
    return [Token(s, i) for i, s in enumerate(token_surfaces(text), start=1)]


class TermIndex:
    """A set of normalized terms prepared for fast matching against tokens.

    Single-word terms match by token equality; multi-word terms match
    consecutive token runs and report the run's first index.
    """

    __slots__ = ("terms", "_singles", "_multis")

    def __init__(self, terms: Iterable[str]):
        normalized = set()
        for term in terms:
            words = tuple(w for w in (normalize_word(c) for c in term.split()) if w)
            if not words:
                raise ParseError(f"term {term!r} normalizes to nothing")
            normalized.add(" ".join(words))
        self.terms: tuple[str, ...] = tuple(sorted(normalized))
        self._singles: frozenset[str] = frozenset(t for t in self.terms if " " not in t)
        self._multis: dict[str, list[tuple[str, ...]]] = {}
        for term in self.terms:
            words = tuple(term.split())
            if len(words) > 1:
                self._multis.setdefault(words[0], []).append(words)

    def __len__(self) -> int:
        return len(self.terms)

    def __contains__(self, term: str) -> bool:
        return term in self.terms

    def match(self, surfaces: Sequence[str], surface_set: set[str]) -> list[tuple[str, int]]:
        """All (term, 1-based index) matches, sorted by index then term."""
        out = []
        single_hits = self._singles & surface_set
        if single_hits:
            for i, s in enumerate(surfaces):
                if s in single_hits:
                    out.append((s, i + 1))
        for first, candidates in self._multis.items():
            if first not in surface_set:
                continue
            for i, s in enumerate(surfaces):
                if s != first:
                    continue
                for words in candidates:
                    if tuple(surfaces[i:i + len(words)]) == words:
                        out.append((" ".join(words), i + 1))
        out.sort(key=lambda m: (m[1], m[0]))
        return out

    def any_match(self, surfaces: Sequence[str], surface_set: set[str]) -> bool:
        if self._singles & surface_set:
            return True
        for first, candidates in self._multis.items():
            if first not in surface_set:
                continue
            for i, s in enumerate(surfaces):
                if s != first:
                    continue
                for words in candidates:
                    if tuple(surfaces[i:i + len(words)]) == words:
                        return True
        return False


@dataclass(frozen=True)
class AmRule:
    """Fires when at least one term from every set occurs in the post."""

    id: str
    term_sets: tuple[TermIndex, ...]

    def fires(self, surfaces: Sequence[str], surface_set: set[str]) -> bool:
        return all(ts.any_match(surfaces, surface_set) for ts in self.term_sets)


@dataclass(frozen=True)
class Lexicon:
    """Versioned rule set: green/yellow terms per language plus AM rules."""

    green_terms: dict[Language, TermIndex]
    yellow_terms: dict[Language, TermIndex]
    am_rules: tuple[AmRule, ...]
    version: str


@dataclass(frozen=True, slots=True)
class DisclosureFinding:
    """Per-post disclosure classification result."""

    disclosure_class: DisclosureClass
    matched_terms: tuple[tuple[str, int], ...]
    first_position: Optional[int]
    toggle_used: bool


@dataclass(frozen=True, slots=True)
class AmFinding:
    """Per-post affiliate-marketing detection result."""

    is_am: bool
    fired_rules: tuple[str, ...]
    am_disclosure: Optional[AmDisclosure]


@dataclass(frozen=True, slots=True)
class PostFinding:
    """A classified analyzable post, joined with its account."""

    post: Post
    account: Account
    disclosure: DisclosureFinding
    am: AmFinding


def match_terms(tokens: Sequence[Token], termset: Union[TermIndex, Iterable[str]]) -> list[tuple[str, int]]:
    """Match a term set against tokens from tokenize()."""
    if not isinstance(termset, TermIndex):
        termset = TermIndex(termset)
    surfaces = [t.surface for t in tokens]
    return termset.match(surfaces, set(surfaces))


def _require_language(post: Post) -> Language:
    if post.language not in ANALYZABLE_LANGUAGES:
        raise LanguageUnassigned(
            f"post {post.id!r} has language "
            f"{post.language.value if post.language else 'unassigned'}; "
            "classification needs English or Dutch")
    return post.language


def _classify_surfaces(post: Post, language: Language, surfaces: list[str],
                       surface_set: set[str], lexicon: Lexicon) -> DisclosureFinding:
    green = lexicon.green_terms[language].match(surfaces, surface_set)
    yellow = lexicon.yellow_terms[language].match(surfaces, surface_set)
    toggle_used = post.toggle is True
    green_in_position = any(i <= POSITION_LIMIT for _, i in green)
    if green_in_position and toggle_used:
        cls = DisclosureClass.GREEN_TOGGLE_WORDS_POSITION
    elif green_in_position:
        cls = DisclosureClass.GREEN_WORDS_POSITION
    elif toggle_used:
        cls = DisclosureClass.GREEN_TOGGLE
    elif yellow or green:
        # A green term after the position limit is still a visible (but
        # legally insufficient) disclosure cue: downgrade, never None.
        cls = DisclosureClass.YELLOW
    else:
        cls = DisclosureClass.NONE
    matches = sorted(green + yellow, key=lambda m: (m[1], m[0]))
    first_position = matches[0][1] if matches else None
    return DisclosureFinding(cls, tuple(matches), first_position, toggle_used)


def _detect_am_surfaces(surfaces: list[str], surface_set: set[str],
                        lexicon: Lexicon) -> AmFinding:
    fired = tuple(r.id for r in lexicon.am_rules if r.fires(surfaces, surface_set))
    if fired:
        return AmFinding(True, fired, None)
    return AmFinding(False, (), AmDisclosure.NOT_AM)


def classify_disclosure(post: Post, lexicon: Lexicon) -> DisclosureFinding:
    """Classify one post as green (words/toggle variants), yellow, or none.

    Green-by-words requires a green term among the first five tokens;
    green-by-toggle requires the paid-partnership toggle. A green term found
    only after the fifth token downgrades the post to yellow.
    """
    language = _require_language(post)
    surfaces = token_surfaces(post.text)
    return _classify_surfaces(post, language, surfaces, set(surfaces), lexicon)


def detect_affiliate(post: Post, lexicon: Lexicon) -> AmFinding:
    """Detect affiliate marketing by term co-occurrence rules."""
    _require_language(post)
    surfaces = token_surfaces(post.text)
    return _detect_am_surfaces(surfaces, set(surfaces), lexicon)


def classify_am_disclosure(disclosure: DisclosureFinding, am: AmFinding) -> AmFinding:
    """Fill in how (or whether) a detected AM post was disclosed."""
    if not am.is_am:
        return replace(am, am_disclosure=AmDisclosure.NOT_AM)
    if disclosure.disclosure_class.is_green:
        label = AmDisclosure.GREEN_DISCLOSED_AM
    elif disclosure.disclosure_class is DisclosureClass.YELLOW:
        label = AmDisclosure.YELLOW_DISCLOSED_AM
    else:
        label = AmDisclosure.UNDISCLOSED_AM
    return replace(am, am_disclosure=label)


def classify_post(post: Post, lexicon: Lexicon) -> tuple[DisclosureFinding, AmFinding]:
    """Disclosure and AM findings for one post, AM disclosure filled."""
    language = _require_language(post)
    surfaces = token_surfaces(post.text)
    surface_set = set(surfaces)
    disclosure = _classify_surfaces(post, language, surfaces, surface_set, lexicon)
    am = classify_am_disclosure(disclosure, _detect_am_surfaces(surfaces, surface_set, lexicon))
    return disclosure, am


def classify_corpus(corpus: Corpus, lexicon: Lexicon, threads: int = 1) -> list[PostFinding]:
    """Classify every analyzable (English/Dutch) post in the corpus.

    Output order follows corpus order regardless of thread count.
    """
    posts = [p for p in corpus.posts if p.language in ANALYZABLE_LANGUAGES]
    if threads <= 1:
        results = [classify_post(p, lexicon) for p in posts]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda p: classify_post(p, lexicon), posts, chunksize=256))
    return [
        PostFinding(post, corpus.account_for(post), disclosure, am)
        for post, (disclosure, am) in zip(posts, results)
    ]


_LANG_KEYS = {"en": Language.ENGLISH, "nl": Language.DUTCH}


def default_lexicon_path() -> Path:
    return Path(__file__).parent / "data" / "default_lexicon.toml"


def _term_table(data: dict, color: str) -> dict[Language, TermIndex]:
    table = data.get(color)
    if not isinstance(table, dict):
        raise ParseError(f"lexicon is missing the [{color}.en]/[{color}.nl] sections")
    out = {}
    for key, language in _LANG_KEYS.items():
        section = table.get(key)
        if not isinstance(section, dict) or "terms" not in section:
            raise ParseError(f"lexicon section [{color}.{key}] needs a 'terms' list")
        terms = section["terms"]
        if not isinstance(terms, list) or not all(isinstance(t, str) for t in terms):
            raise ParseError(f"[{color}.{key}] terms must be a list of strings")
        if not terms:
            raise EmptyTermSet(f"[{color}.{key}] terms list is empty")
        out[language] = TermIndex(terms)
    return out


def load_lexicon(path=None) -> Lexicon:
    """Load and validate a lexicon config; None loads the bundled default.

    Every term is normalized through the tokenizer's normalizer, so config
    entries like "Paid Partnership" or "#reclame" match their token form.
    """
    lexicon_path = Path(path) if path is not None else default_lexicon_path()
    try:
        blob = lexicon_path.read_bytes()
    except OSError as exc:
        raise IoError(f"cannot read lexicon {lexicon_path}: {exc}") from exc
    try:
        data = tomllib.loads(blob.decode("utf-8"))
    except (tomllib.TOMLDecodeError, UnicodeDecodeError) as exc:
        raise ParseError(f"lexicon {lexicon_path}: {exc}") from exc

    version = data.get("version")
    if not isinstance(version, str) or not version:
        raise ParseError(f"lexicon {lexicon_path}: a 'version' string is mandatory")

    green = _term_table(data, "green")
    yellow = _term_table(data, "yellow")

    allow_overlap = bool(data.get("allow_green_yellow_overlap", False))
    if not allow_overlap:
        for language in _LANG_KEYS.values():
            shared = set(green[language].terms) & set(yellow[language].terms)
            if shared:
                raise ParseError(
                    f"terms {sorted(shared)} are both green and yellow for "
                    f"{language.value}; set allow_green_yellow_overlap = true "
                    "to document the overlap")

    rules_data = data.get("am_rule", [])
    if not isinstance(rules_data, list):
        raise ParseError("am_rule must be an array of tables ([[am_rule]])")
    am_rules = []
    for i, rule in enumerate(rules_data, start=1):
        rule_id = rule.get("id") or f"am_rule_{i}"
        sets = rule.get("sets")
        if not isinstance(sets, list) or len(sets) < 2:
            raise EmptyTermSet(
                f"am_rule {rule_id!r} needs at least 2 term sets (co-occurrence)")
        indexes = []
        for j, terms in enumerate(sets, start=1):
            if not isinstance(terms, list) or not terms:
                raise EmptyTermSet(f"am_rule {rule_id!r} set {j} is empty")
            indexes.append(TermIndex(terms))
        am_rules.append(AmRule(rule_id, tuple(indexes)))
    seen_ids = [r.id for r in am_rules]
    if len(seen_ids) != len(set(seen_ids)):
        raise ParseError("am_rule ids must be unique")

    return Lexicon(green_terms=green, yellow_terms=yellow,
                   am_rules=tuple(am_rules), version=version)
