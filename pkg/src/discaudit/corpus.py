"""Canonical data model for posts and accounts, with line-delimited corpus I/O.

Corpus files are UTF-8 JSON Lines: one record per line, lowercase snake_case
keys. A loaded corpus is read-only; the language-assignment stage returns a
new corpus rather than mutating posts in place.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from datetime import datetime, timezone
from enum import Enum
from pathlib import Path
from typing import Iterable, Optional

from .errors import (
    DuplicateId,
    IoError,
    MissingField,
    NegativeCount,
    RecordError,
    ToggleOnNonInstagram,
    UnknownAccount,
    UnknownPlatform,
    ValidationError,
)


class Platform(Enum):
    INSTAGRAM = "Instagram"
    YOUTUBE = "YouTube"
    TIKTOK = "TikTok"


class Language(Enum):
    ENGLISH = "English"
    DUTCH = "Dutch"
    OTHER = "Other"


#: Languages that analytics operate on; OTHER posts are excluded.
ANALYZABLE_LANGUAGES = (Language.ENGLISH, Language.DUTCH)


@dataclass(frozen=True, slots=True)
class Post:
    """One social-media text item (caption or video description)."""

    id: str
    account_id: str
    platform: Platform
    timestamp: datetime
    text: str
    likes: int
    comments: int
    toggle: Optional[bool] = None
    language: Optional[Language] = None


@dataclass(frozen=True, slots=True)
class Account:
    """Influencer identity on one platform, with a follower snapshot."""

    id: str
    handle: str
    platform: Platform
    followers: int
    is_influencer: bool


@dataclass(frozen=True, slots=True)
class LoadReport:
    """Counts from one corpus load; invalid and non-influencer drops are separate."""

    post_lines_in: int = 0
    posts_loaded: int = 0
    dropped_non_influencer: int = 0
    dropped_invalid: int = 0


@dataclass(frozen=True)
class Corpus:
    """Validated posts plus the accounts they reference. Immutable after load."""

    posts: tuple[Post, ...]
    accounts: tuple[Account, ...]
    load_report: LoadReport = field(default_factory=LoadReport)

    def __post_init__(self):
        object.__setattr__(
            self, "_by_key", {(a.id, a.platform): a for a in self.accounts}
        )

    def account_for(self, post: Post) -> Account:
        return self._by_key[(post.account_id, post.platform)]

    def has_account(self, account_id: str, platform: Platform) -> bool:
        return (account_id, platform) in self._by_key

    def with_posts(self, posts: Iterable[Post]) -> "Corpus":
        return replace(self, posts=tuple(posts))


def parse_timestamp(value, line: int = 0) -> datetime:
    """Parse an ISO-8601 timestamp; naive values are treated as UTC."""
    if isinstance(value, datetime):
        dt = value
    else:
        try:
            dt = datetime.fromisoformat(str(value).replace("Z", "+00:00"))
        except ValueError:
            raise RecordError(f"unparseable timestamp {value!r}", "timestamp", line)
    if dt.tzinfo is None:
        return dt.replace(tzinfo=timezone.utc)
    return dt.astimezone(timezone.utc)


def format_timestamp(dt: datetime) -> str:
    return dt.astimezone(timezone.utc).isoformat().replace("+00:00", "Z")


def _require(raw: dict, name: str, line: int):
    if name not in raw or raw[name] is None:
        raise MissingField(f"required field '{name}' is missing", name, line)
    return raw[name]


def _count(raw: dict, name: str, line: int) -> int:
    value = _require(raw, name, line)
    try:
        n = int(value)
    except (TypeError, ValueError):
        raise RecordError(f"field '{name}' is not an integer: {value!r}", name, line)
    if n < 0:
        raise NegativeCount(f"field '{name}' is negative: {n}", name, line)
    return n


def _platform(raw: dict, line: int) -> Platform:
    value = _require(raw, "platform", line)
    try:
        return Platform(value)
    except ValueError:
        known = ", ".join(p.value for p in Platform)
        raise UnknownPlatform(f"unknown platform {value!r} (expected one of: {known})",
                              "platform", line)


def validate_post(raw: dict, line: int = 0) -> Post:
    """Build a Post from one decoded corpus record, enforcing all invariants.

    The text field is preserved byte-exact; only its container is validated.
    """
    platform = _platform(raw, line)
    toggle = raw.get("toggle")
    if toggle is not None:
        if not isinstance(toggle, bool):
            raise RecordError(f"toggle must be a boolean, got {toggle!r}", "toggle", line)
        if platform is not Platform.INSTAGRAM:
            raise ToggleOnNonInstagram(
                f"toggle present on {platform.value} post; toggle data exists only on Instagram",
                "toggle", line)
    language = None
    if raw.get("language") is not None:
        try:
            language = Language(raw["language"])
        except ValueError:
            raise RecordError(f"unknown language {raw['language']!r}", "language", line)
    if "text" not in raw:
        raise MissingField("required field 'text' is missing", "text", line)
    text = raw["text"]
    if not isinstance(text, str):
        raise RecordError(f"text must be a string, got {type(text).__name__}", "text", line)
    return Post(
        id=str(_require(raw, "id", line)),
        account_id=str(_require(raw, "account_id", line)),
        platform=platform,
        timestamp=parse_timestamp(_require(raw, "timestamp", line), line),
        text=text,
        likes=_count(raw, "likes", line),
        comments=_count(raw, "comments", line),
        toggle=toggle,
        language=language,
    )


def validate_account(raw: dict, line: int = 0) -> Account:
    return Account(
        id=str(_require(raw, "id", line)),
        handle=str(_require(raw, "handle", line)),
        platform=_platform(raw, line),
        followers=_count(raw, "followers", line),
        is_influencer=bool(_require(raw, "is_influencer", line)),
    )


def read_jsonl(path) -> Iterable[tuple[int, dict]]:
    """Yield (line_number, record) pairs from a JSON Lines file."""
    path = Path(path)
    try:
        raw = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc}") from exc
    for i, line in enumerate(raw.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ValidationError([RecordError(f"invalid JSON: {exc.msg}", line=i)])
        if not isinstance(record, dict):
            raise ValidationError([RecordError("record is not an object", line=i)])
        yield i, record


def load_corpus(posts_path, accounts_path, strict: bool = True) -> Corpus:
    """Load and validate a corpus from posts and accounts files.

    Posts from non-influencer accounts are dropped and counted. In strict mode
    (the default) any invalid line fails the whole load with a ValidationError
    listing the first 20 failures; with strict=False invalid lines are dropped
    and counted separately in the load report.
    """
    errors: list[RecordError] = []

    accounts: list[Account] = []
    seen_accounts: set[tuple[str, Platform]] = set()
    for lineno, record in read_jsonl(accounts_path):
        try:
            account = validate_account(record, lineno)
            key = (account.id, account.platform)
            if key in seen_accounts:
                raise DuplicateId(
                    f"duplicate account ({account.id!r}, {account.platform.value})",
                    "id", lineno)
            seen_accounts.add(key)
            accounts.append(account)
        except RecordError as exc:
            errors.append(exc)
    if errors:
        raise ValidationError(errors)

    by_key = {(a.id, a.platform): a for a in accounts}
    posts: list[Post] = []
    seen_posts: set[str] = set()
    lines_in = 0
    dropped_non_influencer = 0
    dropped_invalid = 0
    for lineno, record in read_jsonl(posts_path):
        lines_in += 1
        try:
            post = validate_post(record, lineno)
            if post.id in seen_posts:
                raise DuplicateId(f"duplicate post id {post.id!r}", "id", lineno)
            account = by_key.get((post.account_id, post.platform))
            if account is None:
                raise UnknownAccount(
                    f"post {post.id!r} references unknown account "
                    f"({post.account_id!r}, {post.platform.value})",
                    "account_id", lineno)
        except RecordError as exc:
            if strict:
                errors.append(exc)
            else:
                dropped_invalid += 1
            continue
        seen_posts.add(post.id)
        if not account.is_influencer:
            dropped_non_influencer += 1
            continue
        posts.append(post)
    if errors:
        raise ValidationError(errors)

    report = LoadReport(
        post_lines_in=lines_in,
        posts_loaded=len(posts),
        dropped_non_influencer=dropped_non_influencer,
        dropped_invalid=dropped_invalid,
    )
    return Corpus(posts=tuple(posts), accounts=tuple(accounts), load_report=report)


def post_to_record(post: Post) -> dict:
    record = {
        "id": post.id,
        "account_id": post.account_id,
        "platform": post.platform.value,
        "timestamp": format_timestamp(post.timestamp),
        "text": post.text,
        "likes": post.likes,
        "comments": post.comments,
    }
    if post.toggle is not None:
        record["toggle"] = post.toggle
    if post.language is not None:
        record["language"] = post.language.value
    return record


def account_to_record(account: Account) -> dict:
    return {
        "id": account.id,
        "handle": account.handle,
        "platform": account.platform.value,
        "followers": account.followers,
        "is_influencer": account.is_influencer,
    }


def write_jsonl(records: Iterable[dict], path) -> None:
    path = Path(path)
    try:
        with path.open("w", encoding="utf-8", newline="\n") as fh:
            for record in records:
                fh.write(json.dumps(record, ensure_ascii=False))
                fh.write("\n")
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from exc


def write_corpus(corpus: Corpus, posts_path, accounts_path) -> None:
    """Write a corpus back to disk; round-trips field-equal with load_corpus."""
    write_jsonl((post_to_record(p) for p in corpus.posts), posts_path)
    write_jsonl((account_to_record(a) for a in corpus.accounts), accounts_path)
