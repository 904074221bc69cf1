"""Persistent query-result cache keyed by the rendered query string.

When a path is attached, every store writes the whole file atomically, so a
run interrupted by budget exhaustion keeps exactly the results it paid for.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from .backends import RawSnippet, SearchResult
from .ioutil import atomic_write_text


def utc_now_iso() -> str:
    return datetime.now(timezone.utc).isoformat()


@dataclass(frozen=True)
class CacheEntry:
    result: SearchResult
    fetched_at: str


class QueryCache:
    def __init__(self, path=None):
        self.path = Path(path) if path is not None else None
        self._entries: dict[str, CacheEntry] = {}

    @classmethod
    def open(cls, path) -> "QueryCache":
        """Load the cache file at path, or start empty when it does not exist.

        Raises ValueError when the file exists but does not match the cache
        schema, and OSError when it cannot be read at all.
        """
        cache = cls(path)
        target = Path(path)
        if target.exists():
            cache._entries = _parse_entries(target.read_text(encoding="utf-8"), str(target))
        return cache

    def __len__(self) -> int:
        return len(self._entries)

    def lookup(self, rendered: str) -> SearchResult | None:
        entry = self._entries.get(rendered)
        return entry.result if entry is not None else None

    def store(self, rendered: str, result: SearchResult, fetched_at: str | None = None) -> None:
        self._entries[rendered] = CacheEntry(result=result, fetched_at=fetched_at or utc_now_iso())
        if self.path is not None:
            self.save()

    def clear(self) -> None:
        self._entries = {}
        if self.path is not None:
            self.save()

    def save(self) -> None:
        if self.path is None:
            raise ValueError("cache has no backing path")
        atomic_write_text(self.path, self._dump())

    def _dump(self) -> str:
        payload = {
            rendered: {
                "hit_count": entry.result.hit_count,
                "snippets": [
                    {"url": s.url, "title": s.title, "abstract": s.abstract}
                    for s in entry.result.snippets
                ],
                "fetched_at": entry.fetched_at,
            }
            for rendered, entry in self._entries.items()
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _parse_entries(text: str, source: str) -> dict[str, CacheEntry]:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"{source}: cache file is not valid JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise ValueError(f"{source}: cache file must hold a JSON object")
    entries: dict[str, CacheEntry] = {}
    for rendered, row in payload.items():
        try:
            snippets = tuple(
                RawSnippet(url=str(s["url"]), title=str(s["title"]), abstract=str(s["abstract"]))
                for s in row["snippets"]
            )
            entries[rendered] = CacheEntry(
                result=SearchResult(hit_count=int(row["hit_count"]), snippets=snippets),
                fetched_at=str(row["fetched_at"]),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"{source}: malformed cache entry for {rendered!r}: {exc!r}") from exc
    return entries
