"""Append-only JSON-lines store of count reports.

Each line is ``{"key": {...}, "report": {...}}``.  Lines are never rewritten;
a lookup returns the first record whose key matches.
"""
from __future__ import annotations

import json
import os
import threading
from pathlib import Path

CACHE_ENV = "TRICOUNT_CACHE"
DEFAULT_CACHE = Path(".tricount") / "cache.jsonl"

_write_lock = threading.Lock()


def cache_path() -> Path:
    return Path(os.environ.get(CACHE_ENV) or DEFAULT_CACHE)


def cache_key(sha256: str, method: str, flags: dict) -> dict:
    return {"sha256": sha256, "method": method, "flags": dict(sorted(flags.items()))}


class ResultCache:
    def __init__(self, path: str | Path | None = None):
        self.path = Path(path) if path is not None else cache_path()

    def lookup(self, key: dict) -> dict | None:
        if not self.path.exists():
            return None
        with self.path.open(encoding="utf-8") as fh:
            for line in fh:
                try:
                    rec = json.loads(line)
                except json.JSONDecodeError:
                    # a torn final line from an interrupted writer
                    continue
                if rec.get("key") == key:
                    return rec["report"]
        return None

    def append(self, key: dict, report: dict) -> None:
        line = json.dumps({"key": key, "report": report}, sort_keys=True) + "\n"
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with _write_lock, self.path.open("a", encoding="utf-8") as fh:
            fh.write(line)
