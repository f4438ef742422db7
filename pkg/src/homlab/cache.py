"""Append-only JSONL cache of hom counts keyed by isomorphism certificates."""

from __future__ import annotations

import json
import logging
import threading
from pathlib import Path

from .canon import certificate
from .graphs import HGraph, SimpleGraph

log = logging.getLogger(__name__)

ENGINE_VERSION = "homlab-count-1"
CACHE_FILE = "counts.jsonl"


class CountCache:
    """Counts for (G, H) pairs up to isomorphism of each side.

    Each record is one JSON line ``{g_certificate, h_certificate, count,
    engine}``; certificates are hex and counts decimal strings.  Duplicate
    lines from concurrent writers collapse on load.
    """

    def __init__(self, directory: str | Path):
        self.path = Path(directory) / CACHE_FILE
        self.path.parent.mkdir(parents=True, exist_ok=True)
        self._lock = threading.Lock()
        self._data: dict[tuple[str, str], int] = {}
        self.hits = 0
        self.misses = 0
        self._load()

    def _load(self) -> None:
        if not self.path.exists():
            return
        with self.path.open(encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                try:
                    rec = json.loads(line)
                    if rec.get("engine") != ENGINE_VERSION:
                        continue
                    key = (rec["g_certificate"], rec["h_certificate"])
                    count = int(rec["count"])
                except (ValueError, KeyError, TypeError):
                    log.warning("%s:%d: skipping unreadable cache record", self.path, lineno)
                    continue
                prev = self._data.setdefault(key, count)
                if prev != count:
                    log.warning("%s:%d: conflicting cached counts for one key", self.path, lineno)

    @staticmethod
    def key(g: SimpleGraph, h: HGraph) -> tuple[str, str]:
        return certificate(g).hex(), certificate(h).hex()

    def get(self, g: SimpleGraph, h: HGraph) -> int | None:
        value = self._data.get(self.key(g, h))
        if value is None:
            self.misses += 1
        else:
            self.hits += 1
        return value

    def put(self, g: SimpleGraph, h: HGraph, count: int) -> None:
        key = self.key(g, h)
        with self._lock:
            if key in self._data:
                return
            self._data[key] = count
            line = json.dumps(
                {"g_certificate": key[0], "h_certificate": key[1], "count": str(count), "engine": ENGINE_VERSION},
                sort_keys=True,
            )
            with self.path.open("a", encoding="utf-8") as fh:
                fh.write(line + "\n")

    def __len__(self) -> int:
        return len(self._data)
