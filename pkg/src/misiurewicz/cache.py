"""On-disk content-addressed cache for polynomials and trace values.

Entries live under ``<root>/<sha256[:2]>/<sha256>.json`` where the hash covers
(kind, m, n, provenance, cache format version).  A format bump therefore makes
old entries unreachable; ``gc`` deletes them.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path

from . import __version__

CACHE_FORMAT = 1


def default_cache_dir() -> Path:
    env = os.environ.get("MISIUREWICZ_CACHE")
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "misiurewicz"


def entry_key(kind: str, m: int, n: int, provenance: str, version: int = CACHE_FORMAT) -> str:
    text = json.dumps([kind, m, n, provenance, version])
    return hashlib.sha256(text.encode()).hexdigest()


class Cache:
    def __init__(self, root=None):
        self.root = Path(root) if root is not None else default_cache_dir()

    def _path(self, key: str) -> Path:
        return self.root / key[:2] / f"{key}.json"

    def get(self, kind: str, m: int, n: int, provenance: str):
        path = self._path(entry_key(kind, m, n, provenance))
        try:
            doc = json.loads(path.read_text())
        except (OSError, ValueError):
            return None
        if doc.get("format") != CACHE_FORMAT:
            return None
        return doc["value"]

    def put(self, kind: str, m: int, n: int, provenance: str, value) -> Path:
        key = entry_key(kind, m, n, provenance)
        path = self._path(key)
        path.parent.mkdir(parents=True, exist_ok=True)
        doc = {"format": CACHE_FORMAT, "kind": kind, "m": m, "n": n, "provenance": provenance,
               "tool_version": __version__, "value": value}
        # write then rename so concurrent readers never see a partial file
        fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            json.dump(doc, fh)
        os.replace(tmp, path)
        return path

    def entries(self):
        if not self.root.exists():
            return
        for path in sorted(self.root.glob("*/*.json")):
            try:
                doc = json.loads(path.read_text())
            except (OSError, ValueError):
                doc = {}
            yield path, doc

    def list(self) -> list[dict]:
        out = []
        for path, doc in self.entries():
            out.append({"path": str(path), "kind": doc.get("kind"), "m": doc.get("m"),
                        "n": doc.get("n"), "provenance": doc.get("provenance"),
                        "stale": doc.get("format") != CACHE_FORMAT,
                        "bytes": path.stat().st_size})
        return out

    def gc(self) -> list[str]:
        """Delete stale or unreadable entries; returns the removed paths."""
        removed = []
        for path, doc in list(self.entries()):
            fresh = doc.get("format") == CACHE_FORMAT and path.stem == entry_key(
                doc.get("kind"), doc.get("m"), doc.get("n"), doc.get("provenance"))
            if not fresh:
                path.unlink()
                removed.append(str(path))
        for tmp in self.root.glob("*/*.tmp") if self.root.exists() else ():
            tmp.unlink()
            removed.append(str(tmp))
        return removed
