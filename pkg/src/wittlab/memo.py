"""Memoisation for the expensive combinatorial kernels.

Every cached function keeps an in-process ``functools.lru_cache``.  When a
cache directory is configured (``--cache-dir`` or ``WITTLAB_CACHE``) values
are also stored on disk, one JSON file per call, named by the SHA-256 of the
function name and arguments.  Files are written atomically, so concurrent
processes can share a directory and any file can be deleted at any time.
"""

from __future__ import annotations

import functools
import hashlib
import json
import os
import tempfile
from pathlib import Path
from typing import Callable, Optional

_cache_dir: Optional[Path] = None


def configure(path: Optional[str]) -> None:
    """Set the disk cache directory.  A non-empty WITTLAB_CACHE wins over ``path``."""
    global _cache_dir
    path = os.environ.get("WITTLAB_CACHE") or path
    _cache_dir = Path(path) if path else None
    if _cache_dir is not None:
        _cache_dir.mkdir(parents=True, exist_ok=True)


def cache_dir() -> Optional[Path]:
    return _cache_dir


def _key(name: str, args: tuple) -> str:
    return hashlib.sha256(repr((name, args)).encode()).hexdigest()


def persistent(encode: Callable = lambda v: v, decode: Callable = lambda v: v):
    """Decorator: in-memory cache plus optional content-addressed disk cache.

    ``encode``/``decode`` convert the return value to and from JSON-able data.
    Arguments must have a stable ``repr`` (ints, tuples of ints, strings).
    """

    def wrap(fn):
        name = f"{fn.__module__}.{fn.__qualname__}"

        @functools.lru_cache(maxsize=None)
        def cached(*args):
            if _cache_dir is None:
                return fn(*args)
            path = _cache_dir / (_key(name, args) + ".json")
            try:
                return decode(json.loads(path.read_text()))
            except (OSError, ValueError):
                pass
            value = fn(*args)
            fd, tmp = tempfile.mkstemp(dir=_cache_dir, suffix=".tmp")
            with os.fdopen(fd, "w") as fh:
                json.dump(encode(value), fh)
            os.replace(tmp, path)
            return value

        functools.update_wrapper(cached, fn)
        return cached

    return wrap
