"""Mapping of IR identifiers to legal target-language identifiers.

Reserved words are replaced by their uppercase form; any remaining collision
is resolved by appending underscores until the name is fresh.  Names starting
with the helper prefix ``fn_`` are also treated as reserved so emitted code
cannot shadow lifted helper functions.
"""

from __future__ import annotations

import keyword
import re

RESERVED: frozenset[str] = frozenset(keyword.kwlist) | frozenset(keyword.softkwlist)

HELPER_PREFIX = "fn_"


def is_reserved(name: str) -> bool:
    return name in RESERVED or name.startswith(HELPER_PREFIX)


class NameEnv:
    """Per-scope name mapping; injective, never emits a reserved word."""

    def __init__(self):
        self.taken: set[str] = set()
        self.mapping: dict[str, str] = {}
        self._dropped = 0

    def sanitize(self, name: str) -> str:
        candidate = re.sub(r"[^0-9A-Za-z_]", "_", name)
        if is_reserved(candidate):
            candidate = candidate.upper()
        while candidate in self.taken or is_reserved(candidate):
            candidate += "_"
        self.taken.add(candidate)
        self.mapping[name] = candidate
        return candidate

    def lookup(self, name: str) -> str:
        return self.mapping[name]

    def fresh_dropped(self) -> str:
        name = "_" if self._dropped == 0 else f"_{self._dropped}"
        self._dropped += 1
        while name in self.taken:
            name += "_"
        self.taken.add(name)
        return name

    def fresh(self, prefix: str) -> str:
        """A fresh synthetic name (loop counters, accumulator lists)."""
        candidate, n = prefix, 1
        while candidate in self.taken or is_reserved(candidate):
            candidate = f"{prefix}{n}"
            n += 1
        self.taken.add(candidate)
        return candidate
