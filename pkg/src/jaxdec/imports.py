"""Deduplicated accumulation of import lines for the emitted module."""

from __future__ import annotations


class ImportSet:
    """A set of import statement texts; emission is sorted so output is
    byte-deterministic (the order of imports carries no meaning)."""

    def __init__(self, lines=()):
        self._lines: set[str] = set(lines)

    def require(self, line: str) -> "ImportSet":
        self._lines.add(line)
        return self

    def emit(self) -> list[str]:
        return sorted(self._lines)

    def __contains__(self, line: str) -> bool:
        return line in self._lines

    def __len__(self) -> int:
        return len(self._lines)
