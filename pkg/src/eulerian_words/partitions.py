"""Binary word -> integer partition correspondence and Durfee square data."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .words import binary_word

__all__ = ["Partition", "DurfeeData", "lambda_of", "durfee", "weight"]


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        p = self.parts
        if any(x <= 0 for x in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
            raise ValueError(f"not a partition: {p!r}")

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __iter__(self):
        return iter(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def largest(self) -> int:
        """First part, 0 for the empty partition."""
        return self.parts[0] if self.parts else 0


@dataclass(frozen=True)
class DurfeeData:
    d: int
    below: Partition


def lambda_of(w: Sequence[int]) -> Partition:
    """Parts are the numbers of 2s strictly left of each 1, zeros dropped.

    Every (2, 1) inversion contributes one cell, so the weight equals inv(w).

    >>> lambda_of((2, 2, 1, 2, 1)).parts
    (3, 2)
    """
    twos = 0
    parts = []
    for a in binary_word(w):
        if a == 2:
            twos += 1
        elif twos:
            parts.append(twos)
    parts.reverse()
    return Partition(tuple(parts))


def durfee(p: Partition | Sequence[int]) -> DurfeeData:
    parts = tuple(p)
    d = 0
    while d < len(parts) and parts[d] >= d + 1:
        d += 1
    return DurfeeData(d, Partition(parts[d:]))


def weight(p: Partition | Sequence[int]) -> int:
    return sum(p)
