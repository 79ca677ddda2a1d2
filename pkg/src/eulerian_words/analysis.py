"""
Statistic distributions over word sets, images of families under the maps,
and Eulerian / Mahonian / Euler-Mahonian pair checks.

A word set is described either by an explicit collection of words, a family
tag (``"fib"``), or a map applied to a family (``"phi1inv(fib)"``); the last
form keeps multiplicities so non-injective maps are visible.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .bijections import get_map
from .families import DEFAULT_MAX_N, iter_family
from .words import Word, des, exc, inv, maj

__all__ = [
    "STATS", "JOINT_PAIRS", "PAIR_KINDS", "DistPolynomial", "ImageResult", "PairReport",
    "distribution", "joint_distribution", "image", "image_multiset", "resolve_set",
    "check_pair", "find_preimages", "first_image_difference",
]

STATS: dict[str, Callable[[Sequence[int]], int]] = {
    "des": des, "maj": maj, "inv": inv, "exc": exc,
}
JOINT_PAIRS = (("des", "maj"), ("exc", "inv"))
PAIR_KINDS = ("eulerian", "mahonian", "euler_mahonian")


@dataclass(frozen=True)
class DistPolynomial:
    """Finite coefficient table: exponent (int or pair) -> positive count."""

    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        if any(c <= 0 for c in self.coeffs.values()):
            raise ValueError("distribution counts must be positive")

    @property
    def total(self) -> int:
        return sum(self.coeffs.values())

    def exponents(self) -> list:
        return sorted(self.coeffs)

    def merge(self, other: "DistPolynomial") -> "DistPolynomial":
        return DistPolynomial(dict(Counter(self.coeffs) + Counter(other.coeffs)))

    def first_difference(self, other: "DistPolynomial"):
        """Least exponent whose coefficients differ, or None."""
        for e in sorted(set(self.coeffs) | set(other.coeffs)):
            if self.coeffs.get(e, 0) != other.coeffs.get(e, 0):
                return e
        return None

    def rows(self) -> list[tuple]:
        """(exponent..., count) rows in exponent order, for CSV export."""
        out = []
        for e in self.exponents():
            key = e if isinstance(e, tuple) else (e,)
            out.append(key + (self.coeffs[e],))
        return out

    def __str__(self):
        return "{" + ", ".join(f"{e}: {self.coeffs[e]}" for e in self.exponents()) + "}"


def _stat(name: str) -> Callable[[Sequence[int]], int]:
    try:
        return STATS[name]
    except KeyError:
        raise ValueError(f"unknown statistic {name!r}; choose from {', '.join(STATS)}") from None


def distribution(words: Iterable[Sequence[int]], stat: str) -> DistPolynomial:
    f = _stat(stat)
    return DistPolynomial(dict(Counter(f(w) for w in words)))


def joint_distribution(words: Iterable[Sequence[int]], pair: tuple[str, str]) -> DistPolynomial:
    f, g = _stat(pair[0]), _stat(pair[1])
    return DistPolynomial(dict(Counter((f(w), g(w)) for w in words)))


@dataclass(frozen=True)
class ImageResult:
    words: tuple[Word, ...]   # sorted, deduplicated
    multiset_size: int

    @property
    def injective(self) -> bool:
        return len(self.words) == self.multiset_size


def image_multiset(map_name: str, tag: str, n: int, max_n: int = DEFAULT_MAX_N) -> list[Word]:
    f = get_map(map_name)
    return [f(w) for w in iter_family(tag, n, max_n)]


def image(map_name: str, tag: str, n: int, max_n: int = DEFAULT_MAX_N) -> ImageResult:
    """Image of a family, sorted and deduplicated, with the pre-dedup size.

    >>> r = image("gamma", "fib", 3)
    >>> [''.join(map(str, w)) for w in r.words], r.multiset_size
    (['121', '122', '212', '222'], 5)
    """
    images = image_multiset(map_name, tag, n, max_n)
    return ImageResult(tuple(sorted(set(images))), len(images))


_MAPPED = re.compile(r"^\s*(\w+)\s*\(\s*(\w+)\s*\)\s*$")


def resolve_set(descriptor, n: int | None = None, max_n: int = DEFAULT_MAX_N) -> tuple[str, list[Word]]:
    """Turn a set descriptor into (label, words).

    ``"fib"`` -> family members; ``"phi2(fib)"`` -> image multiset; any other
    iterable is taken as the words themselves.
    """
    if isinstance(descriptor, str):
        if n is None:
            raise ValueError(f"length n is required to resolve {descriptor!r}")
        hit = _MAPPED.match(descriptor)
        if hit:
            map_name, tag = hit.groups()
            return f"{map_name}({tag})", image_multiset(map_name, tag, n, max_n)
        tag = descriptor.strip()
        return tag, list(iter_family(tag, n, max_n))
    words = [tuple(w) for w in descriptor]
    label = "{" + ",".join("".join(map(str, w)) for w in words) + "}"
    return label, words


@dataclass(frozen=True)
class PairReport:
    kind: str
    left: str
    right: str
    n: int | None
    equal: bool
    left_dist: DistPolynomial
    right_dist: DistPolynomial
    witness: object = None


def _pair_dists(kind: str, left: list[Word], right: list[Word]):
    if kind == "eulerian":
        return distribution(left, "des"), distribution(right, "exc")
    if kind == "mahonian":
        return distribution(left, "maj"), distribution(right, "inv")
    if kind == "euler_mahonian":
        return (joint_distribution(left, ("des", "maj")),
                joint_distribution(right, ("exc", "inv")))
    raise ValueError(f"unknown pair kind {kind!r}; choose from {', '.join(PAIR_KINDS)}")


def check_pair(kind: str, left, right, n: int | None = None,
               max_n: int = DEFAULT_MAX_N) -> PairReport:
    """Compare des/maj/(des,maj) over ``left`` with exc/inv/(exc,inv) over ``right``."""
    left_label, left_words = resolve_set(left, n, max_n)
    right_label, right_words = resolve_set(right, n, max_n)
    ld, rd = _pair_dists(kind, left_words, right_words)
    witness = ld.first_difference(rd)
    return PairReport(kind, left_label, right_label, n, witness is None, ld, rd, witness)


def find_preimages(map_name: str, tag: str, n: int, target: Sequence[int],
                   max_n: int = DEFAULT_MAX_N) -> list[Word]:
    f = get_map(map_name)
    target = tuple(target)
    return [w for w in iter_family(tag, n, max_n) if f(w) == target]


def first_image_difference(map_a: str, map_b: str, tag: str, n_values: Iterable[int],
                           max_n: int = DEFAULT_MAX_N) -> tuple[int, Word] | None:
    """Smallest n (and least word) where the two images of a family differ."""
    for n in n_values:
        a = set(image(map_a, tag, n, max_n).words)
        b = set(image(map_b, tag, n, max_n).words)
        if a != b:
            return n, min(a ^ b)
    return None
