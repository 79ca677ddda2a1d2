"""
Word families on {1,2}: all binary words, Fibonacci words (no ``11``), those
ending in 1, words with no ``22``, the psi-fixed family H, and the
partition-described families R, R' and T.

Enumeration is lexicographic with 1 < 2. ``fib``, ``fib1`` and ``g`` are
generated directly; the others filter all 2^n binary words.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Iterator, NamedTuple, Sequence

from .partitions import durfee, lambda_of
from .words import Word, WordError, binary_word, block_form

__all__ = [
    "FAMILY_TAGS", "FamilyId", "DEFAULT_MAX_N", "FamilyBoundError",
    "is_member", "enumerate_family", "iter_family", "iter_binary",
]

FAMILY_TAGS = ("binary", "fib", "fib1", "g", "h", "r", "rprime", "t")
DEFAULT_MAX_N = 26


class FamilyBoundError(ValueError):
    pass


class FamilyId(NamedTuple):
    tag: str
    n: int

    def check(self) -> "FamilyId":
        if self.tag not in FAMILY_TAGS:
            raise ValueError(f"unknown family {self.tag!r}; choose from {', '.join(FAMILY_TAGS)}")
        if self.n < 0:
            raise ValueError(f"family length must be >= 0, got {self.n}")
        return self


def _no_factor(w: Sequence[int], letter: int) -> bool:
    return all(not (w[i] == letter and w[i + 1] == letter) for i in range(len(w) - 1))


def _in_h(w: Sequence[int]) -> bool:
    b = block_form(w)
    d, m = b.d, b.m
    if d == 0:
        return False
    return m[0] == m[d] - 1 and all(m[i] == m[d - i] for i in range(1, d))


def _lambda_data(w: Sequence[int]):
    lam = lambda_of(w)
    ones = sum(1 for a in w if a == 1)
    return lam, ones, len(w) - ones


def _in_r(w: Sequence[int], exact_top: bool = False) -> bool:
    lam, ones, twos = _lambda_data(w)
    top = lam.largest
    if top > twos or (exact_top and top != twos):
        return False
    dd = durfee(lam)
    return ones - 1 <= dd.d <= ones and not dd.below.parts


def _in_t(w: Sequence[int]) -> bool:
    lam, ones, twos = _lambda_data(w)
    length = lam.length
    # the empty partition fails the l(lambda) = lambda_l clause
    return (length >= 1 and lam.largest <= twos and lam.parts[-1] == length
            and ones - 1 <= length <= ones)


def _partition_summary(w: Sequence[int]) -> tuple[int, int, int, int, int]:
    """(ones, twos, parts, smallest part, largest part) of lambda_of(w) in one pass.

    Parts read left to right are weakly increasing, so the first nonzero
    count is the smallest part and the last one the largest.
    """
    ones = twos = length = smallest = largest = 0
    for a in w:
        if a == 2:
            twos += 1
        else:
            ones += 1
            if twos:
                length += 1
                largest = twos
                if length == 1:
                    smallest = twos
    return ones, twos, length, smallest, largest


def _fast_r(w: Sequence[int], exact_top: bool = False) -> bool:
    # B(lambda) empty <=> smallest part >= number of parts, and then d(lambda) = l(lambda)
    ones, twos, length, smallest, largest = _partition_summary(w)
    if exact_top and largest != twos:
        return False
    return ones - 1 <= length <= ones and smallest >= length


def _fast_t(w: Sequence[int]) -> bool:
    ones, twos, length, smallest, largest = _partition_summary(w)
    return length >= 1 and smallest == length and ones - 1 <= length <= ones


_FAST_FILTERS = {
    "r": _fast_r,
    "rprime": lambda w: _fast_r(w, exact_top=True),
    "t": _fast_t,
    "h": _in_h,
}


def _check_member(tag: str, w: Word) -> bool:
    if tag == "binary":
        return True
    if tag == "fib":
        return _no_factor(w, 1)
    if tag == "fib1":
        return len(w) >= 1 and w[-1] == 1 and _no_factor(w, 1)
    if tag == "g":
        return _no_factor(w, 2)
    if tag == "h":
        return _in_h(w)
    if tag == "r":
        return _in_r(w)
    if tag == "rprime":
        return _in_r(w, exact_top=True)
    if tag == "t":
        return _in_t(w)
    raise ValueError(f"unknown family {tag!r}; choose from {', '.join(FAMILY_TAGS)}")


def is_member(tag: str, w: Sequence[int], n: int | None = None) -> bool:
    """Membership test; ``n`` (if given) must equal ``len(w)``."""
    w = binary_word(w)
    if n is not None and len(w) != n:
        raise WordError(f"word of length {len(w)} tested against family {tag} at n={n}")
    return _check_member(tag, w)


def iter_binary(n: int) -> Iterator[Word]:
    return product((1, 2), repeat=n)


def _avoiding(n: int, letter: int) -> Iterator[Word]:
    """Words of length n on {1,2} without two adjacent ``letter``s, lex order."""
    def rec(prefix: list[int]):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for a in (1, 2):
            if a == letter and prefix and prefix[-1] == letter:
                continue
            prefix.append(a)
            yield from rec(prefix)
            prefix.pop()
    return rec([])


def _check_bound(n: int, max_n: int):
    if n > max_n:
        raise FamilyBoundError(
            f"n={n} exceeds the enumeration bound {max_n}; raise it with --max-n")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")


def iter_family(tag: str, n: int, max_n: int = DEFAULT_MAX_N) -> Iterator[Word]:
    FamilyId(tag, n).check()
    _check_bound(n, max_n)
    if tag == "binary":
        return iter_binary(n)
    if tag == "fib":
        return _avoiding(n, 1)
    if tag == "fib1":
        return (w for w in _avoiding(n, 1) if w and w[-1] == 1)
    if tag == "g":
        return _avoiding(n, 2)
    # same sets as is_member; the bulk filters are cross-checked in the tests
    keep = _FAST_FILTERS[tag]
    return (w for w in iter_binary(n) if keep(w))


@lru_cache(maxsize=256)
def _cached(tag: str, n: int) -> tuple[Word, ...]:
    return tuple(iter_family(tag, n, max_n=n))


def enumerate_family(tag: str, n: int, max_n: int = DEFAULT_MAX_N) -> tuple[Word, ...]:
    """All members of length ``n`` in lexicographic order.

    >>> [''.join(map(str, w)) for w in enumerate_family("fib", 3)]
    ['121', '122', '212', '221', '222']
    """
    FamilyId(tag, n).check()
    _check_bound(n, max_n)
    if tag == "binary":
        # too large to keep around
        return tuple(iter_binary(n))
    return _cached(tag, n)
