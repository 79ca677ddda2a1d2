"""
Words over the positive integers, their statistics, and the run-length
("block") factorization of binary words.

A word is stored as a plain tuple of ints; positions are 1-based in every
statistic, so ``maj`` sums 1-based descent positions.

>>> w = parse_word("21221")
>>> des(w), maj(w), inv(w), exc(w)
(2, 5, 4, 1)
>>> block_form(w)
BlockForm(d=2, m=(0, 1, 1), n_exp=(1, 2, 0))
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "Word", "WordError", "WordParseError", "BlockForm",
    "word", "binary_word", "permutation", "is_binary",
    "parse_word", "format_word", "is_compact_text",
    "des", "maj", "inv", "exc", "descent_positions",
    "sorted_rearrangement", "ones_count", "trailing_twos",
    "block_form", "assemble", "standardize",
]

Word = tuple[int, ...]

_SEPARATORS = re.compile(r"[\s,]")


class WordError(ValueError):
    """A sequence violates a word-type precondition."""


class WordParseError(WordError):
    def __init__(self, text: str, position: int, reason: str):
        self.text = text
        self.position = position
        super().__init__(f"cannot parse word {text!r}: {reason} at position {position}")


def word(letters: Iterable[int]) -> Word:
    """Validate and freeze a sequence of positive integers."""
    w = tuple(letters)
    for i, a in enumerate(w, 1):
        if not isinstance(a, int) or isinstance(a, bool) or a < 1:
            raise WordError(f"letter {a!r} at position {i} is not a positive integer")
    return w


def is_binary(w: Sequence[int]) -> bool:
    return all(a == 1 or a == 2 for a in w)


def binary_word(letters: Iterable[int]) -> Word:
    w = tuple(letters)
    for i, a in enumerate(w, 1):
        if a != 1 and a != 2:
            raise WordError(f"letter {a!r} at position {i} is not in {{1,2}}")
    return w


def permutation(values: Iterable[int]) -> Word:
    """Validate that ``values`` is a rearrangement of 1..n."""
    p = tuple(values)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise WordError(f"{p!r} is not a permutation of 1..{len(p)}")
    return p


def is_compact_text(text: str) -> bool:
    return _SEPARATORS.search(text.strip()) is None


def parse_word(text: str) -> Word:
    """Parse a compact digit string ("21221") or separated integers ("10 2", "1,2").

    Positions in error messages are 1-based letter (token) indices.
    """
    stripped = text.strip()
    if not stripped:
        return ()
    if is_compact_text(stripped):
        tokens = list(stripped)
    else:
        tokens = re.split(r"\s*,\s*|\s+", stripped)
    letters = []
    for pos, tok in enumerate(tokens, 1):
        if tok == "":
            raise WordParseError(text, pos, "empty token")
        if not tok.isdigit():
            raise WordParseError(text, pos, f"non-numeric token {tok!r}")
        value = int(tok)
        if value == 0:
            raise WordParseError(text, pos, "letter 0")
        letters.append(value)
    return tuple(letters)


def format_word(w: Sequence[int], compact: bool = True) -> str:
    """Compact digit string when allowed and every letter is a single digit."""
    if compact and all(a <= 9 for a in w):
        return "".join(map(str, w))
    return " ".join(map(str, w))


def descent_positions(w: Sequence[int]) -> list[int]:
    return [i for i in range(1, len(w)) if w[i - 1] > w[i]]


def des(w: Sequence[int]) -> int:
    return sum(1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def maj(w: Sequence[int]) -> int:
    return sum(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def inv(w: Sequence[int]) -> int:
    """Inversion count, O(n * alphabet) via running letter counts."""
    seen: dict[int, int] = {}
    total = 0
    for a in w:
        total += sum(c for b, c in seen.items() if b > a)
        seen[a] = seen.get(a, 0) + 1
    return total


def sorted_rearrangement(w: Sequence[int]) -> Word:
    return tuple(sorted(w))


def exc(w: Sequence[int]) -> int:
    """Excedances against the weakly increasing rearrangement of ``w``.

    The rearrangement plays the role of the top row of the two-line
    notation; on a permutation it is 1..n, so this counts pi_i > i.
    """
    return sum(1 for a, x in zip(w, sorted(w)) if a > x)


def ones_count(w: Sequence[int]) -> int:
    return sum(1 for a in binary_word(w) if a == 1)


def trailing_twos(w: Sequence[int]) -> int:
    t = 0
    for a in reversed(binary_word(w)):
        if a != 2:
            break
        t += 1
    return t


@dataclass(frozen=True)
class BlockForm:
    """Exponents of ``1^m0 2^n0 1^m1 2^n1 ... 1^md 2^nd``.

    ``m0`` and ``nd`` may be zero; all interior exponents are positive,
    which makes the factorization unique with ``d`` equal to the number of
    descents.
    """

    d: int
    m: tuple[int, ...]
    n_exp: tuple[int, ...]

    def __post_init__(self):
        if self.d < 0 or len(self.m) != self.d + 1 or len(self.n_exp) != self.d + 1:
            raise WordError(f"block form needs d+1 exponents of each kind: {self!r}")
        if self.m[0] < 0 or self.n_exp[-1] < 0:
            raise WordError(f"negative outer exponent in {self!r}")
        if any(x <= 0 for x in self.m[1:]) or any(x <= 0 for x in self.n_exp[:-1]):
            raise WordError(f"zero interior exponent in {self!r}")

    @property
    def length(self) -> int:
        return sum(self.m) + sum(self.n_exp)

    @classmethod
    def _unchecked(cls, d: int, m: tuple[int, ...], n_exp: tuple[int, ...]) -> "BlockForm":
        # for exponents produced by block_form, valid by construction
        b = object.__new__(cls)
        object.__setattr__(b, "d", d)
        object.__setattr__(b, "m", m)
        object.__setattr__(b, "n_exp", n_exp)
        return b


def block_form(w: Sequence[int]) -> BlockForm:
    w = binary_word(w)
    m = [0]
    n_exp = [0]
    for a in w:
        if a == 1:
            if n_exp[-1] > 0:
                m.append(0)
                n_exp.append(0)
            m[-1] += 1
        else:
            n_exp[-1] += 1
    return BlockForm._unchecked(len(m) - 1, tuple(m), tuple(n_exp))


def assemble(b: BlockForm) -> Word:
    out: list[int] = []
    for mi, ni in zip(b.m, b.n_exp):
        out += [1] * mi
        out += [2] * ni
    return tuple(out)


def standardize(w: Sequence[int]) -> Word:
    """Rank the letters of ``w``, breaking ties left to right.

    >>> standardize((1, 3, 2, 2, 3, 2, 1, 3, 1))
    (1, 7, 4, 5, 8, 6, 2, 9, 3)
    """
    if len(w) == 0:
        raise WordError("standardization of the empty word is undefined")
    order = sorted(range(len(w)), key=lambda i: (w[i], i))
    ranks = [0] * len(w)
    for r, i in enumerate(order, 1):
        ranks[i] = r
    return tuple(ranks)
