"""
Maps on words: Foata's first transformation on binary words (closed form of
its inverse plus a structural inverse), Foata's second transformation on
binary words, Steingrimsson's descent-to-excedance bijection on
permutations, its extension ``gamma`` to arbitrary words, and the block
reversing involution ``psi``.

>>> from eulerian_words.words import parse_word, format_word
>>> format_word(gamma(parse_word("132232131")))
'123323121'
>>> format_word(stein_phi(parse_word("174586293")))
'169748253'
"""

from __future__ import annotations

from typing import Callable, Sequence

from .words import (
    BlockForm, Word, WordError, assemble, binary_word, block_form, permutation,
    standardize,
)

__all__ = [
    "SteinAssignmentError", "phi1_inv", "phi1", "phi2", "stein_phi", "gamma",
    "gamma_binary_closed_form", "psi", "MAPS", "BINARY_MAPS", "get_map",
]


class SteinAssignmentError(RuntimeError):
    """Steingrimsson's construction assigned a position twice or not at all."""


def _ones(k: int) -> list[int]:
    return [1] * k


def _twos(k: int) -> list[int]:
    return [2] * k


def phi1_inv(w: Sequence[int]) -> Word:
    """Inverse of Foata's first fundamental transformation on {1,2}*.

    ``1^m0 2^n0 ... 1^md 2^nd`` goes to
    ``1^m0 (2 1^(mi-1))_{i=1..d} (2^(nj-1) 1)_{j=0..d-1} 2^nd``,
    which turns descents into excedances.
    """
    b = block_form(w)
    if b.d == 0:
        return tuple(w)
    out = _ones(b.m[0])
    for mi in b.m[1:]:
        out += [2] + _ones(mi - 1)
    for nj in b.n_exp[:-1]:
        out += _twos(nj - 1) + [1]
    out += _twos(b.n_exp[-1])
    return tuple(out)


def phi1(v: Sequence[int]) -> Word:
    """Recover the unique ``w`` with ``phi1_inv(w) == v``.

    The first ``k`` letters (``k`` = number of ones) hold the 1-exponents,
    the rest the 2-exponents; ``d`` is the number of 2s in the first part.
    """
    v = binary_word(v)
    k = sum(1 for a in v if a == 1)
    head, tail = v[:k], v[k:]
    d = sum(1 for a in head if a == 2)

    # head = 1^m0 (2 1^(mi-1))^d
    runs = [0]
    for a in head:
        if a == 2:
            runs.append(0)
        else:
            runs[-1] += 1
    m = (runs[0],) + tuple(r + 1 for r in runs[1:])

    # tail = (2^(nj-1) 1)^d 2^nd
    gaps = [0]
    for a in tail:
        if a == 1:
            gaps.append(0)
        else:
            gaps[-1] += 1
    if len(runs) != d + 1 or len(gaps) != d + 1:
        raise WordError(f"phi1: tail of {v!r} starting at index {k + 1} does not "
                        f"contain exactly {d} ones")
    n_exp = tuple(g + 1 for g in gaps[:-1]) + (gaps[-1],)
    return assemble(BlockForm(d, m, n_exp))


def phi2(w: Sequence[int]) -> Word:
    """Foata's second fundamental transformation on {1,2}*.

    Maps (des, maj) to (exc, inv).
    """
    b = block_form(w)
    if b.d == 0:
        return tuple(w)
    out: list[int] = []
    for mi in reversed(b.m[1:]):
        out += _ones(mi - 1) + [2]
    out += _ones(b.m[0])
    for nj in b.n_exp[:-1]:
        out += _twos(nj - 1) + [1]
    out += _twos(b.n_exp[-1])
    return tuple(out)


def stein_phi(p: Sequence[int]) -> Word:
    """Steingrimsson's bijection on S_n; descents (pi_k, pi_k+1) become excedances.

    For each k, with sentinel pi_0 = 0:
      * if some later entry is smaller than pi_k, set f(pi_{k+1}) = pi_k;
      * otherwise pi_k is below every later entry; with j the largest index
        such that pi_j < pi_k, set f(pi_{j+1}) = pi_k.
    """
    p = permutation(p)
    n = len(p)
    if n == 0:
        raise WordError("stein_phi needs a permutation of length >= 1")
    pi = (0,) + p + (n + 1,)
    later_min = [0] * (n + 1)
    running = n + 1
    for k in range(n, 0, -1):
        later_min[k] = running
        running = min(running, pi[k])

    f = [0] * (n + 1)
    for k in range(1, n + 1):
        if later_min[k] < pi[k]:
            # k < n here, so the right sentinel is never read
            assert k < n
            pos = pi[k + 1]
        else:
            j = k - 1
            while pi[j] > pi[k]:
                j -= 1
            pos = pi[j + 1]
        if f[pos]:
            raise SteinAssignmentError(
                f"position {pos} assigned twice ({f[pos]} and {pi[k]}) for {p!r}")
        f[pos] = pi[k]
    return tuple(f[1:])


def gamma(w: Sequence[int]) -> Word:
    """Extend ``stein_phi`` to words through standardization.

    Each value of ``stein_phi(standardize(w))`` is replaced by the letter of
    ``w`` carrying that rank. Not injective in general.
    """
    w = tuple(w)
    if not w:
        return ()
    ranks = standardize(w)
    letter_of_rank = [0] * (len(w) + 1)
    for a, r in zip(w, ranks):
        letter_of_rank[r] = a
    return tuple(letter_of_rank[v] for v in stein_phi(ranks))


def gamma_binary_closed_form(w: Sequence[int]) -> Word:
    """``gamma`` on {1,2}* straight from the block exponents.

    ``1^m0 (2 1^(mi-1))_{i<d} 2 1^md (2^(nj-1) 1)_{j<d-1} 2^(n_{d-1}-1+nd)``
    """
    b = block_form(w)
    if b.d == 0:
        return tuple(w)
    d, m, n_exp = b.d, b.m, b.n_exp
    out = _ones(m[0])
    for mi in m[1:d]:
        out += [2] + _ones(mi - 1)
    out += [2] + _ones(m[d])
    for nj in n_exp[:d - 1]:
        out += _twos(nj - 1) + [1]
    out += _twos(n_exp[d - 1] - 1 + n_exp[d])
    return tuple(out)


def psi(w: Sequence[int]) -> Word:
    """Involution reversing the interior 1-exponents.

    (m0, m1, ..., md) -> (md - 1, m_{d-1}, ..., m1, m0 + 1); 2-exponents fixed.
    Its fixed points with d >= 1 form the family H.
    """
    b = block_form(w)
    if b.d == 0:
        return tuple(w)
    m = (b.m[-1] - 1,) + tuple(reversed(b.m[1:-1])) + (b.m[0] + 1,)
    # md >= 1 and m0 + 1 >= 1, so the new exponents are valid
    return assemble(BlockForm._unchecked(b.d, m, b.n_exp))


MAPS: dict[str, Callable[[Sequence[int]], Word]] = {
    "phi1inv": phi1_inv,
    "phi1": phi1,
    "phi2": phi2,
    "gamma": gamma,
    "psi": psi,
    "std": standardize,
    "stein": stein_phi,
}

BINARY_MAPS = frozenset({"phi1inv", "phi1", "phi2", "psi"})


def get_map(name: str) -> Callable[[Sequence[int]], Word]:
    try:
        return MAPS[name]
    except KeyError:
        raise KeyError(f"unknown map {name!r}; choose from {', '.join(MAPS)}") from None
