"""
Exhaustive verification of the identities about Fibonacci words, one check
function per result, each run independently for every length ``n``.

Each check returns ``None`` on success or an :class:`Outcome` naming the
status, the lexicographically least witness word and a short note.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations
from typing import Callable, Iterable, Sequence

from . import analysis
from .bijections import (
    SteinAssignmentError, gamma, gamma_binary_closed_form, phi1_inv, phi2, psi, stein_phi,
)
from .families import enumerate_family, iter_binary, iter_family
from .partitions import durfee, lambda_of
from .words import Word, block_form, des, exc, inv, maj

__all__ = [
    "THEOREMS", "THEOREM_IDS", "DEFAULT_SEED", "BINARY_GUARD", "PERM_GUARD",
    "Outcome", "NResult", "TheoremReport", "RangeError",
    "check_theorem", "run_theorem", "run_many", "resolve_range",
]

DEFAULT_SEED = 20110101
BINARY_GUARD = 20
PERM_GUARD = 8
RANDOM_SAMPLES = 1000

PASS, FAIL, EXCEPTION = "pass", "fail", "documented-exception"


class RangeError(ValueError):
    pass


@dataclass(frozen=True)
class Outcome:
    status: str
    counterexample: Word | None
    note: str


@dataclass(frozen=True)
class NResult:
    n: int
    status: str
    counterexample: Word | None = None
    note: str | None = None
    elapsed_ms: float = 0.0


@dataclass
class TheoremReport:
    theorem: str
    lo: int
    hi: int
    results: list[NResult] = field(default_factory=list)

    @property
    def elapsed_ms(self) -> int:
        return int(round(sum(r.elapsed_ms for r in self.results)))

    @property
    def failed(self) -> bool:
        return any(r.status == FAIL for r in self.results)


def _fail(w, note) -> Outcome:
    return Outcome(FAIL, tuple(w) if w is not None else None, note)


def _first(words: Iterable[Word], ok: Callable[[Word], bool], note: str) -> Outcome | None:
    """Fail on the first word violating ``ok``; callers pass lex-ordered words."""
    for w in words:
        if not ok(w):
            return _fail(w, note)
    return None


def _set_equal(a: Iterable[Word], b: Iterable[Word], note: str) -> Outcome | None:
    a, b = set(a), set(b)
    if a == b:
        return None
    return _fail(min(a ^ b), note)


def _injective(words: Sequence[Word], f, note: str) -> Outcome | None:
    seen: dict[Word, Word] = {}
    for w in words:
        v = f(w)
        if v in seen:
            return _fail(w, note)
        seen[v] = w
    return None


def _dist_equal(kind: str, left: list[Word], right: list[Word], note: str) -> Outcome | None:
    report = analysis.check_pair(kind, left, right)
    if report.equal:
        return None
    e = report.witness
    stats = {"eulerian": (des, exc), "mahonian": (maj, inv),
             "euler_mahonian": (lambda w: (des(w), maj(w)), lambda w: (exc(w), inv(w)))}[kind]
    hits = [w for w in left if stats[0](w) == e] + [w for w in right if stats[1](w) == e]
    return _fail(min(hits), f"{note}: coefficients differ at exponent {e}")


# -- individual results ------------------------------------------------------

def _thm_phi1_inverse_images(n: int, seed: int) -> Outcome | None:
    fib, fib1 = enumerate_family("fib", n), enumerate_family("fib1", n)
    r, rprime = enumerate_family("r", n), enumerate_family("rprime", n)
    return (
        _injective(fib, phi1_inv, "phi1inv not injective on F_n")
        or _set_equal(map(phi1_inv, fib), r, "phi1inv(F_n) != R_n")
        or _set_equal(map(phi1_inv, fib1), rprime, "phi1inv(F'_n) != R'_n")
        or _dist_equal("eulerian", list(fib), list(r), "des over F_n vs exc over R_n")
        or _dist_equal("eulerian", list(fib1), list(rprime), "des over F'_n vs exc over R'_n")
    )


def _random_words(n: int, seed: int, count: int = RANDOM_SAMPLES, alphabet: int = 5) -> list[Word]:
    rng = random.Random(seed * 1_000_003 + n)
    return [tuple(rng.randint(1, alphabet) for _ in range(n)) for _ in range(count)]


def _thm_gamma_des_exc(n: int, seed: int) -> Outcome | None:
    out = _first(iter_binary(n), lambda w: des(w) == exc(gamma(w)),
                 "des(w) != exc(gamma(w)) on a binary word")
    if out:
        return out
    bad = [w for w in _random_words(n, seed) if des(w) != exc(gamma(w))]
    return _fail(min(bad), "des(w) != exc(gamma(w)) on a random word over {1..5}") if bad else None


def _lemma_ok(w: Word) -> bool:
    k = sum(1 for a in w if a == 1)
    t = 0
    while t < len(w) and w[len(w) - 1 - t] == 2:
        t += 1
    b = gamma(w)
    if any(a != 2 for a in b[len(b) - t:]):
        return False
    u, v = b[:k], b[k:len(b) - t]
    for m in (1, 2, 3):
        if gamma(w + (2,) * m) != b + (2,) * m:
            return False
        if t == 0:
            expected = u + (1,) * m + v
        else:
            expected = u + (2,) + (1,) * (m - 1) + v + (1,) + (2,) * (t - 1)
        if gamma(w + (1,) * m) != expected:
            return False
    return True


def _lem_gamma_recurrence(n: int, seed: int) -> Outcome | None:
    return _first(iter_binary(n), _lemma_ok, "gamma recurrence for appended 1s or 2s violated")


def _eq_gamma_closed_form(n: int, seed: int) -> Outcome | None:
    return _first(iter_binary(n), lambda w: gamma(w) == gamma_binary_closed_form(w),
                  "gamma differs from its binary closed form")


def _thm_gamma_fib1(n: int, seed: int) -> Outcome | None:
    fib1, t = enumerate_family("fib1", n), enumerate_family("t", n)
    out = (
        _injective(fib1, gamma, "gamma not injective on F'_n")
        or _set_equal(map(gamma, fib1), t, "gamma(F'_n) != T_n")
        or _dist_equal("eulerian", list(fib1), list(t), "des over F'_n vs exc over T_n")
    )
    if n == 1:
        # lambda(1) is empty, so the word 1 = gamma(1) cannot satisfy l(lambda) = lambda_l
        witness = out.counterexample if out else (1,)
        return Outcome(EXCEPTION, witness, "T_1 excludes gamma(1) = 1 (empty partition)")
    return out


def _rem_gamma_fib_images(n: int, seed: int) -> Outcome | None:
    fib = enumerate_family("fib", n)
    img_all = set(map(gamma, fib))
    img_fib1 = set(map(gamma, enumerate_family("fib1", n)))
    extra = {(2,) * n, (1,) + (2,) * (n - 1)}
    out = _set_equal(img_all, img_fib1 | extra,
                     "gamma(F_n) != gamma(F'_n) + {2^n, 12^(n-1)}")
    if out:
        return out
    if n >= 2:
        out = _set_equal((gamma(w) for w in fib if des(w) >= 1), img_fib1,
                         "gamma on descent-bearing F_n words != gamma(F'_n)")
        if out:
            return out
    if img_all != img_fib1:
        return Outcome(EXCEPTION, min(img_all ^ img_fib1),
                       "literal gamma(F_n) = gamma(F'_n) fails on descent-free words")
    return None


def _thm_g_images(n: int, seed: int) -> Outcome | None:
    g = enumerate_family("g", n)
    h = enumerate_family("h", n)
    return (
        _set_equal(map(phi2, g), map(phi1_inv, g), "phi2(G_n) != phi1inv(G_n)")
        or _set_equal(map(gamma, g), map(phi1_inv, g), "gamma(G_n) != phi1inv(G_n)")
        or _set_equal(map(psi, g), g, "psi(G_n) != G_n")
        or _first(h, lambda w: phi2(w) == phi1_inv(w), "phi2 != phi1inv on H")
        or _first(iter_binary(n), lambda w: psi(psi(w)) == w, "psi is not an involution")
        or _first(iter_binary(n), lambda w: phi2(w) == phi1_inv(psi(w)),
                  "phi2 != phi1inv o psi")
    )


def _prop_stein(n: int, seed: int) -> Outcome | None:
    seen = set()
    for p in permutations(range(1, n + 1)):
        try:
            f = stein_phi(p)
        except SteinAssignmentError as err:
            return _fail(p, f"assignment conflict: {err}")
        descents = {(p[k], p[k + 1]) for k in range(n - 1) if p[k] > p[k + 1]}
        excedances = {(f[i], i + 1) for i in range(n) if f[i] > i + 1}
        if descents != excedances:
            return _fail(p, "descent pairs != excedance pairs")
        if des(p) != exc(f):
            return _fail(p, "des(pi) != exc(stein_phi(pi))")
        seen.add(f)
    missed = set(permutations(range(1, n + 1))) - seen
    if missed:
        return _fail(min(missed), f"stein_phi misses {len(missed)} permutations")
    return None


def _em_pairs(n: int, seed: int) -> Outcome | None:
    fib = list(iter_family("fib", n))
    return (
        _dist_equal("euler_mahonian", fib, [phi2(w) for w in fib],
                    "(des,maj) over F_n vs (exc,inv) over phi2(F_n)")
        or _first(iter_binary(n), lambda w: maj(w) == inv(phi2(w)) and des(w) == exc(phi2(w)),
                  "phi2 does not carry (des,maj) to (exc,inv)")
    )


def _phi1_proof_facts(w: Word) -> bool:
    b = block_form(w)
    d = b.d
    if d == 0:
        return True
    v = phi1_inv(w)
    lam = lambda_of(v)
    ones = sum(1 for a in v if a == 1)
    dd = durfee(lam)
    return (lam.length == d
            and lam.parts[d - 1] == d + b.n_exp[0] - 1
            and lam.largest == len(v) - ones - b.n_exp[-1]
            and dd.d == (ones - 1 if b.m[0] == 1 else ones)
            and not dd.below.parts)


def _ends_with_one_ok(w: Word) -> bool:
    ones = sum(1 for a in w if a == 1)
    lam = lambda_of(w)
    criterion = ones > 0 and lam.largest == len(w) - ones
    return criterion == (len(w) > 0 and w[-1] == 1)


def _partition_weight(n: int, seed: int) -> Outcome | None:
    return (
        _first(iter_binary(n), lambda w: inv(w) == lambda_of(w).weight, "inv(w) != |lambda(w)|")
        or _first(iter_binary(n), _ends_with_one_ok, "ends-with-1 criterion on lambda fails")
        or _first(iter_family("fib", n), _phi1_proof_facts,
                  "partition shape of phi1inv(F_n) differs from its block-form prediction")
    )


@dataclass(frozen=True)
class Theorem:
    id: str
    title: str
    check: Callable[[int, int], Outcome | None]
    default_range: tuple[int, int]
    permutations: bool = False


_TABLE = [
    Theorem("thm2.1", "phi1inv(F_n) = R_n, phi1inv(F'_n) = R'_n; Eulerian pairs",
            _thm_phi1_inverse_images, (1, 20)),
    Theorem("thm3.2", "des(w) = exc(gamma(w))", _thm_gamma_des_exc, (1, 14)),
    Theorem("lem3.3", "gamma(w 1^m), gamma(w 2^m) recurrences", _lem_gamma_recurrence, (1, 12)),
    Theorem("eq8", "gamma equals its binary closed form", _eq_gamma_closed_form, (1, 14)),
    Theorem("thm3.4", "gamma(F'_n) = T_n, gamma injective on F'_n", _thm_gamma_fib1, (1, 20)),
    Theorem("rem3", "gamma(F_n) versus gamma(F'_n)", _rem_gamma_fib_images, (1, 20)),
    Theorem("thm4.1", "phi2(G_n) = phi1inv(G_n) = gamma(G_n); phi2 = phi1inv o psi; H",
            _thm_g_images, (1, 18)),
    Theorem("prop2.1", "stein_phi: bijection, descent pairs = excedance pairs",
            _prop_stein, (1, 8), permutations=True),
    Theorem("em-pairs", "(des,maj) over F_n = (exc,inv) over phi2(F_n)", _em_pairs, (1, 16)),
    Theorem("partition-weight", "inv = |lambda|; partition shape of phi1inv(F_n)",
            _partition_weight, (1, 16)),
]

THEOREMS: dict[str, Theorem] = {t.id: t for t in _TABLE}
THEOREM_IDS: tuple[str, ...] = tuple(THEOREMS)


def _theorem(theorem_id: str) -> Theorem:
    try:
        return THEOREMS[theorem_id]
    except KeyError:
        raise KeyError(f"unknown theorem {theorem_id!r}; choose from "
                       f"{', '.join(THEOREM_IDS)}") from None


def resolve_range(theorem_id: str, n_range: tuple[int, int] | None = None,
                  max_n: int = BINARY_GUARD, max_perm_n: int = PERM_GUARD,
                  clip: bool = False) -> tuple[int, int]:
    """Range to run for a theorem.

    Without ``n_range`` the theorem's default range is used, capped at the
    guard. With ``clip`` an explicit range is capped too; otherwise a range
    beyond the guard is an error.
    """
    th = _theorem(theorem_id)
    guard = max_perm_n if th.permutations else max_n
    lo, hi = n_range if n_range is not None else th.default_range
    if lo < 1 or hi < lo:
        raise RangeError(f"invalid range {lo}..{hi} for {theorem_id} (need 1 <= lo <= hi)")
    if n_range is None or clip:
        hi = min(hi, guard)
    elif hi > guard:
        flag = "--max-perm-n" if th.permutations else "--max-n"
        raise RangeError(f"{theorem_id}: n={hi} exceeds the guard {guard}; raise it with {flag}")
    return lo, hi


def check_theorem(theorem_id: str, n: int, seed: int = DEFAULT_SEED) -> NResult:
    th = _theorem(theorem_id)
    start = time.perf_counter()
    out = th.check(n, seed)
    elapsed = (time.perf_counter() - start) * 1000
    if out is None:
        return NResult(n, PASS, elapsed_ms=elapsed)
    return NResult(n, out.status, out.counterexample, out.note, elapsed)


def _task(args):
    return check_theorem(*args)


def run_many(plan: Sequence[tuple[str, int, int]], seed: int = DEFAULT_SEED,
             jobs: int = 1) -> list[TheoremReport]:
    """Run ``(theorem, lo, hi)`` entries; the report order never depends on ``jobs``."""
    tasks = [(tid, n, seed) for tid, lo, hi in plan for n in range(lo, hi + 1)]
    if jobs > 1 and len(tasks) > 1:
        # largest n first so the long tasks start early
        order = sorted(range(len(tasks)), key=lambda i: -tasks[i][1])
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            done = dict(zip(order, pool.map(_task, [tasks[i] for i in order])))
        results = [done[i] for i in range(len(tasks))]
    else:
        results = [_task(t) for t in tasks]
    reports = []
    it = iter(results)
    for tid, lo, hi in plan:
        reports.append(TheoremReport(tid, lo, hi, [next(it) for _ in range(lo, hi + 1)]))
    return reports


def run_theorem(theorem_id: str, n_range: tuple[int, int] | None = None,
                seed: int = DEFAULT_SEED, max_n: int = BINARY_GUARD,
                max_perm_n: int = PERM_GUARD, jobs: int = 1) -> TheoremReport:
    lo, hi = resolve_range(theorem_id, n_range, max_n, max_perm_n)
    return run_many([(theorem_id, lo, hi)], seed, jobs)[0]
