import pytest

from eulerian_words.theorems import (
    THEOREM_IDS, RangeError, check_theorem, resolve_range, run_many, run_theorem,
)


def statuses(rep):
    return {r.n: r.status for r in rep.results}


def test_dispatch_table_ids():
    assert THEOREM_IDS == ("thm2.1", "thm3.2", "lem3.3", "eq8", "thm3.4", "rem3", "thm4.1",
                           "prop2.1", "em-pairs", "partition-weight")


def test_thm21_small_range_passes():
    rep = run_theorem("thm2.1", (1, 12))
    assert set(statuses(rep).values()) == {"pass"}


def test_thm34_n1_is_documented_exception():
    rep = run_theorem("thm3.4", (1, 12))
    st = statuses(rep)
    assert st[1] == "documented-exception"
    assert all(st[n] == "pass" for n in range(2, 13))
    assert rep.results[0].counterexample == (1,)
    assert not rep.failed


def test_rem3_literal_claim_is_exception_everywhere():
    rep = run_theorem("rem3", (1, 10))
    assert set(statuses(rep).values()) == {"documented-exception"}
    assert rep.results[2].counterexample == (1, 2, 2)


def test_prop21_passes():
    assert set(statuses(run_theorem("prop2.1", (1, 7))).values()) == {"pass"}


@pytest.mark.parametrize("tid", THEOREM_IDS)
def test_every_theorem_passes_at_small_n(tid):
    rep = run_theorem(tid, (1, 6))
    assert not rep.failed
    for r in rep.results:
        if r.status != "pass":
            assert r.counterexample is not None


def test_range_guards():
    with pytest.raises(RangeError):
        resolve_range("thm2.1", (1, 21))
    with pytest.raises(RangeError):
        resolve_range("prop2.1", (1, 9))
    with pytest.raises(RangeError):
        resolve_range("eq8", (0, 3))
    assert resolve_range("prop2.1", (1, 9), max_perm_n=9) == (1, 9)
    assert resolve_range("thm2.1", None, max_n=18) == (1, 18)
    assert resolve_range("prop2.1", (1, 18), clip=True) == (1, 8)
    with pytest.raises(KeyError):
        resolve_range("thm9.9")


def test_parallel_matches_sequential():
    plan = [("eq8", 1, 9), ("thm3.4", 1, 9), ("prop2.1", 1, 6)]
    seq = run_many(plan, jobs=1)
    par = run_many(plan, jobs=2)
    strip = lambda reps: [(r.theorem, [(x.n, x.status, x.counterexample) for x in r.results])
                          for r in reps]
    assert strip(seq) == strip(par)


def test_check_theorem_records_time():
    r = check_theorem("eq8", 5)
    assert r.status == "pass" and r.elapsed_ms >= 0
