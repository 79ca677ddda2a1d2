from collections import Counter

import pytest

import oracles
from oracles import w
from eulerian_words.analysis import (
    DistPolynomial, check_pair, distribution, find_preimages, first_image_difference, image,
    joint_distribution, resolve_set,
)
from eulerian_words.families import enumerate_family


def strs(words):
    return ["".join(map(str, x)) for x in words]


def test_distribution_examples():
    assert distribution(enumerate_family("fib", 3), "des").coeffs == {0: 2, 1: 3}
    assert distribution(enumerate_family("r", 3), "exc").coeffs == {0: 2, 1: 3}
    empty = distribution([], "maj")
    assert empty.coeffs == {} and empty.total == 0


def test_joint_distribution_examples():
    assert joint_distribution([w("21")], ("des", "maj")).coeffs == {(1, 1): 1}
    f2 = enumerate_family("fib", 2)
    expected = Counter((oracles.des(x), oracles.maj(x)) for x in f2)
    assert joint_distribution(f2, ("des", "maj")).coeffs == dict(expected) == {(0, 0): 2, (1, 1): 1}
    _, img = resolve_set("phi2(fib)", 2)
    assert joint_distribution(img, ("exc", "inv")).coeffs == {(0, 0): 2, (1, 1): 1}


def test_unknown_statistic():
    with pytest.raises(ValueError):
        distribution([w("12")], "foo")


def test_dist_polynomial_merge_and_difference():
    a = DistPolynomial({0: 1, 2: 3})
    b = DistPolynomial({0: 1, 1: 1})
    assert a.merge(b).coeffs == {0: 2, 1: 1, 2: 3}
    assert a.merge(b).total == 6
    assert a.first_difference(b) == 1
    assert a.first_difference(a) is None
    assert a.rows() == [(0, 1), (2, 3)]
    with pytest.raises(ValueError):
        DistPolynomial({0: 0})


def test_merge_over_split_enumeration_equals_whole():
    words = enumerate_family("binary", 10)
    whole = distribution(words, "maj")
    parts = [distribution(words[i::4], "maj") for i in range(4)]
    merged = parts[0]
    for p in parts[1:]:
        merged = merged.merge(p)
    assert merged == whole


def test_image_examples():
    assert strs(image("gamma", "fib1", 3).words) == ["121", "212"]
    assert strs(image("phi1inv", "fib", 2).words) == ["12", "21", "22"]
    r = image("gamma", "fib", 3)
    assert strs(r.words) == ["121", "122", "212", "222"]
    assert r.multiset_size == 5 and not r.injective


def test_check_pair_examples():
    assert check_pair("eulerian", "fib", "r", 3).equal
    rep = check_pair("eulerian", "fib1", "t", 3)
    assert rep.equal and rep.left_dist.coeffs == {1: 2}
    bad = check_pair("eulerian", "fib", [w("11"), w("12")], 2)
    assert not bad.equal and bad.witness == 1
    assert bad.right_dist.coeffs == {0: 2}


def test_check_pair_kinds():
    assert check_pair("mahonian", "fib", "phi2(fib)", 6).equal
    assert check_pair("euler_mahonian", "fib", "phi2(fib)", 6).equal
    with pytest.raises(ValueError):
        check_pair("cyclic", "fib", "fib", 3)


def test_find_preimages_examples():
    assert find_preimages("gamma", "binary", 4, w("2121")) == []
    triple = {w("2212212221"), w("2212212212"), w("2212212122")}
    assert triple <= set(find_preimages("gamma", "binary", 10, w("2221212122")))
    assert find_preimages("phi1inv", "binary", 5, w("22121")) == [w("21221")]


def test_eulerian_pairs_from_phi1_inverse():
    for n in range(1, 19):
        assert check_pair("eulerian", "fib", "phi1inv(fib)", n).equal
        assert check_pair("eulerian", "fib", "r", n).equal


def test_images_equal_families():
    for n in range(1, 21):
        assert image("phi1inv", "fib", n).words == enumerate_family("r", n)
        assert image("phi1inv", "fib1", n).words == enumerate_family("rprime", n)
        if n >= 2:
            g = image("gamma", "fib1", n)
            assert g.words == enumerate_family("t", n)
            assert g.injective


def test_g_images_coincide():
    for n in range(1, 19):
        a = image("phi2", "g", n).words
        assert a == image("phi1inv", "g", n).words == image("gamma", "g", n).words


def test_phi2_and_phi1_inverse_images_of_fib_differ_somewhere():
    hit = first_image_difference("phi2", "phi1inv", "fib", range(1, 10))
    assert hit is not None
    n, witness = hit
    assert n <= 6
    a = set(image("phi2", "fib", n).words)
    b = set(image("phi1inv", "fib", n).words)
    assert witness in a ^ b
