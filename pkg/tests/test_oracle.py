import random

import pytest

from diskbwt import SuffixRef, oracle_all
from diskbwt.errors import TooLargeForOracle

import diskbwt.oracle as oracle_mod

from conftest import make_coll, random_instance


def test_golden_instance():
    ref = oracle_all(make_coll(["AC", "CA"]))
    assert ref.sa == [SuffixRef(1, 0), SuffixRef(2, 0), SuffixRef(2, 1),
                      SuffixRef(1, 2), SuffixRef(1, 1), SuffixRef(2, 2)]
    assert ref.bwt == [2, 1, 2, 0, 1, 0]
    assert ref.lcp == [-1, 0, 0, 1, 0, 1]
    assert ref.encoding == [0, 0, 1, 2, 1, 2]
    assert ref.partial_b == [[2, 1], [2, 1], [0, 0]]
    assert ref.longest_repeat == 1


def test_minimal_instances():
    ref = oracle_all(make_coll(["A"]))
    assert ref.sa == [SuffixRef(1, 0), SuffixRef(1, 1)]
    assert ref.bwt == [1, 0]
    assert ref.lcp == [-1, 0]
    assert ref.longest_repeat == 0

    assert oracle_all(make_coll(["AA", "AA"])).longest_repeat == 2


def test_longest_repeat_counts_overlapping_occurrences():
    assert oracle_all(make_coll(["AAAC"])).longest_repeat == 2  # "AA" twice in one string
    assert oracle_all(make_coll(["ACGT"])).longest_repeat == 0
    assert oracle_all(make_coll(["ACG", "CGT"])).longest_repeat == 2


def test_guard_rejects_large_instances(monkeypatch):
    monkeypatch.setattr(oracle_mod, "POSITION_GUARD", 5)
    with pytest.raises(TooLargeForOracle):
        oracle_mod.oracle_all(make_coll(["AC", "CA"]))


def _keyed_reference(coll):
    """Second, sort-key-based derivation of the same quantities.

    Letters become (code, 0) pairs and the terminating sentinel becomes
    (0, string_index), which realizes the per-string sentinel ordering
    without any comparator.
    """
    k = coll.k

    def key(ref):
        s = coll.strings[ref.string_index - 1][k - ref.length:]
        return tuple((c, 0) for c in s) + ((0, ref.string_index),)

    refs = sorted((SuffixRef(j, l)
                   for j in range(1, coll.m + 1) for l in range(k + 1)), key=key)
    bwt = [0 if r.length == k else coll.strings[r.string_index - 1][k - r.length - 1]
           for r in refs]
    lcp = [-1]
    for prev, cur in zip(refs, refs[1:]):
        a = coll.strings[prev.string_index - 1][k - prev.length:]
        b = coll.strings[cur.string_index - 1][k - cur.length:]
        n = 0
        while n < min(len(a), len(b)) and a[n] == b[n]:
            n += 1
        lcp.append(n)
    return refs, bwt, lcp


def test_internal_consistency_against_keyed_path():
    rng = random.Random(31)
    for _ in range(30):
        strings, alpha = random_instance(rng, max_m=12, max_k=8,
                                         force_duplicates=rng.random() < 0.5)
        coll = make_coll(strings, alpha.letters)
        ref = oracle_all(coll)
        refs, bwt, lcp = _keyed_reference(coll)
        assert ref.sa == refs
        assert ref.bwt == bwt
        assert ref.lcp == lcp


def test_partial_columns_filter_the_sorted_order():
    rng = random.Random(13)
    for _ in range(10):
        strings, alpha = random_instance(rng, max_m=10, max_k=6)
        coll = make_coll(strings, alpha.letters)
        ref = oracle_all(coll)
        for l in range(coll.k + 1):
            want = [sym for r, sym in zip(ref.sa, ref.bwt) if r.length == l]
            assert ref.partial_b[l] == want
            assert len(ref.partial_b[l]) == coll.m
