import itertools
import random

import pytest
from hypothesis import given, strategies as st

from diskbwt import Alphabet, SuffixRef, compare_suffixes, validate_collection
from diskbwt.errors import EmptyInput, UnequalLength, UnknownSymbol

from conftest import make_coll


def test_alphabet_codes_are_stable():
    a = Alphabet("ACGT")
    assert a.size == 4
    assert a.encode("A") == 1 and a.encode("T") == 4
    assert a.decode(0) == "$"
    assert a.encode_string("CAT") == bytes([2, 1, 4])
    assert a.decode_all([2, 1, 4, 0]) == "CAT$"


@pytest.mark.parametrize("letters", ["", "CA", "AA", "A$"])
def test_alphabet_rejects_bad_letter_sets(letters):
    with pytest.raises(ValueError):
        Alphabet(letters)


def test_validate_collection_examples():
    coll = validate_collection(["AC", "CA"], Alphabet("AC"))
    assert (coll.m, coll.k) == (2, 2)
    coll = validate_collection(["A"], Alphabet("A"))
    assert (coll.m, coll.k) == (1, 1)
    with pytest.raises(UnequalLength):
        validate_collection(["AC", "CAT"], Alphabet("ACT"))


def test_validate_collection_errors():
    with pytest.raises(EmptyInput):
        validate_collection([], Alphabet("AC"))
    with pytest.raises(EmptyInput):
        validate_collection([""], Alphabet("AC"))
    with pytest.raises(UnknownSymbol, match="string 2"):
        validate_collection(["AC", "AX"], Alphabet("AC"))
    with pytest.raises(UnequalLength, match="string 3"):
        validate_collection(["AC", "CA", "C"], Alphabet("AC"))


def test_compare_suffixes_tie_rules():
    coll = make_coll(["AC", "CA"])
    # equal 1-prefix "A": the shorter suffix wins
    assert compare_suffixes(SuffixRef(2, 1), SuffixRef(1, 2), 1, coll) == -1
    # two bare sentinels: the smaller string index wins
    assert compare_suffixes(SuffixRef(1, 0), SuffixRef(2, 0), 0, coll) == -1
    # "C$" < "CA" because the sentinel precedes every letter
    assert compare_suffixes(SuffixRef(1, 1), SuffixRef(2, 2), 2, coll) == -1
    assert compare_suffixes(SuffixRef(2, 2), SuffixRef(1, 1), 2, coll) == 1
    assert compare_suffixes(SuffixRef(1, 1), SuffixRef(1, 1), 2, coll) == 0


def _all_refs(coll):
    return [SuffixRef(j, l) for j in range(1, coll.m + 1) for l in range(coll.k + 1)]


def _suffix_key(coll, ref, depth):
    """Independent comparison key: letters as (code, 0), sentinel as (0, index)."""
    letters = coll.suffix_letters(ref)
    key = tuple((c, 0) for c in letters) + ((0, ref.string_index),)
    return key[:depth], ref.length, ref.string_index


@st.composite
def small_collections(draw):
    letters = draw(st.sampled_from(["AC", "ACGT"]))
    m = draw(st.integers(1, 6))
    k = draw(st.integers(1, 5))
    strings = [draw(st.text(alphabet=letters, min_size=k, max_size=k)) for _ in range(m)]
    return make_coll(strings, letters)


@given(coll=small_collections(), data=st.data())
def test_strict_total_order(coll, data):
    depth = data.draw(st.integers(0, coll.k + 2))
    refs = _all_refs(coll)
    a = data.draw(st.sampled_from(refs))
    b = data.draw(st.sampled_from(refs))
    c = data.draw(st.sampled_from(refs))
    # antisymmetry, and equality only on identical refs
    assert compare_suffixes(a, b, depth, coll) == -compare_suffixes(b, a, depth, coll)
    assert (compare_suffixes(a, b, depth, coll) == 0) == (a == b)
    # transitivity
    if compare_suffixes(a, b, depth, coll) <= 0 and compare_suffixes(b, c, depth, coll) <= 0:
        assert compare_suffixes(a, c, depth, coll) <= 0


def test_full_depth_matches_lexicographic_order():
    rng = random.Random(11)
    for _ in range(40):
        letters = rng.choice(["AC", "ACGT"])
        m = rng.randint(1, 8)
        k = rng.randint(1, 6)
        coll = make_coll(
            ["".join(rng.choice(letters) for _ in range(k)) for _ in range(m)],
            letters)
        refs = _all_refs(coll)
        depth = coll.k + 1
        for a, b in itertools.combinations(refs, 2):
            want = -1 if _suffix_key(coll, a, depth) < _suffix_key(coll, b, depth) else 1
            assert compare_suffixes(a, b, depth, coll) == want


@given(coll=small_collections(), data=st.data())
def test_monotone_refinement(coll, data):
    """A strict prefix difference at depth p persists at every deeper depth."""
    refs = _all_refs(coll)
    a = data.draw(st.sampled_from(refs))
    b = data.draw(st.sampled_from(refs))
    for p in range(coll.k + 2):
        prefix_a = _suffix_key(coll, a, p)[0]
        prefix_b = _suffix_key(coll, b, p)[0]
        if prefix_a != prefix_b:
            verdict = compare_suffixes(a, b, p, coll)
            for q in range(p, coll.k + 3):
                assert compare_suffixes(a, b, q, coll) == verdict
            break
