import pytest

from semisep import SubsetMask, classify, idealizer, separator, separator_fixed_points, separator_table
from semisep.separators import SeparatorClassification as K
from semisep.separators import is_excluding, is_including

import oracles


def sub(S, *names):
    return S.subset(names)


def test_idealizer(example):
    S = example
    assert idealizer(S, S.empty) == S.full
    assert idealizer(S, S.full) == S.full
    expected = oracles.idealizer(S.table, {1})
    assert expected == {1, 3}
    assert idealizer(S, sub(S, "a")) == sub(S, "a", "1")


@pytest.mark.parametrize(
    "members, expected",
    [
        (("1",), ("1",)),
        (("a",), ("1",)),
        (("0", "a", "b"), ("1",)),
        (("0",), ("1",)),
        (("a", "1"), ("a", "1")),
        (("0", "a"), ("b", "1")),
    ],
)
def test_separator_example(example, members, expected):
    S = example
    A = sub(S, *members)
    assert set(oracles.separator(S.table, set(A))) == set(sub(S, *expected))
    assert separator(S, A) == sub(S, *expected)


def test_separator_of_extremes(example, left_zero, trivial):
    for S in (example, left_zero, trivial):
        assert separator(S, S.empty) == S.full
        assert separator(S, S.full) == S.full


def test_separator_of_abn_follows_the_table(example):
    # a·b = 0 falls outside {a,b,1}, so only 1 separates it, same as for {0}
    S = example
    A = sub(S, "a", "b", "1")
    assert oracles.separator(S.table, set(A)) == {3}
    assert separator(S, A) == sub(S, "1")
    assert separator(S, A) == separator(S, ~A)


def test_classify(example, left_zero):
    S = example
    assert classify(S, sub(S, "a")) is K.EXCLUDING
    assert classify(S, sub(S, "a", "1")) is K.INCLUDING
    # Sep{a,b,1} = {1} still sits inside {a,b,1}
    assert classify(S, sub(S, "a", "b", "1")) is K.INCLUDING
    assert classify(left_zero, left_zero.subset([0])) is K.EMPTY_SEPARATOR
    assert oracles.separator(left_zero.table, {0}) == set()


def test_classify_trichotomy_everywhere(corpus3):
    for S in corpus3:
        for A in S.subsets():
            k = classify(S, A)
            sep = separator(S, A)
            if k is K.EMPTY_SEPARATOR:
                assert not sep
                assert is_including(S, A) and is_excluding(S, A)
            elif k is K.INCLUDING:
                assert sep.issubset(A)
            else:
                assert sep.issubset(~A)


def test_fixed_points(example, trivial, left_zero):
    S = example
    brute = [oracles.to_bits(A) for A in oracles.subsets(4) if A and oracles.separator(S.table, A) == A]
    assert brute == [0b1000, 0b1010, 0b1100, 0b1111]
    assert [A.bits for A in separator_fixed_points(S)] == brute
    assert separator_fixed_points(trivial) == [trivial.full]
    brute_lz = [oracles.to_bits(A) for A in oracles.subsets(2) if A and oracles.separator(left_zero.table, A) == A]
    assert [A.bits for A in separator_fixed_points(left_zero)] == brute_lz == [0b11]


def test_separator_matches_oracle_on_corpus(corpus3):
    for S in corpus3:
        table = separator_table(S)
        for A in oracles.subsets(S.order):
            bits = oracles.to_bits(A)
            expect = oracles.to_bits(oracles.separator(S.table, A))
            assert separator(S, SubsetMask(S.order, bits)).bits == expect
            assert table[bits] == expect


def test_idealizer_matches_oracle_on_corpus(corpus3):
    for S in corpus3:
        for A in oracles.subsets(S.order):
            got = idealizer(S, SubsetMask(S.order, oracles.to_bits(A)))
            assert set(got) == oracles.idealizer(S.table, A)


def test_separator_is_idealizer_intersection(corpus3):
    for S in corpus3:
        for A in S.subsets():
            assert separator(S, A) == idealizer(S, A) & idealizer(S, ~A)
