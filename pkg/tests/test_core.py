import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from semisep import (
    AmbientMismatch,
    MalformedInput,
    NotAssociative,
    Semigroup,
    SubsetMask,
    check_associativity,
    closure,
    format_semigroup,
    format_subset,
    identity_element,
    is_subsemigroup,
    multiply_subsets,
    parse_semigroup,
    parse_semigroups,
    parse_subset,
    power_subset,
)
from semisep.corpus import corpus_up_to

import oracles

CORPUS3 = corpus_up_to(3)


def S_(S, *names):
    return S.subset(names)


def test_parse_example(example):
    assert example.order == 4
    assert example.names == ("0", "a", "b", "1")
    # row a, column b
    assert example(1, 2) == 0
    assert example.table == ((0, 0, 0, 0), (0, 1, 0, 1), (0, 0, 2, 2), (0, 1, 2, 3))


def test_parse_trivial_and_left_zero():
    assert parse_semigroup("1\n0").order == 1
    lz = parse_semigroup("2\n0 0\n1 1")
    assert lz.table == ((0, 0), (1, 1))


@pytest.mark.parametrize(
    "text",
    [
        "",
        "3\n0 0\n0 0",
        "2\n0 0\n0",
        "2\n0 x\n0 0",
        "# p q\n2\np r\nq q",
        "# p p\n2\n0 0\n0 0",
        "2\n0 2\n0 0",
        "two\n0",
    ],
)
def test_parse_malformed(text):
    with pytest.raises(MalformedInput):
        parse_semigroup(text)


def test_parse_not_associative_reports_witness():
    with pytest.raises(NotAssociative) as err:
        parse_semigroup("2\n1 0\n0 0")
    assert err.value.witness == (0, 0, 1)


def test_round_trip(example):
    assert parse_semigroup(format_semigroup(example)) == example
    text = "\n".join(format_semigroup(S) for S in CORPUS3[:10])
    assert parse_semigroups(text) == CORPUS3[:10]


def test_check_associativity_examples(example):
    assert check_associativity(example.table) is None
    assert check_associativity([[0, 0], [0, 1]]) is None
    bad = [[1, 0], [0, 0]]
    failures = oracles.associativity_failures(bad)
    assert failures  # brute force: the table is not associative
    assert check_associativity(bad) == min(failures) == (0, 0, 1)


def test_check_associativity_matches_scan():
    from itertools import product

    for flat in product(range(2), repeat=4):
        t = [flat[:2], flat[2:]]
        fails = oracles.associativity_failures(t)
        assert check_associativity(t) == (min(fails) if fails else None)


def test_multiply_subsets(example):
    S = example
    assert multiply_subsets(S, S_(S, "a"), S_(S, "b")) == S_(S, "0")
    assert multiply_subsets(S, S_(S, "a"), S.empty) == S.empty
    abn = S_(S, "a", "b", "1")
    assert multiply_subsets(S, abn, abn) == S.full


def test_ambient_mismatch(example):
    with pytest.raises(AmbientMismatch):
        multiply_subsets(example, example.full, SubsetMask.full(3))
    with pytest.raises(AmbientMismatch):
        example.full | SubsetMask.full(3)


def test_power_subset(example):
    S = example
    assert power_subset(S, S_(S, "a"), 2) == S_(S, "a")
    A = S_(S, "b", "1")
    assert power_subset(S, A, 1) == A
    assert power_subset(S, S_(S, "a", "b"), 2) == S_(S, "0", "a", "b")
    with pytest.raises(ValueError):
        power_subset(S, A, 0)


def test_is_subsemigroup(example):
    S = example
    assert is_subsemigroup(S, S.full)
    assert not is_subsemigroup(S, S_(S, "a", "b"))
    # a*b = 0 lies outside, so the set printed in the worked example is not closed
    assert not is_subsemigroup(S, S_(S, "a", "b", "1"))
    assert is_subsemigroup(S, S_(S, "a", "1"))
    assert not is_subsemigroup(S, S.empty)


def test_closure(example):
    S = example
    assert closure(S, S_(S, "a", "b")) == S_(S, "0", "a", "b")
    assert closure(S, S.empty) == S.empty
    assert closure(S, S.full) == S.full


def test_identity_element(example, left_zero, trivial):
    assert identity_element(example) == 3
    assert identity_element(left_zero) is None
    assert identity_element(trivial) == 0


def test_subset_literals(example):
    S = example
    assert parse_subset(S, "{0,a,b}") == S_(S, "0", "a", "b")
    assert parse_subset(S, "{}") == S.empty
    assert parse_subset(S, " { 1 , a } ") == S_(S, "a", "1")
    assert format_subset(S, S_(S, "1", "a")) == "{a,1}"
    with pytest.raises(MalformedInput):
        parse_subset(S, "{c}")
    with pytest.raises(MalformedInput):
        parse_subset(S, "0,a")


def test_subset_names_only_when_declared():
    S = parse_semigroup("2\n0 0\n0 1")
    assert parse_subset(S, "{1}").bits == 2
    with pytest.raises(MalformedInput):
        parse_subset(S, "{a}")


def test_large_order_ingest():
    # cyclic group of order 64
    n = 64
    S = Semigroup([[(x + y) % n for y in range(n)] for x in range(n)])
    assert S.order == 64
    assert identity_element(S) == 0
    evens = S.subset(range(0, n, 2))
    assert is_subsemigroup(S, evens)
    assert len(closure(S, S.subset([2]))) == 32


def test_order_limits():
    with pytest.raises(MalformedInput):
        Semigroup([[0] * 65 for _ in range(65)])


def test_semigroup_is_hashable_and_picklable(example):
    import pickle

    assert pickle.loads(pickle.dumps(example)) == example
    assert len({example, parse_semigroup(format_semigroup(example))}) == 1


# ---------------------------------------------------------------------------
# properties over the order <= 3 corpus

semigroups = st.sampled_from(CORPUS3)


@st.composite
def with_masks(draw, k=2):
    S = draw(semigroups)
    masks = [SubsetMask(S.order, draw(st.integers(0, (1 << S.order) - 1))) for _ in range(k)]
    return (S, *masks)


@given(with_masks(4))
@settings(max_examples=300, deadline=None)
def test_multiply_monotone(args):
    S, A, B, C, D = args
    A2, B2 = A | C, B | D
    assert multiply_subsets(S, A, B).issubset(multiply_subsets(S, A2, B2))


@given(with_masks(2))
@settings(max_examples=300, deadline=None)
def test_closure_operator(args):
    S, A, B = args
    cA = closure(S, A)
    assert A.issubset(cA)
    assert closure(S, cA) == cA
    assert cA.issubset(closure(S, A | B))
    if A:
        assert is_subsemigroup(S, cA)


@given(with_masks(1))
@settings(max_examples=300, deadline=None)
def test_multiply_matches_set_oracle(args):
    S, A = args
    expected = oracles.mul(S.table, set(A), set(A))
    assert set(multiply_subsets(S, A, A)) == expected


@given(st.integers(1, 12), st.data())
def test_subset_mask_algebra(n, data):
    a = data.draw(st.integers(0, (1 << n) - 1))
    b = data.draw(st.integers(0, (1 << n) - 1))
    A, B = SubsetMask(n, a), SubsetMask(n, b)
    assert set(A | B) == set(A) | set(B)
    assert set(A & B) == set(A) & set(B)
    assert set(A - B) == set(A) - set(B)
    assert set(~A) == set(range(n)) - set(A)
    assert ~~A == A
    assert len(A) == len(set(A))
    assert A.issubset(B) == (set(A) <= set(B))
