"""Unitary subsemigroups, ideals, prime and maximal ideals."""

from __future__ import annotations

from .core import (
    Semigroup,
    SemigroupError,
    SubsetMask,
    _check_ambient,
    _mul_bits,
    is_subsemigroup_bits,
)
from .separators import _row, separator_table


class NotASubsemigroup(SemigroupError, ValueError):
    pass


class EmptySet(SemigroupError, ValueError):
    pass


def _unitary_bits(S: Semigroup, u: int) -> bool:
    t, n = S.table, S.order
    for a in range(n):
        a_in = u >> a & 1
        row = t[a]
        for b in range(n):
            if u >> row[b] & 1 and a_in != u >> b & 1:
                return False
    return True


def is_unitary(S: Semigroup, U: SubsetMask) -> bool:
    """``ab`` in ``U`` with one factor in ``U`` forces the other factor into ``U``."""
    _check_ambient(S, U)
    if not is_subsemigroup_bits(S, U.bits):
        raise NotASubsemigroup(f"{U} is not a subsemigroup")
    return _unitary_bits(S, U.bits)


def is_unitary_subsemigroup(S: Semigroup, U: SubsetMask) -> bool:
    _check_ambient(S, U)
    return is_subsemigroup_bits(S, U.bits) and _unitary_bits(S, U.bits)


def _ideal_bits(S: Semigroup, r: int) -> bool:
    full = (1 << S.order) - 1
    return r != 0 and (_mul_bits(S, full, r) | _mul_bits(S, r, full)) & ~r == 0


def is_ideal(S: Semigroup, R: SubsetMask) -> bool:
    _check_ambient(S, R)
    if not R:
        raise EmptySet("ideals are non-empty")
    return _ideal_bits(S, R.bits)


def _prime_bits(S: Semigroup, p: int) -> bool:
    full = (1 << S.order) - 1
    if p == full or not _ideal_bits(S, p):
        return False
    # ab in P with a, b outside P: the complement must be closed
    q = full & ~p
    return _mul_bits(S, q, q) & p == 0


def is_prime_ideal(S: Semigroup, P: SubsetMask) -> bool:
    _check_ambient(S, P)
    return _prime_bits(S, P.bits)


def ideals(S: Semigroup) -> list[SubsetMask]:
    return [SubsetMask(S.order, b) for b in range(1, 1 << S.order) if _ideal_bits(S, b)]


def _supersets(bits: int, full: int):
    """Strict supersets of ``bits`` inside ``full``, excluding ``full`` itself."""
    free = full & ~bits
    sub = (free - 1) & free
    while sub:
        yield bits | sub
        sub = (sub - 1) & free


def _maximal_ideal_bits(S: Semigroup, m: int) -> bool:
    full = (1 << S.order) - 1
    if m == full or not _ideal_bits(S, m):
        return False
    return not any(_ideal_bits(S, a) for a in _supersets(m, full))


def is_maximal_ideal(S: Semigroup, M: SubsetMask) -> bool:
    _check_ambient(S, M)
    return _maximal_ideal_bits(S, M.bits)


def _maximal_subsemigroup_bits(S: Semigroup, a: int) -> bool:
    full = (1 << S.order) - 1
    return not any(is_subsemigroup_bits(S, b) for b in _supersets(a, full))


def is_maximal_subsemigroup(S: Semigroup, A: SubsetMask) -> bool:
    _check_ambient(S, A)
    if not is_subsemigroup_bits(S, A.bits):
        raise NotASubsemigroup(f"{A} is not a subsemigroup")
    if A.bits == S.full.bits:
        raise NotASubsemigroup("a maximal subsemigroup must be proper")
    return _maximal_subsemigroup_bits(S, A.bits)


def enumerate_prime_ideals(S: Semigroup, *, cross_check: bool = True) -> list[SubsetMask]:
    """Prime ideals in increasing mask order.

    With ``cross_check`` the list is recomputed as the subsemigroups whose
    complement is a unitary subsemigroup, and the two must agree.
    """
    n, full = S.order, (1 << S.order) - 1
    direct = [b for b in range(1, full + 1) if _prime_bits(S, b)]
    if cross_check:
        other = _primes_via_complement_bits(S)
        if other != direct:
            raise AssertionError(f"prime ideal paths disagree: {direct} vs {other}")
    return [SubsetMask(n, b) for b in direct]


def _primes_via_complement_bits(S: Semigroup) -> list[int]:
    full = (1 << S.order) - 1
    out = []
    for p in range(1, full + 1):
        q = full & ~p
        if is_subsemigroup_bits(S, p) and is_subsemigroup_bits(S, q) and _unitary_bits(S, q):
            out.append(p)
    return out


def prime_ideals_via_complement(S: Semigroup) -> list[SubsetMask]:
    """Prime ideals found as complements of unitary subsemigroups."""
    return [SubsetMask(S.order, b) for b in _primes_via_complement_bits(S)]


def unitary_subsemigroups(S: Semigroup) -> list[SubsetMask]:
    return [
        SubsetMask(S.order, b)
        for b in range(1, 1 << S.order)
        if is_subsemigroup_bits(S, b) and _unitary_bits(S, b)
    ]


# ---------------------------------------------------------------------------
# theorem checks


def prop_ideal_disjoint(S: Semigroup):
    """Every proper ideal R misses its own separator."""
    sep, full = separator_table(S), (1 << S.order) - 1
    count, bad = 0, []
    for r in range(1, full):
        if _ideal_bits(S, r):
            count += 1
            if r & sep[r]:
                bad.append(_row(S, R=r, sep=sep[r]))
    return count, bad


def prop_unitary_fixed(S: Semigroup):
    """For subsemigroups: A = Sep A exactly when A is unitary."""
    sep = separator_table(S)
    count, bad = 0, []
    for a in range(1, 1 << S.order):
        if is_subsemigroup_bits(S, a):
            count += 1
            if (sep[a] == a) != _unitary_bits(S, a):
                bad.append(_row(S, A=a, sep=sep[a], unitary=_unitary_bits(S, a)))
    return count, bad


def prop_fixed_points_are_unitary(S: Semigroup):
    sep = separator_table(S)
    fixed = [a for a in range(1, 1 << S.order) if sep[a] == a]
    unitary = [u.bits for u in unitary_subsemigroups(S)]
    bad = [] if fixed == unitary else [_row(S, fixed_points=fixed, unitary=unitary)]
    return 1, bad


def prop_prime_complement(S: Semigroup):
    """For subsemigroups P: prime ideal exactly when the complement is a unitary subsemigroup."""
    full = (1 << S.order) - 1
    count, bad = 0, []
    for p in range(1, full + 1):
        if not is_subsemigroup_bits(S, p):
            continue
        count += 1
        q = full & ~p
        rhs = is_subsemigroup_bits(S, q) and _unitary_bits(S, q)
        if _prime_bits(S, p) != rhs:
            bad.append(_row(S, P=p, prime=_prime_bits(S, p), complement_unitary=rhs))
    return count, bad


def prop_prime_paths(S: Semigroup):
    full = (1 << S.order) - 1
    direct = [b for b in range(1, full + 1) if _prime_bits(S, b)]
    other = _primes_via_complement_bits(S)
    bad = [] if direct == other else [_row(S, direct=direct, via_complement=other)]
    return 1, bad


def prop_maximal_prime(S: Semigroup):
    """A maximal ideal that is a maximal subsemigroup with non-empty separator is prime."""
    sep, full = separator_table(S), (1 << S.order) - 1
    count, bad = 0, []
    for m in range(1, full):
        if _maximal_ideal_bits(S, m) and _maximal_subsemigroup_bits(S, m) and sep[m]:
            count += 1
            if not _prime_bits(S, m):
                bad.append(_row(S, I=m, sep=sep[m]))
    return count, bad
