"""Idealizers, separators and the including/excluding classification.

``Sep A`` is the set of elements ``x`` with ``xA, Ax`` inside ``A`` and
``xA', A'x`` inside the complement ``A'``.  Equivalently, left and right
multiplication by ``x`` both pull ``A`` back to itself.

The ``prop_*`` functions at the bottom are the theorem checks run by the
corpus registry.  Each one takes a semigroup and returns
``(instances_checked, violations)``, where every violation is a dict that
replays the failing case.
"""

from __future__ import annotations

import enum
import random
from functools import lru_cache

import numpy as np

from .core import (
    Semigroup,
    SemigroupError,
    SubsetMask,
    _check_ambient,
    identity_element,
    is_subsemigroup_bits,
    mask_elements,
)


class InternalTrichotomyViolation(SemigroupError, AssertionError):
    pass


class SeparatorClassification(enum.Enum):
    EMPTY_SEPARATOR = "EmptySeparator"
    INCLUDING = "Including"
    EXCLUDING = "Excluding"

    def __str__(self) -> str:
        return self.value


def _idealizer_bits(S: Semigroup, bits: int) -> int:
    t, n = S.table, S.order
    elems = mask_elements(bits)
    out = 0
    for x in range(n):
        row = t[x]
        if all(bits >> row[a] & 1 and bits >> t[a][x] & 1 for a in elems):
            out |= 1 << x
    return out


def idealizer(S: Semigroup, A: SubsetMask) -> SubsetMask:
    """``{x : xA ⊆ A and Ax ⊆ A}``; the idealizer of the empty set is ``S``."""
    _check_ambient(S, A)
    return SubsetMask(S.order, _idealizer_bits(S, A.bits))


def _separator_bits(S: Semigroup, bits: int) -> int:
    t, n = S.table, S.order
    out = 0
    for x in range(n):
        row = t[x]
        for a in range(n):
            inside = bits >> a & 1
            if bits >> row[a] & 1 != inside or bits >> t[a][x] & 1 != inside:
                break
        else:
            out |= 1 << x
    return out


def separator(S: Semigroup, A: SubsetMask) -> SubsetMask:
    _check_ambient(S, A)
    return SubsetMask(S.order, _separator_bits(S, A.bits))


@lru_cache(maxsize=8192)
def separator_table(S: Semigroup) -> tuple[int, ...]:
    """``Sep A`` as a bit mask for every subset ``A``, indexed by the mask of ``A``.

    Vectorised over all ``2**n`` subsets at once; only sensible for small ``n``.
    """
    n = S.order
    if n > 16:
        raise ValueError("separator_table is limited to order 16")
    masks = np.arange(1 << n, dtype=np.int64)
    member = (masks[:, None] >> np.arange(n)) & 1  # (2^n, n)
    T = S.array
    # left[A, x, a] = [x*a in A], right[A, x, a] = [a*x in A]
    left = member[:, T]
    right = member[:, T.T]
    ok = (left == member[:, None, :]).all(axis=2) & (right == member[:, None, :]).all(axis=2)
    weights = 1 << np.arange(n, dtype=np.int64)
    return tuple(int(v) for v in (ok * weights).sum(axis=1))


def classify(S: Semigroup, A: SubsetMask) -> SeparatorClassification:
    sep = separator(S, A)
    if not sep:
        return SeparatorClassification.EMPTY_SEPARATOR
    if sep.issubset(A):
        return SeparatorClassification.INCLUDING
    if sep.issubset(~A):
        return SeparatorClassification.EXCLUDING
    raise InternalTrichotomyViolation(f"Sep A meets both A and its complement for A={A}")


def is_including(S: Semigroup, A: SubsetMask) -> bool:
    """Separator including in the loose sense: ``Sep A ⊆ A``, empty separator allowed."""
    return separator(S, A).issubset(A)


def is_excluding(S: Semigroup, A: SubsetMask) -> bool:
    return separator(S, A).issubset(~A)


def separator_fixed_points(S: Semigroup) -> list[SubsetMask]:
    """Non-empty ``A`` with ``Sep A = A``, in increasing mask order."""
    n = S.order
    if n <= 16:
        table = separator_table(S)
        return [SubsetMask(n, b) for b in range(1, 1 << n) if table[b] == b]
    return [SubsetMask(n, b) for b in range(1, 1 << n) if _separator_bits(S, b) == b]


# ---------------------------------------------------------------------------
# theorem checks over all subsets of one semigroup


def _sub(a: int, b: int) -> bool:
    return a & ~b == 0


def _minimal_subsemigroup(S: Semigroup, bits: int) -> bool:
    if not is_subsemigroup_bits(S, bits):
        return False
    sub = (bits - 1) & bits
    while sub:
        if is_subsemigroup_bits(S, sub):
            return False
        sub = (sub - 1) & bits
    return True


def _row(S, **subsets):
    return {"table": S.to_list(), **subsets}


def prop_complement(S: Semigroup):
    """Sep A = Sep A'."""
    sep, full = separator_table(S), (1 << S.order) - 1
    bad = [_row(S, A=a, sep=sep[a], sep_complement=sep[full ^ a]) for a in range(full + 1) if sep[a] != sep[full ^ a]]
    return full + 1, bad


def prop_subsemigroup_or_empty(S: Semigroup):
    sep = separator_table(S)
    bad = [_row(S, A=a, sep=s) for a, s in enumerate(sep) if s and not is_subsemigroup_bits(S, s)]
    return len(sep), bad


def prop_identity(S: Semigroup):
    e = identity_element(S)
    sep = separator_table(S)
    if e is None:
        return 0, []
    bad = [_row(S, A=a, sep=s, identity=e) for a, s in enumerate(sep) if not s >> e & 1]
    return len(sep), bad


def _families(S: Semigroup, seed: int, triples: int):
    size = 1 << S.order
    for a in range(size):
        for b in range(size):
            yield (a, b)
    rng = random.Random(f"{seed}:{S.key().hex()}")
    for _ in range(triples):
        yield tuple(rng.randrange(size) for _ in range(3))


def prop_family(S: Semigroup, seed: int = 0, triples: int = 32):
    """∩ Sep A_f is inside Sep(∪ A_f) and Sep(∩ A_f): all pairs, plus seeded triples."""
    sep, full = separator_table(S), (1 << S.order) - 1
    count, bad = 0, []
    for fam in _families(S, seed, triples):
        common, union, inter = full, 0, full
        for a in fam:
            common &= sep[a]
            union |= a
            inter &= a
        count += 1
        if not (_sub(common, sep[union]) and _sub(common, sep[inter])):
            bad.append(_row(S, family=list(fam), common=common, sep_union=sep[union], sep_intersection=sep[inter]))
    return count, bad


def prop_sep_union(S: Semigroup):
    """Sep A ∩ Sep Sep A ⊆ Sep(A ∪ Sep A)."""
    sep = separator_table(S)
    bad = []
    for a, s in enumerate(sep):
        if not _sub(s & sep[s], sep[a | s]):
            bad.append(_row(S, A=a, sep=s, sepsep=sep[s], sep_union=sep[a | s]))
    return len(sep), bad


def prop_union_subsemigroup(S: Semigroup):
    """A a subsemigroup implies A ∪ Sep A is one."""
    sep = separator_table(S)
    count, bad = 0, []
    for a, s in enumerate(sep):
        if is_subsemigroup_bits(S, a):
            count += 1
            if not is_subsemigroup_bits(S, a | s):
                bad.append(_row(S, A=a, sep=s))
    return count, bad


def prop_trichotomy(S: Semigroup):
    sep, full = separator_table(S), (1 << S.order) - 1
    count, bad = 0, []
    for a, s in enumerate(sep):
        if s:
            count += 1
            if not (_sub(s, a) or _sub(s, full ^ a)):
                bad.append(_row(S, A=a, sep=s))
    return count, bad


def _pairs_check(S: Semigroup, check):
    sep, full = separator_table(S), (1 << S.order) - 1
    count, bad = 0, []
    for a in range(full + 1):
        for b in range(full + 1):
            if sep[a] & sep[b]:
                count += 1
                problem = check(sep, full, a, b)
                if problem:
                    bad.append(_row(S, A=a, B=b, sep_A=sep[a], sep_B=sep[b], failed=problem))
    return count, bad


def _inc(sep, x):
    return _sub(sep[x], x)


def _exc(sep, full, x):
    return _sub(sep[x], full ^ x)


def _th5(sep, full, a, b):
    if _inc(sep, a) and not (sep[a | b] and _inc(sep, a | b)):
        return "A including but A∪B not including with non-empty separator"
    if _exc(sep, full, a) and not (sep[a & b] and _exc(sep, full, a & b)):
        return "A excluding but A∩B not excluding with non-empty separator"
    return None


def _th6(sep, full, a, b):
    if _inc(sep, a) and _inc(sep, b) and not (sep[a & b] and _inc(sep, a & b)):
        return "A, B including but A∩B not including with non-empty separator"
    if _exc(sep, full, a) and _exc(sep, full, b) and not (sep[a | b] and _exc(sep, full, a | b)):
        return "A, B excluding but A∪B not excluding with non-empty separator"
    return None


def _cr3(sep, full, a, b):
    if _inc(sep, a) and _exc(sep, full, b):
        if not (sep[a | b] and _inc(sep, a | b)):
            return "A∪B not including with non-empty separator"
        if not (sep[a & b] and _exc(sep, full, a & b)):
            return "A∩B not excluding with non-empty separator"
    return None


def _cr4(sep, full, a, b):
    d = b & ~a
    if _inc(sep, a) and not (sep[d] and _exc(sep, full, d)):
        return "B∖A not excluding with non-empty separator"
    return None


def prop_including_union(S: Semigroup):
    return _pairs_check(S, _th5)


def prop_including_intersection(S: Semigroup):
    return _pairs_check(S, _th6)


def prop_including_excluding(S: Semigroup):
    return _pairs_check(S, _cr3)


def prop_difference(S: Semigroup):
    return _pairs_check(S, _cr4)


def prop_sepsep(S: Semigroup):
    """Sep A non-empty implies Sep Sep A ⊆ Sep A."""
    sep = separator_table(S)
    count, bad = 0, []
    for a, s in enumerate(sep):
        if s:
            count += 1
            if not _sub(sep[s], s):
                bad.append(_row(S, A=a, sep=s, sepsep=sep[s]))
    return count, bad


def prop_minimal(S: Semigroup):
    """Sep A a minimal subsemigroup implies Sep Sep A is empty or Sep A.

    Minimal is read as: no proper non-empty subsemigroup.
    """
    sep = separator_table(S)
    count, bad = 0, []
    minimal = {}
    for a, s in enumerate(sep):
        if s not in minimal:
            minimal[s] = _minimal_subsemigroup(S, s)
        if minimal[s]:
            count += 1
            if sep[s] not in (0, s):
                bad.append(_row(S, A=a, sep=s, sepsep=sep[s]))
    return count, bad


def regression_example(S: Semigroup, expected: dict[int, int]):
    """Compare computed separators with a mapping ``{mask of A: mask of Sep A}``."""
    sep = separator_table(S)
    bad = [_row(S, A=a, expected=e, got=sep[a]) for a, e in sorted(expected.items()) if sep[a] != e]
    return len(expected), bad


__all__ = [
    "InternalTrichotomyViolation",
    "SeparatorClassification",
    "classify",
    "idealizer",
    "is_excluding",
    "is_including",
    "separator",
    "separator_fixed_points",
    "separator_table",
]
