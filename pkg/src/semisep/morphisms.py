"""Homomorphisms between finite semigroups and the transport of separators along them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import (
    AmbientMismatch,
    OrderTooLarge,
    Semigroup,
    SemigroupError,
    SubsetMask,
    is_subsemigroup_bits,
    mask_elements,
)
from .separators import _row, separator_table

MAX_ENDO_ORDER = 6


class NotSurjective(SemigroupError, ValueError):
    pass


@dataclass(frozen=True)
class HomomorphismMap:
    source_order: int
    target_order: int
    map: tuple[int, ...]

    def __post_init__(self):
        if len(self.map) != self.source_order:
            raise ValueError("map length must equal the source order")
        if any(not 0 <= v < self.target_order for v in self.map):
            raise ValueError("map values outside the target")

    def __call__(self, x: int) -> int:
        return self.map[x]

    @property
    def is_surjective(self) -> bool:
        return len(set(self.map)) == self.target_order

    def is_homomorphism(self, source: Semigroup, target: Semigroup) -> bool:
        m, s, t = self.map, source.table, target.table
        n = self.source_order
        return all(m[s[x][y]] == t[m[x]][m[y]] for x in range(n) for y in range(n))


def _search_maps(domain: Sequence[int], codomain: Sequence[int], table: Sequence[Sequence[int]]):
    """Multiplicative maps ``domain -> codomain`` (both element lists of one table).

    Backtracks over ``domain`` in order and rejects a partial map as soon as an
    assigned pair has an assigned product that disagrees.
    """
    k = len(domain)
    pos = {x: i for i, x in enumerate(domain)}
    assign: list[int | None] = [None] * k

    def consistent(i: int) -> bool:
        # only constraints touching the newly assigned position i
        for j in range(i + 1):
            for l in range(i + 1):
                p = pos.get(table[domain[j]][domain[l]])
                if p is None:
                    raise ValueError("domain is not closed under the product")
                if p <= i and i in (j, l, p) and assign[p] != table[assign[j]][assign[l]]:
                    return False
        return True

    def rec(i: int):
        if i == k:
            yield tuple(assign)
            return
        for v in codomain:
            assign[i] = v
            if consistent(i):
                yield from rec(i + 1)
        assign[i] = None

    yield from rec(0)


def enumerate_endomorphisms(S: Semigroup, surjective_only: bool = False) -> list[HomomorphismMap]:
    """All endomorphisms, lexicographic by map array.

    Surjectivity is judged by image size; nothing assumes it coincides with
    bijectivity.
    """
    n = S.order
    if n > MAX_ENDO_ORDER:
        raise OrderTooLarge(f"endomorphism search limited to order {MAX_ENDO_ORDER}")
    out = []
    for m in _search_maps(range(n), range(n), S.table):
        if surjective_only and len(set(m)) != n:
            continue
        out.append(HomomorphismMap(n, n, m))
    return out


def brute_force_endomorphisms(S: Semigroup, surjective_only: bool = False) -> list[HomomorphismMap]:
    """Scan all ``n**n`` maps.  Reference for small orders."""
    from itertools import product

    n, t = S.order, S.table
    out = []
    for m in product(range(n), repeat=n):
        if all(m[t[x][y]] == t[m[x]][m[y]] for x in range(n) for y in range(n)):
            if not surjective_only or len(set(m)) == n:
                out.append(HomomorphismMap(n, n, m))
    return out


def image(phi: HomomorphismMap, A: SubsetMask) -> SubsetMask:
    if A.ambient != phi.source_order:
        raise AmbientMismatch("subset does not live in the source")
    return SubsetMask.of(phi.target_order, (phi.map[x] for x in A))


def preimage(phi: HomomorphismMap, B: SubsetMask) -> SubsetMask:
    if B.ambient != phi.target_order:
        raise AmbientMismatch("subset does not live in the target")
    return SubsetMask.of(phi.source_order, (x for x in range(phi.source_order) if phi.map[x] in B))


def _image_bits(m: Sequence[int], bits: int) -> int:
    out = 0
    for x in mask_elements(bits):
        out |= 1 << m[x]
    return out


def _preimage_bits(m: Sequence[int], bits: int) -> int:
    out = 0
    for x, v in enumerate(m):
        if v >= 0 and bits >> v & 1:
            out |= 1 << x
    return out


@dataclass
class VerificationRow:
    instances_checked: int
    violations: list[dict]

    @property
    def passed(self) -> bool:
        return not self.violations


def check_theorem4(S: Semigroup, phi: HomomorphismMap) -> VerificationRow:
    """For a surjective endomorphism and every subsemigroup ``R2`` whose preimage
    ``R1`` is a subsemigroup, check ``phi(Sep R1) = Sep R2``."""
    n = S.order
    if phi.source_order != n or phi.target_order != n:
        raise AmbientMismatch("phi must be an endomorphism of S")
    if not phi.is_surjective:
        raise NotSurjective(f"{phi.map} is not onto")
    sep = separator_table(S)
    m = phi.map
    count, bad = 0, []
    for r2 in range(1, 1 << n):
        if not is_subsemigroup_bits(S, r2):
            continue
        r1 = _preimage_bits(m, r2)
        if not is_subsemigroup_bits(S, r1):
            continue
        count += 1
        lhs = _image_bits(m, sep[r1])
        if lhs != sep[r2]:
            bad.append(_row(S, map=list(m), R1=r1, R2=r2, lhs=lhs, rhs=sep[r2]))
    return VerificationRow(count, bad)


def prop_surjective_transport(S: Semigroup):
    count, bad = 0, []
    for phi in enumerate_endomorphisms(S, surjective_only=True):
        row = check_theorem4(S, phi)
        count += row.instances_checked
        bad.extend(row.violations)
    return count, bad


def prop_automorphism_transport(S: Semigroup):
    """For every automorphism and subsemigroups with ``phi(A) = B``: ``phi(Sep A) = Sep B``."""
    n = S.order
    sep = separator_table(S)
    subs = [b for b in range(1, 1 << n) if is_subsemigroup_bits(S, b)]
    count, bad = 0, []
    for phi in enumerate_endomorphisms(S, surjective_only=True):
        m = phi.map
        if len(set(m)) != n:
            continue
        for a in subs:
            b = _image_bits(m, a)
            count += 1
            if _image_bits(m, sep[a]) != sep[b]:
                bad.append(_row(S, map=list(m), A=a, B=b, lhs=_image_bits(m, sep[a]), rhs=sep[b]))
    return count, bad


# ---------------------------------------------------------------------------
# homomorphisms between subsemigroups


def _restricted_separator(S: Semigroup, ambient: int, a: int) -> int:
    """Separator of ``a`` computed with the subsemigroup ``ambient`` as the whole semigroup."""
    t = S.table
    elems = mask_elements(ambient)
    out = 0
    for x in elems:
        if all(
            (a >> t[x][y] & 1) == (a >> y & 1) and (a >> t[y][x] & 1) == (a >> y & 1) for y in elems
        ):
            out |= 1 << x
    return out


def surjective_homs_between(S: Semigroup, a: int, b: int) -> list[tuple[int, ...]]:
    """Onto homomorphisms from subsemigroup ``a`` to subsemigroup ``b``.

    Returned as full-length arrays indexed by elements of ``S``, with ``-1``
    outside ``a``.
    """
    dom, cod = mask_elements(a), mask_elements(b)
    out = []
    for m in _search_maps(dom, cod, S.table):
        if len(set(m)) != len(cod):
            continue
        full = [-1] * S.order
        for x, v in zip(dom, m):
            full[x] = v
        out.append(tuple(full))
    return out


@dataclass
class Remark5Report:
    """Outcome of the exhaustive search over pairs of separator-including subsemigroups.

    ``witness`` is the first ``(S, A, B, phi)`` with ``phi(Sep A) != Sep B``.
    The second block tallies the hypothesis ``Sep A = phi^{-1}(Sep B)`` and
    whether ``phi(Sep Sep A) = Sep Sep B`` held in those cases.
    """

    separators: str
    semigroups: int = 0
    triples_checked: int = 0
    witness: dict | None = None
    witnesses_total: int = 0
    preimage_hypothesis_cases: int = 0
    sepsep_image_mismatches: list[dict] = None

    def to_dict(self) -> dict:
        return {
            "separators": self.separators,
            "semigroups": self.semigroups,
            "triples_checked": self.triples_checked,
            "witness": self.witness,
            "witnesses_total": self.witnesses_total,
            "preimage_hypothesis_cases": self.preimage_hypothesis_cases,
            "sepsep_image_mismatches": self.sepsep_image_mismatches or [],
        }


def remark5_scan(corpus: Iterable[Semigroup], separators: str = "ambient") -> Remark5Report:
    """Scan every corpus member for homomorphisms that fail to carry separators across.

    ``separators="ambient"`` computes ``Sep A`` and ``Sep B`` inside ``S``
    (both lie inside ``A``, ``B`` because they are separator including).
    ``separators="restricted"`` computes them with ``A`` and ``B`` as the whole
    semigroup.
    """
    if separators not in ("ambient", "restricted"):
        raise ValueError("separators must be 'ambient' or 'restricted'")
    rep = Remark5Report(separators=separators, sepsep_image_mismatches=[])
    for S in corpus:
        rep.semigroups += 1
        n = S.order
        sep = separator_table(S)
        inc = [a for a in range(1, 1 << n) if is_subsemigroup_bits(S, a) and sep[a] & ~a == 0]
        for a in inc:
            for b in inc:
                if separators == "ambient":
                    sa, sb = sep[a], sep[b]
                    ssa, ssb = sep[sa], sep[sb]
                else:
                    sa, sb = _restricted_separator(S, a, a), _restricted_separator(S, b, b)
                    ssa, ssb = _restricted_separator(S, a, sa), _restricted_separator(S, b, sb)
                for m in surjective_homs_between(S, a, b):
                    rep.triples_checked += 1
                    lhs = _image_bits(m, sa)
                    if lhs != sb:
                        rep.witnesses_total += 1
                        if rep.witness is None:
                            rep.witness = {
                                "semigroup": S.to_list(),
                                "A": a,
                                "B": b,
                                "map": list(m),
                                "lhs": lhs,
                                "rhs": sb,
                            }
                    # phi(Sep Sep A) is only defined when Sep A is non-empty
                    if sa and sb and sa == _preimage_bits(m, sb):
                        rep.preimage_hypothesis_cases += 1
                        if _image_bits(m, ssa) != ssb:
                            rep.sepsep_image_mismatches.append(
                                {"semigroup": S.to_list(), "A": a, "B": b, "map": list(m),
                                 "sepsep_A": ssa, "sepsep_B": ssb}
                            )
    return rep


def search_remark5_witness(corpus: Iterable[Semigroup], separators: str = "ambient") -> dict | None:
    return remark5_scan(corpus, separators).witness
