"""Complete corpora of small semigroups and the theorem registry run over them."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Callable, Iterable, Sequence

from . import ideals, morphisms, separators
from .core import OrderTooLarge, Semigroup, SemigroupError

DEFAULT_SEED = 20240601


class UnknownPropertyId(SemigroupError, KeyError):
    pass


# ---------------------------------------------------------------------------
# enumeration


def exhaustive_scan(n: int) -> list[Semigroup]:
    """Every associative table on ``n <= 3`` labeled elements, by brute force over all ``n**(n*n)`` tables."""
    if not 1 <= n <= 3:
        raise OrderTooLarge("exhaustive scan is limited to order 3")
    out = []
    triples = list(product(range(n), repeat=3))
    for flat in product(range(n), repeat=n * n):
        t = [flat[i * n : (i + 1) * n] for i in range(n)]
        if all(t[t[x][y]][z] == t[x][t[y][z]] for x, y, z in triples):
            out.append(Semigroup(t))
    return out


def _backtrack_tables(n: int) -> Iterable[list[list[int]]]:
    cells = [(x, y) for x in range(n) for y in range(n)]
    t = [[-1] * n for _ in range(n)]
    idx = range(n)

    def ok(x: int, y: int) -> bool:
        # every triple whose four cells are filled and that involves (x, y)
        for a in idx:
            for b in idx:
                ab = t[a][b]
                if ab < 0:
                    continue
                for c in idx:
                    bc = t[b][c]
                    if bc < 0:
                        continue
                    lhs, rhs = t[ab][c], t[a][bc]
                    if lhs < 0 or rhs < 0:
                        continue
                    if lhs != rhs and (x, y) in ((a, b), (b, c), (ab, c), (a, bc)):
                        return False
        return True

    def rec(k: int):
        if k == len(cells):
            yield [row[:] for row in t]
            return
        x, y = cells[k]
        for v in idx:
            t[x][y] = v
            if ok(x, y):
                yield from rec(k + 1)
        t[x][y] = -1

    yield from rec(0)


def enumerate_semigroups(n: int) -> list[Semigroup]:
    """All labeled semigroups of order ``n <= 4`` in table order, by backtracking.

    Cells are filled row-major with values in increasing order, so the output
    is already sorted lexicographically.
    """
    if not 1 <= n <= 4:
        raise OrderTooLarge("backtracking enumeration is limited to order 4")
    return [Semigroup(t) for t in _backtrack_tables(n)]


def corpus_up_to(n: int) -> list[Semigroup]:
    out = []
    for k in range(1, n + 1):
        out.extend(enumerate_semigroups(k))
    return out


def canonicalize(S: Semigroup, include_anti: bool = False) -> bytes:
    """Least row-major table bytes over all relabelings (and transposes, with ``include_anti``)."""
    n = S.order
    if n > 8:
        raise OrderTooLarge("canonical forms are limited to order 8")
    tables = [S.table]
    if include_anti:
        tables.append(S.transpose().table)
    best = None
    for t in tables:
        for p in permutations(range(n)):
            inv = [0] * n
            for i, v in enumerate(p):
                inv[v] = i
            # relabeled[i][j] = p[t[inv i][inv j]]
            key = bytes(p[t[inv[i]][inv[j]]] for i in range(n) for j in range(n))
            if best is None or key < best:
                best = key
    return best


def dedupe(corpus: Sequence[Semigroup], include_anti: bool = False) -> list[Semigroup]:
    """One representative per class, the canonical table itself, sorted."""
    forms = sorted({canonicalize(S, include_anti) for S in corpus})
    out = []
    for f in forms:
        n = int(round(len(f) ** 0.5))
        out.append(Semigroup([list(f[i * n : (i + 1) * n]) for i in range(n)]))
    return out


# ---------------------------------------------------------------------------
# registry


@dataclass
class VerificationReport:
    property_id: str
    corpus_spec: dict
    instances_checked: int = 0
    violations: list[dict] = field(default_factory=list)
    examples_found: list[dict] = field(default_factory=list)
    seed: int = DEFAULT_SEED
    runtime_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "property_id": self.property_id,
            "corpus_spec": self.corpus_spec,
            "instances_checked": self.instances_checked,
            "violations": self.violations,
            "examples_found": self.examples_found,
            "seed": self.seed,
            "runtime_ms": round(self.runtime_ms, 3),
            "status": "pass" if self.passed else "fail",
        }


@dataclass(frozen=True)
class Property:
    id: str
    description: str
    check: Callable
    seeded: bool = False


def _props() -> dict[str, Property]:
    s, i, m = separators, ideals, morphisms
    items = [
        Property("P-R1a", "Sep A = Sep of the complement", s.prop_complement),
        Property("P-R1b", "Sep A empty or a subsemigroup", s.prop_subsemigroup_or_empty),
        Property("P-R2", "identity lies in every separator", s.prop_identity),
        Property("P-R3", "proper ideal misses its separator", i.prop_ideal_disjoint),
        Property("P-T1", "intersection of separators inside Sep of union/intersection", s.prop_family, True),
        Property("P-C1", "Sep A ∩ Sep Sep A ⊆ Sep(A ∪ Sep A)", s.prop_sep_union),
        Property("P-T2", "A ∪ Sep A is a subsemigroup", s.prop_union_subsemigroup),
        Property("P-T3", "non-empty Sep A lies in A or in the complement", s.prop_trichotomy),
        Property("P-T4", "surjective endomorphisms carry Sep R1 onto Sep R2", m.prop_surjective_transport),
        Property("P-C2", "automorphisms carry Sep A onto Sep phi(A)", m.prop_automorphism_transport),
        Property("P-T5", "including A: A ∪ B including; excluding A: A ∩ B excluding", s.prop_including_union),
        Property("P-T6", "including A, B: A ∩ B including; excluding: A ∪ B excluding", s.prop_including_intersection),
        Property("P-C3", "including A, excluding B: union including, intersection excluding", s.prop_including_excluding),
        Property("P-C4", "including A: B∖A excluding", s.prop_difference),
        Property("P-T7", "Sep Sep A ⊆ Sep A", s.prop_sepsep),
        Property("P-C5", "minimal Sep A: Sep Sep A empty or Sep A", s.prop_minimal),
        Property("P-T8", "subsemigroup A = Sep A iff unitary", i.prop_unitary_fixed),
        Property("P-T8X", "separator fixed points are the unitary subsemigroups", i.prop_fixed_points_are_unitary),
        Property("P-T9", "prime ideal iff complement unitary subsemigroup", i.prop_prime_complement),
        Property("P-T9X", "both prime ideal computations agree", i.prop_prime_paths),
        Property("P-T10", "maximal ideal + maximal subsemigroup + Sep ≠ ∅ is prime", i.prop_maximal_prime),
    ]
    return {p.id: p for p in items}


PROPERTIES: dict[str, Property] = _props()
PROPERTY_IDS: tuple[str, ...] = tuple(PROPERTIES)


def _resolve(property_ids: Iterable[str] | None) -> list[str]:
    if property_ids is None:
        return list(PROPERTY_IDS)
    ids = list(property_ids)
    for pid in ids:
        if pid not in PROPERTIES:
            raise UnknownPropertyId(pid)
    return ids


def _check_chunk(args):
    pid, tables, seed = args
    prop = PROPERTIES[pid]
    count, bad = 0, []
    for t in tables:
        S = Semigroup(t)
        c, b = prop.check(S, seed=seed) if prop.seeded else prop.check(S)
        count += c
        bad.extend(b)
    return count, bad


def run_property(
    pid: str, corpus: Sequence[Semigroup], *, seed: int = DEFAULT_SEED, corpus_spec: dict | None = None, jobs: int = 1
) -> VerificationReport:
    prop = PROPERTIES[_resolve([pid])[0]]
    start = time.perf_counter()
    report = VerificationReport(pid, dict(corpus_spec or {"size": len(corpus)}), seed=seed)
    if jobs > 1 and len(corpus) > 1:
        tables = [S.table for S in corpus]
        size = max(1, len(tables) // (jobs * 4))
        chunks = [(pid, tables[i : i + size], seed) for i in range(0, len(tables), size)]
        with ProcessPoolExecutor(jobs) as ex:
            results = list(ex.map(_check_chunk, chunks))
    else:
        results = []
        for S in corpus:
            results.append(prop.check(S, seed=seed) if prop.seeded else prop.check(S))
    for c, b in results:
        report.instances_checked += c
        report.violations.extend(b)
    report.violations.sort(key=lambda r: (r["table"], sorted((k, str(v)) for k, v in r.items() if k != "table")))
    report.runtime_ms = (time.perf_counter() - start) * 1000
    return report


def run_registry(
    corpus: Sequence[Semigroup],
    property_ids: Iterable[str] | None = None,
    *,
    seed: int = DEFAULT_SEED,
    corpus_spec: dict | None = None,
    jobs: int = 1,
) -> list[VerificationReport]:
    ids = _resolve(property_ids)
    spec = dict(corpus_spec or {"size": len(corpus)})
    return [run_property(pid, corpus, seed=seed, corpus_spec=spec, jobs=jobs) for pid in ids]


def remark5_report(corpus: Sequence[Semigroup], corpus_spec: dict | None = None, separators: str = "ambient"):
    """Existence probe: never counts as a violation, records the first witness."""
    start = time.perf_counter()
    scan = morphisms.remark5_scan(corpus, separators)
    report = VerificationReport("R5", dict(corpus_spec or {"size": len(corpus)}))
    report.instances_checked = scan.triples_checked
    if scan.witness is not None:
        report.examples_found.append(scan.witness)
    report.examples_found.append({"summary": scan.to_dict() | {"witness": None}})
    report.runtime_ms = (time.perf_counter() - start) * 1000
    return report
