"""Finitely generated subsemigroups of a free semigroup.

Words are tuples of letter indices; ``parse_word("aba") == (0, 1, 0)``.
``T = <G>`` is the set of non-empty concatenations of generators.  Membership
and factorization counts are exact (dynamic programming over prefixes); the
separator of ``T`` is only approximated, by testing partner words up to a
fixed length.
"""

from __future__ import annotations

import heapq
import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Sequence

from .core import SemigroupError

Word = tuple[int, ...]

DEFAULT_MAX_LENGTH = 64


class AlphabetMismatch(SemigroupError, ValueError):
    pass


class NotFree(SemigroupError, ValueError):
    pass


# ---------------------------------------------------------------------------
# words and generator sets


def letter_name(i: int) -> str:
    return chr(ord("a") + i) if i < 26 else f"[{i}]"


def format_word(w: Sequence[int]) -> str:
    return "".join(letter_name(i) for i in w)


_TOKEN = re.compile(r"\[(\d+)\]|([a-z])")


def parse_word(text: str) -> Word:
    text = text.strip()
    out, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"bad letter at {text[pos:]!r}")
        out.append(int(m.group(1)) if m.group(1) else ord(m.group(2)) - ord("a"))
        pos = m.end()
    if not out:
        raise ValueError("words are non-empty")
    return tuple(out)


def _word_key(w: Word):
    return (len(w), w)


@dataclass(frozen=True)
class GeneratorSet:
    alphabet_size: int
    gens: tuple[Word, ...]

    def __init__(self, gens: Iterable[Sequence[int] | str], alphabet_size: int | None = None):
        words = [parse_word(g) if isinstance(g, str) else tuple(int(x) for x in g) for g in gens]
        if not words:
            raise ValueError("a generator set needs at least one word")
        if any(len(w) == 0 for w in words):
            raise ValueError("generators must be non-empty words")
        if len(set(words)) != len(words):
            raise ValueError("duplicate generators")
        top = max(max(w) for w in words) + 1
        if alphabet_size is None:
            alphabet_size = top
        if alphabet_size < 1 or top > alphabet_size or min(min(w) for w in words) < 0:
            raise AlphabetMismatch(f"generators use letters outside an alphabet of size {alphabet_size}")
        object.__setattr__(self, "alphabet_size", alphabet_size)
        object.__setattr__(self, "gens", tuple(sorted(words, key=_word_key)))

    @classmethod
    def parse(cls, text: str, alphabet_size: int | None = None) -> "GeneratorSet":
        """``"ab,ba,aba"`` (braces optional)."""
        text = text.strip().strip("{}")
        return cls([t for t in (s.strip() for s in text.split(",")) if t], alphabet_size)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.gens)

    def __len__(self) -> int:
        return len(self.gens)

    def __str__(self) -> str:
        return "{" + ",".join(format_word(g) for g in self.gens) + "}"

    @property
    def max_length(self) -> int:
        return max(len(g) for g in self.gens)

    def check_word(self, w: Sequence[int]) -> None:
        if not w:
            raise ValueError("words are non-empty")
        if any(not 0 <= x < self.alphabet_size for x in w):
            raise AlphabetMismatch(f"{format_word(w)} is not over an alphabet of size {self.alphabet_size}")


def all_words(alphabet_size: int, max_len: int, min_len: int = 1) -> Iterator[Word]:
    """Words in (length, lexicographic) order."""
    for n in range(min_len, max_len + 1):
        yield from product(range(alphabet_size), repeat=n)


# ---------------------------------------------------------------------------
# factorization


def factorizations(
    w: Sequence[int], G: GeneratorSet, *, listing: bool = False, max_length: int = DEFAULT_MAX_LENGTH
):
    """Number of ways to write ``w`` as ``g1 g2 ... gm`` with every ``gi`` in ``G``.

    With ``listing=True`` returns the list of factorizations instead (each a
    tuple of generators, in lexicographic order of cut positions).
    """
    w = tuple(w)
    G.check_word(w)
    if len(w) > max_length:
        raise ValueError(f"word longer than the configured limit {max_length}")
    n = len(w)
    count = [0] * (n + 1)
    count[0] = 1
    ends: list[list[Word]] = [[] for _ in range(n + 1)]
    for i in range(1, n + 1):
        for g in G.gens:
            k = len(g)
            if k <= i and count[i - k] and w[i - k : i] == g:
                count[i] += count[i - k]
                ends[i].append(g)
    if not listing:
        return count[n]

    out: list[tuple[Word, ...]] = []

    def back(i: int, tail: tuple[Word, ...]):
        if i == 0:
            out.append(tail)
            return
        for g in ends[i]:
            back(i - len(g), (g,) + tail)

    back(n, ())
    out.sort(key=lambda f: [len(g) for g in f])
    return out


def member(w: Sequence[int], G: GeneratorSet) -> bool:
    w = tuple(w)
    G.check_word(w)
    n = len(w)
    reach = [False] * (n + 1)
    reach[0] = True
    for i in range(1, n + 1):
        reach[i] = any(len(g) <= i and reach[i - len(g)] and w[i - len(g) : i] == g for g in G.gens)
    return reach[n]


@lru_cache(maxsize=256)
def members_up_to(G: GeneratorSet, max_len: int) -> frozenset[Word]:
    """Every element of ``<G>`` of length at most ``max_len``."""
    seen: set[Word] = set()
    frontier = [g for g in G.gens if len(g) <= max_len]
    seen.update(frontier)
    while frontier:
        nxt = []
        for w in frontier:
            for g in G.gens:
                if len(w) + len(g) <= max_len:
                    v = w + g
                    if v not in seen:
                        seen.add(v)
                        nxt.append(v)
        frontier = nxt
    return frozenset(seen)


def base(G: GeneratorSet) -> GeneratorSet:
    """Generators that cannot be written as a product of two or more generators."""
    keep = [g for g in G.gens if factorizations(g, G) == 1]
    return GeneratorSet(keep, G.alphabet_size)


# ---------------------------------------------------------------------------
# unique decipherability


@dataclass(frozen=True)
class CodeResult:
    is_code: bool
    witness: Word | None = None
    left: tuple[Word, ...] = ()
    right: tuple[Word, ...] = ()

    def __bool__(self) -> bool:
        return self.is_code


def is_code(G: GeneratorSet) -> CodeResult:
    """Sardinas-Patterson test with witness reconstruction.

    A state is a dangling suffix: two generator sequences whose concatenations
    agree except that one runs ahead by that suffix.  States are explored in
    order of the longer concatenation's length, so the first time a dangling
    suffix is matched exactly the witness is a shortest ambiguous word.
    Dangling suffixes are suffixes of generators, so the search is finite.
    """
    gens = G.gens
    heap: list = []
    counter = 0
    for u in gens:
        for v in gens:
            if u != v and len(u) < len(v) and v[: len(u)] == u:
                # lag = (u,), lead = (v,), dangling = rest of v
                heapq.heappush(heap, (len(v), counter, v[len(u) :], (u,), (v,)))
                counter += 1
    seen: set[Word] = set()
    while heap:
        _, _, rest, lag, lead = heapq.heappop(heap)
        if rest in seen:
            continue
        seen.add(rest)
        lead_len = sum(map(len, lead))
        for g in gens:
            if g == rest:
                word = sum(lead, ())
                left, right = sorted([lag + (g,), lead])
                return CodeResult(False, word, left, right)
            if len(g) < len(rest) and rest[: len(g)] == g:
                heapq.heappush(heap, (lead_len, counter, rest[len(g) :], lag + (g,), lead))
            elif len(g) > len(rest) and g[: len(rest)] == rest:
                heapq.heappush(heap, (lead_len + len(g) - len(rest), counter, g[len(rest) :], lead, lag + (g,)))
            else:
                continue
            counter += 1
    return CodeResult(True)


def is_free_subsemigroup(G: GeneratorSet) -> bool:
    """``<G>`` is free exactly when its base is a code."""
    return is_code(base(G)).is_code


# ---------------------------------------------------------------------------
# bounded checks


@dataclass(frozen=True)
class StabilityResult:
    bound: int
    counterexample: tuple[Word, Word, Word] | None  # (s, t1, t2)
    free: bool

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    @property
    def consistent(self) -> bool:
        """A counterexample for a free ``<G>`` would contradict the stability lemma."""
        return not (self.free and self.counterexample is not None)


def bounded_stability_check(G: GeneratorSet, L: int) -> StabilityResult:
    """Look for ``s`` outside ``T`` with ``s t1`` and ``t2 s`` in ``T``, ``|s| <= L``.

    Partner words are limited by ``|s t1|, |t2 s| <= 2L``.  A counterexample
    proves ``T`` is not free; a pass proves nothing beyond the bound.
    """
    if L < G.max_length:
        raise ValueError("L must be at least the longest generator length")
    T = members_up_to(G, 2 * L)
    by_len: dict[int, list[Word]] = {}
    for t in sorted(T, key=_word_key):
        by_len.setdefault(len(t), []).append(t)
    free = is_free_subsemigroup(G)
    for s in all_words(G.alphabet_size, L):
        if s in T:
            continue
        room = 2 * L - len(s)
        t1 = next((t for k in range(1, room + 1) for t in by_len.get(k, ()) if s + t in T), None)
        if t1 is None:
            continue
        t2 = next((t for k in range(1, room + 1) for t in by_len.get(k, ()) if t + s in T), None)
        if t2 is None:
            continue
        return StabilityResult(L, (s, t1, t2), free)
    return StabilityResult(L, None, free)


@dataclass
class BoundedSepResult:
    """Words of length ``<= length_bound`` that pass the separator conditions
    against every partner of length ``<= depth``.

    A superset of the true ``Sep T`` restricted to that length: raising the
    depth can only remove candidates.
    """

    length_bound: int
    depth: int
    candidates: list[tuple[Word, int]] = field(default_factory=list)

    @property
    def words(self) -> list[Word]:
        return [w for w, _ in self.candidates]

    def to_dict(self) -> dict:
        return {
            "length_bound": self.length_bound,
            "depth": self.depth,
            "candidates": [{"word": format_word(w), "verified_depth": d} for w, d in self.candidates],
        }


def _passes(s: Word, T: frozenset, partners: list[tuple[Word, bool]]) -> bool:
    for t, inside in partners:
        if ((s + t) in T) != inside or ((t + s) in T) != inside:
            return False
    return True


def bounded_separator(G: GeneratorSet, L: int, D: int) -> BoundedSepResult:
    if L < 1 or D < 1:
        raise ValueError("L and D must be positive")
    T = members_up_to(G, L + D)
    partners = [(t, t in T) for t in all_words(G.alphabet_size, D)]
    res = BoundedSepResult(L, D)
    for s in all_words(G.alphabet_size, L):
        if _passes(s, T, partners):
            res.candidates.append((s, D))
    return res


@dataclass
class Theorem13Result:
    bound: int
    violation: dict | None
    separator_length: int
    separator_depth: int
    prediction_consistent: bool
    mismatches: list[str]

    @property
    def passed(self) -> bool:
        return self.violation is None and self.prediction_consistent

    def to_dict(self) -> dict:
        return {
            "bound": self.bound,
            "violation": self.violation,
            "separator_length": self.separator_length,
            "separator_depth": self.separator_depth,
            "prediction_consistent": self.prediction_consistent,
            "mismatches": self.mismatches,
            "passed": self.passed,
        }


def check_theorem13_condition(
    G: GeneratorSet, L: int, sep_length: int | None = None, sep_depth: int | None = None
) -> Theorem13Result:
    """Scan ``t`` in ``T`` and arbitrary ``s`` with ``|tst| <= L`` for ``tst`` in ``T``
    but ``ts`` or ``st`` outside.

    When no violation turns up, ``T = Sep T`` is predicted; that prediction is
    compared with :func:`bounded_separator` on words of length ``sep_length``
    (default ``L // 2``) at depth ``sep_depth`` (default ``L``).
    """
    if L < 1:
        raise ValueError("L must be positive")
    if not is_free_subsemigroup(G):
        raise NotFree(f"<{G}> is not free")
    T = members_up_to(G, L)
    violation = None
    for t in sorted(T, key=_word_key):
        if 2 * len(t) + 1 > L:
            break
        for s in all_words(G.alphabet_size, L - 2 * len(t)):
            if t + s + t in T and not (t + s in T and s + t in T):
                violation = {
                    "t": format_word(t),
                    "s": format_word(s),
                    "tst_factorization": [format_word(g) for g in factorizations(t + s + t, G, listing=True)[0]],
                    "ts_in_T": t + s in T,
                    "st_in_T": s + t in T,
                }
                break
        if violation:
            break
    sep_length = max(1, L // 2) if sep_length is None else sep_length
    sep_depth = L if sep_depth is None else sep_depth
    mismatches = []
    if violation is None:
        cands = set(bounded_separator(G, sep_length, sep_depth).words)
        Tl = set(members_up_to(G, sep_length))
        mismatches += [f"candidate {format_word(w)} not in T" for w in sorted(cands - Tl, key=_word_key)]
        mismatches += [f"{format_word(w)} in T but not a candidate" for w in sorted(Tl - cands, key=_word_key)]
    return Theorem13Result(L, violation, sep_length, sep_depth, not mismatches, mismatches)


def power_words(G: GeneratorSet, n: int, L: int) -> set[Word]:
    """Words of ``T^n`` (products of ``n`` elements of ``T``) of length ``<= L``."""
    T = members_up_to(G, L)
    cur = set(T)
    for _ in range(n - 1):
        cur = {u + v for u in cur for v in T if len(u) + len(v) <= L}
    return cur


@dataclass
class Theorem14Report:
    n: int
    bound: int
    depth: int
    power_words_checked: int
    missing: list[str]
    free: bool

    @property
    def vacuous(self) -> bool:
        return self.power_words_checked == 0

    @property
    def hypothesis_holds(self) -> bool:
        return not self.missing

    @property
    def consistent(self) -> bool:
        """Hypothesis evidence present and never contradicted must come with freeness."""
        return self.vacuous or not self.hypothesis_holds or self.free

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "bound": self.bound,
            "depth": self.depth,
            "power_words_checked": self.power_words_checked,
            "missing_from_separator": self.missing,
            "hypothesis_holds": self.hypothesis_holds,
            "vacuous": self.vacuous,
            "free": self.free,
            "consistent": self.consistent,
        }


def check_theorem14(G: GeneratorSet, n: int, L: int, depth: int | None = None) -> Theorem14Report:
    if n < 1:
        raise ValueError("n must be a positive integer")
    depth = L if depth is None else depth
    words = power_words(G, n, L)
    cands = set(bounded_separator(G, L, depth).words)
    missing = [format_word(w) for w in sorted(words - cands, key=_word_key)]
    return Theorem14Report(n, L, depth, len(words), missing, is_free_subsemigroup(G))


@dataclass
class Theorem11Report:
    """Free ``T`` should have ``Sep T`` inside ``T``.

    Candidates outside ``T`` that survive the deeper partner checks go to
    ``review``; they are not failures because the bounded separator is only
    a superset.  ``hard_failures`` are non-members among candidates while the
    ``T = Sep T`` prediction from :func:`check_theorem13_condition` holds.
    """

    gens: str
    free: bool
    candidates: int
    outside: list[str]
    review: list[str]
    hard_failures: list[str]

    @property
    def passed(self) -> bool:
        return not self.hard_failures


def check_theorem11(
    G: GeneratorSet, L: int = 6, D: int = 8, deeper: Sequence[int] = (10, 12), th13_bound: int | None = None
) -> Theorem11Report:
    free = is_free_subsemigroup(G)
    res = bounded_separator(G, L, D)
    T = members_up_to(G, L)
    outside = [w for w in res.words if w not in T]
    survivors = list(outside)
    for d in deeper:
        Td = members_up_to(G, L + d)
        partners = [(t, t in Td) for t in all_words(G.alphabet_size, d)]
        survivors = [s for s in survivors if _passes(s, Td, partners)]
    hard = []
    if free and survivors:
        th13 = check_theorem13_condition(G, th13_bound or 2 * L, sep_length=L, sep_depth=max((D, *deeper)))
        if th13.violation is None:
            hard = [format_word(w) for w in survivors]
    return Theorem11Report(
        str(G), free, len(res.candidates), [format_word(w) for w in outside], [format_word(w) for w in survivors], hard
    )


def check_theorem12(G: GeneratorSet, L: int = 8) -> dict:
    """Where ``T = Sep T`` is predicted by the bounded condition scan, ``Sep T``
    is ``T`` and must therefore be free."""
    if not is_free_subsemigroup(G):
        return {"gens": str(G), "applicable": False, "passed": True}
    th13 = check_theorem13_condition(G, L)
    if not th13.passed:
        return {"gens": str(G), "applicable": False, "passed": True}
    free = is_free_subsemigroup(G)
    return {"gens": str(G), "applicable": True, "separator_free": free, "passed": free}
