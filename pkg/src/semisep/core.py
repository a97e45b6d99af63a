"""Finite semigroups as Cayley tables, and subsets of them as bit masks.

Elements are the indices ``0 .. n-1``.  The product ``x*y`` is the entry in
row ``x``, column ``y`` of the table.  Names are only used for printing and
parsing; every computation works on indices.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator, Sequence

import numpy as np

MAX_ORDER = 64


class SemigroupError(Exception):
    """Base class for errors raised by this package."""


class MalformedInput(SemigroupError, ValueError):
    pass


class NotAssociative(SemigroupError, ValueError):
    def __init__(self, witness: tuple[int, int, int]):
        self.witness = witness
        x, y, z = witness
        super().__init__(f"table is not associative: ({x}*{y})*{z} != {x}*({y}*{z})")


class AmbientMismatch(SemigroupError, ValueError):
    pass


class OrderTooLarge(SemigroupError, ValueError):
    pass


# ---------------------------------------------------------------------------
# subsets


@dataclass(frozen=True, order=True)
class SubsetMask:
    """A subset of ``{0, .., ambient-1}``; bit ``i`` of ``bits`` marks element ``i``."""

    ambient: int
    bits: int = 0

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.ambient:
            raise MalformedInput(f"mask {self.bits:#x} does not fit ambient order {self.ambient}")

    @classmethod
    def of(cls, ambient: int, elements: Iterable[int]) -> "SubsetMask":
        bits = 0
        for e in elements:
            if not 0 <= e < ambient:
                raise MalformedInput(f"element {e} outside [0, {ambient})")
            bits |= 1 << e
        return cls(ambient, bits)

    @classmethod
    def full(cls, ambient: int) -> "SubsetMask":
        return cls(ambient, (1 << ambient) - 1)

    @classmethod
    def empty(cls, ambient: int) -> "SubsetMask":
        return cls(ambient, 0)

    def _check(self, other: "SubsetMask") -> None:
        if not isinstance(other, SubsetMask):
            raise TypeError(f"expected SubsetMask, got {type(other).__name__}")
        if other.ambient != self.ambient:
            raise AmbientMismatch(f"ambient orders differ: {self.ambient} vs {other.ambient}")

    def __or__(self, other):
        self._check(other)
        return SubsetMask(self.ambient, self.bits | other.bits)

    def __and__(self, other):
        self._check(other)
        return SubsetMask(self.ambient, self.bits & other.bits)

    def __sub__(self, other):
        self._check(other)
        return SubsetMask(self.ambient, self.bits & ~other.bits)

    def __invert__(self):
        return SubsetMask(self.ambient, ~self.bits & ((1 << self.ambient) - 1))

    complement = __invert__

    def issubset(self, other: "SubsetMask") -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def __contains__(self, x: int) -> bool:
        return 0 <= x < self.ambient and bool(self.bits >> x & 1)

    def __iter__(self) -> Iterator[int]:
        bits, i = self.bits, 0
        while bits:
            if bits & 1:
                yield i
            bits >>= 1
            i += 1

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __bool__(self) -> bool:
        return self.bits != 0

    def __repr__(self) -> str:
        return f"SubsetMask({self.ambient}, {set(self) or '{}'})"


def mask_elements(bits: int) -> list[int]:
    return [i for i in range(bits.bit_length()) if bits >> i & 1]


# ---------------------------------------------------------------------------
# semigroups


def check_associativity(table: Sequence[Sequence[int]]) -> tuple[int, int, int] | None:
    """Return the lexicographically least triple violating associativity, or None."""
    n = len(table)
    for row in table:
        if len(row) != n:
            raise MalformedInput("table must be square")
        for v in row:
            if not 0 <= v < n:
                raise MalformedInput(f"entry {v} outside [0, {n})")
    for x, y, z in product(range(n), repeat=3):
        if table[table[x][y]][z] != table[x][table[y][z]]:
            return (x, y, z)
    return None


@dataclass(frozen=True)
class Semigroup:
    """An associative Cayley table.  Construction validates both range and associativity."""

    table: tuple[tuple[int, ...], ...]
    names: tuple[str, ...] | None = field(default=None, compare=False)

    def __init__(self, table: Sequence[Sequence[int]], names: Sequence[str] | None = None):
        rows = tuple(tuple(int(v) for v in row) for row in table)
        n = len(rows)
        if not 1 <= n <= MAX_ORDER:
            raise MalformedInput(f"order must be in [1, {MAX_ORDER}], got {n}")
        witness = check_associativity(rows)
        if witness is not None:
            raise NotAssociative(witness)
        if names is not None:
            names = tuple(str(s) for s in names)
            if len(names) != n or len(set(names)) != n:
                raise MalformedInput("names must be n distinct strings")
        object.__setattr__(self, "table", rows)
        object.__setattr__(self, "names", names)

    @property
    def order(self) -> int:
        return len(self.table)

    def __len__(self) -> int:
        return len(self.table)

    def __call__(self, x: int, y: int) -> int:
        return self.table[x][y]

    def __getstate__(self):
        return (self.table, self.names)

    def __setstate__(self, state):
        table, names = state
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "names", names)

    @cached_property
    def array(self) -> np.ndarray:
        arr = np.array(self.table, dtype=np.int64)
        arr.setflags(write=False)
        return arr

    @property
    def full(self) -> SubsetMask:
        return SubsetMask.full(self.order)

    @property
    def empty(self) -> SubsetMask:
        return SubsetMask.empty(self.order)

    def subset(self, elements: Iterable[int | str]) -> SubsetMask:
        return SubsetMask.of(self.order, (self.index(e) for e in elements))

    def index(self, e: int | str) -> int:
        if isinstance(e, str):
            if self.names is not None and e in self.names:
                return self.names.index(e)
            if e.isdigit():
                return int(e)
            raise MalformedInput(f"unknown element {e!r}")
        return int(e)

    def name(self, x: int) -> str:
        return self.names[x] if self.names is not None else str(x)

    def subsets(self) -> Iterator[SubsetMask]:
        """All subsets in increasing bit order."""
        for bits in range(1 << self.order):
            yield SubsetMask(self.order, bits)

    def key(self) -> bytes:
        return bytes(v for row in self.table for v in row)

    def transpose(self) -> "Semigroup":
        n = self.order
        return Semigroup([[self.table[y][x] for y in range(n)] for x in range(n)], self.names)

    def relabel(self, perm: Sequence[int]) -> "Semigroup":
        """Isomorphic copy in which element ``x`` is renamed ``perm[x]``."""
        n = self.order
        new = [[0] * n for _ in range(n)]
        for x in range(n):
            for y in range(n):
                new[perm[x]][perm[y]] = perm[self.table[x][y]]
        return Semigroup(new)

    def to_list(self) -> list[list[int]]:
        return [list(row) for row in self.table]


def _tokens(line: str) -> list[str]:
    return line.split()


def parse_semigroup(text: str) -> Semigroup:
    """Parse one table in the text format.

    Optional ``# name name ...`` header, then the order ``n``, then ``n`` rows of
    ``n`` tokens (indices or declared names).
    """
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise MalformedInput("empty table text")
    names = None
    if lines[0].startswith("#"):
        names = _tokens(lines[0][1:])
        lines = lines[1:]
    if not lines:
        raise MalformedInput("missing order line")
    try:
        n = int(lines[0])
    except ValueError:
        raise MalformedInput(f"expected order, got {lines[0]!r}") from None
    if not 1 <= n <= MAX_ORDER:
        raise MalformedInput(f"order must be in [1, {MAX_ORDER}], got {n}")
    if names is not None and len(names) != n:
        raise MalformedInput(f"{len(names)} names declared for order {n}")
    rows = lines[1:]
    if len(rows) != n:
        raise MalformedInput(f"expected {n} rows, got {len(rows)}")
    lookup = {s: i for i, s in enumerate(names)} if names else {}
    table = []
    for r, line in enumerate(rows):
        toks = _tokens(line)
        if len(toks) != n:
            raise MalformedInput(f"row {r} has {len(toks)} entries, expected {n}")
        row = []
        for tok in toks:
            if tok in lookup:
                row.append(lookup[tok])
            elif tok.isdigit() and int(tok) < n:
                row.append(int(tok))
            else:
                raise MalformedInput(f"unknown symbol {tok!r} in row {r}")
        table.append(row)
    return Semigroup(table, names)


def parse_semigroups(text: str) -> list[Semigroup]:
    """Parse a stream of tables separated by blank lines."""
    blocks, cur = [], []
    for line in text.splitlines():
        if line.strip():
            cur.append(line)
        elif cur:
            blocks.append("\n".join(cur))
            cur = []
    if cur:
        blocks.append("\n".join(cur))
    return [parse_semigroup(b) for b in blocks]


def format_semigroup(S: Semigroup) -> str:
    lines = []
    if S.names is not None:
        lines.append("# " + " ".join(S.names))
    lines.append(str(S.order))
    for row in S.table:
        lines.append(" ".join(S.name(v) for v in row))
    return "\n".join(lines) + "\n"


_SUBSET_RE = re.compile(r"^\s*\{(.*)\}\s*$")


def parse_subset(S: Semigroup, text: str) -> SubsetMask:
    """Parse ``{0,a,b}``.  Names are accepted only when the table declares them."""
    m = _SUBSET_RE.match(text)
    if not m:
        raise MalformedInput(f"subset literal must look like {{x,y}}, got {text!r}")
    body = m.group(1).strip()
    if not body:
        return S.empty
    idx = []
    for tok in (t.strip() for t in body.split(",")):
        if S.names is not None and tok in S.names:
            idx.append(S.names.index(tok))
        elif tok.isdigit() and int(tok) < S.order:
            idx.append(int(tok))
        else:
            raise MalformedInput(f"unknown element {tok!r}")
    return SubsetMask.of(S.order, idx)


def format_subset(S: Semigroup, A: SubsetMask) -> str:
    return "{" + ",".join(S.name(x) for x in A) + "}"


# ---------------------------------------------------------------------------
# subset algebra


def _check_ambient(S: Semigroup, *subsets: SubsetMask) -> None:
    for A in subsets:
        if A.ambient != S.order:
            raise AmbientMismatch(f"subset ambient {A.ambient} != semigroup order {S.order}")


def _mul_bits(S: Semigroup, a_bits: int, b_bits: int) -> int:
    t = S.table
    out = 0
    for a in mask_elements(a_bits):
        row = t[a]
        for b in mask_elements(b_bits):
            out |= 1 << row[b]
    return out


def multiply_subsets(S: Semigroup, A: SubsetMask, B: SubsetMask) -> SubsetMask:
    """The product set ``{a*b : a in A, b in B}``."""
    _check_ambient(S, A, B)
    return SubsetMask(S.order, _mul_bits(S, A.bits, B.bits))


def power_subset(S: Semigroup, A: SubsetMask, k: int) -> SubsetMask:
    if k < 1:
        raise ValueError("k must be a positive integer")
    _check_ambient(S, A)
    out = A
    for _ in range(k - 1):
        out = multiply_subsets(S, out, A)
    return out


def is_subsemigroup_bits(S: Semigroup, bits: int) -> bool:
    return bits != 0 and _mul_bits(S, bits, bits) & ~bits == 0


def is_subsemigroup(S: Semigroup, A: SubsetMask) -> bool:
    """Non-empty and closed under the product.  The empty set does not count."""
    _check_ambient(S, A)
    return is_subsemigroup_bits(S, A.bits)


def closure(S: Semigroup, A: SubsetMask) -> SubsetMask:
    _check_ambient(S, A)
    bits = A.bits
    while True:
        nxt = bits | _mul_bits(S, bits, bits)
        if nxt == bits:
            return SubsetMask(S.order, bits)
        bits = nxt


def identity_element(S: Semigroup) -> int | None:
    n, t = S.order, S.table
    for e in range(n):
        if all(t[e][x] == x and t[x][e] == x for x in range(n)):
            return e
    return None


def subsemigroups(S: Semigroup) -> list[SubsetMask]:
    return [SubsetMask(S.order, b) for b in range(1, 1 << S.order) if is_subsemigroup_bits(S, b)]
