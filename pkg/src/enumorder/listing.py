"""Finite enumeration prefixes, finite sets and order patterns.

Positions are 1-based throughout: ``h.at(1)`` is the first emitted value.
The underlying tuple (``h.values``) is ordinary 0-based Python.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from .errors import (
    DuplicateValue,
    LengthMismatch,
    OutOfRange,
    ParseError,
    SetMismatch,
    ValueCollision,
)


def _check_natural(v):
    if isinstance(v, bool) or not isinstance(v, int) or v < 1:
        raise ValueError(f"listing values must be integers >= 1, got {v!r}")


@dataclass(frozen=True)
class Listing:
    values: tuple[int, ...] = ()
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        seen = {}
        for pos, v in enumerate(values, 1):
            _check_natural(v)
            if v in seen:
                raise DuplicateValue(v, seen[v], pos)
            seen[v] = pos

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def at(self, i: int) -> int:
        """Value emitted at 1-based position ``i``."""
        if not 1 <= i <= len(self.values):
            raise OutOfRange(f"position {i} outside 1..{len(self.values)}")
        return self.values[i - 1]

    def prefix(self, n: int) -> Listing:
        if not 0 <= n <= len(self.values):
            raise OutOfRange(f"prefix length {n} outside 0..{len(self.values)}")
        return Listing(self.values[:n], self.name)

    def value_set(self) -> FiniteSet:
        return FiniteSet(self.values)

    def to_text(self) -> str:
        return "".join(f"{v}\n" for v in self.values)


class FiniteSet(frozenset):
    """A frozenset restricted to naturals >= 1."""

    def __new__(cls, elements: Iterable[int] = ()):
        elements = list(elements)
        for v in elements:
            _check_natural(v)
        return super().__new__(cls, elements)

    def __repr__(self):
        return f"FiniteSet({sorted(self)})"


@dataclass(frozen=True)
class OrderPattern:
    ranks: tuple[int, ...]

    @property
    def key(self) -> str:
        return ",".join(map(str, self.ranks))

    def __len__(self):
        return len(self.ranks)

    def __str__(self):
        return self.key


class Monotonicity(enum.Enum):
    INCREASING = "Increasing"
    DECREASING = "Decreasing"
    NEITHER = "Neither"
    TRIVIAL = "Trivial"


def _iter_lines(text):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def _parse_natural(lineno, line, source):
    try:
        v = int(line, 10)
    except ValueError:
        raise ParseError(lineno, line, source) from None
    if v < 1:
        raise ParseError(lineno, line, source)
    return v


def parse_listing(text: str, name: str | None = None) -> Listing:
    values = tuple(_parse_natural(n, line, name) for n, line in _iter_lines(text))
    return Listing(values, name)


def parse_finite_set(text: str, name: str | None = None) -> FiniteSet:
    # order-insensitive; repeated elements collapse
    return FiniteSet(_parse_natural(n, line, name) for n, line in _iter_lines(text))


@lru_cache(maxsize=65536)
def rank_vector(values: tuple[int, ...]) -> tuple[int, ...]:
    ranks = [0] * len(values)
    for r, idx in enumerate(sorted(range(len(values)), key=values.__getitem__), 1):
        ranks[idx] = r
    return tuple(ranks)


def order_pattern(h: Listing) -> OrderPattern:
    """Rank vector of ``h``: entry i is the 1-based rank of the i-th value.

    Two listings of equal length are uniform exactly when their patterns match.
    """
    return OrderPattern(rank_vector(tuple(h.values)))


def is_monotonic(h: Listing) -> Monotonicity:
    v = h.values
    if len(v) <= 1:
        return Monotonicity.TRIVIAL
    if all(a < b for a, b in zip(v, v[1:])):
        return Monotonicity.INCREASING
    if all(a > b for a, b in zip(v, v[1:])):
        return Monotonicity.DECREASING
    return Monotonicity.NEITHER


def drop_prefix(h: Listing, m: int) -> Listing:
    """The shifted listing i -> h(i + m)."""
    if m < 0 or m > len(h):
        raise OutOfRange(f"cannot drop {m} values from a listing of length {len(h)}")
    return Listing(h.values[m:], h.name)


def prepend(p: Listing, h: Listing) -> Listing:
    hv = set(h.values)
    for v in p.values:
        if v in hv:
            raise ValueCollision(v)
    return Listing(p.values + h.values, h.name)


def compose_transport(h: Listing, h_ref: Listing, g_ref: Listing) -> Listing:
    """Carry ``h`` across the correspondence ``h_ref -> g_ref``.

    Output position i holds ``g_ref(k)`` where ``h_ref(k) == h(i)``. When
    ``h_ref`` and ``g_ref`` are uniform the result is uniform with ``h``.
    """
    if len(g_ref) != len(h_ref):
        raise LengthMismatch(f"h_ref has length {len(h_ref)} but g_ref has {len(g_ref)}")
    if set(h.values) != set(h_ref.values):
        raise SetMismatch("h and h_ref enumerate different value sets")
    where = {v: k for k, v in enumerate(h_ref.values)}
    return Listing(tuple(g_ref.values[where[v]] for v in h.values), g_ref.name)


def symmetric_difference(a: FiniteSet, b: FiniteSet) -> FiniteSet:
    return FiniteSet(frozenset(a) ^ frozenset(b))


def almost_equal(a: FiniteSet, b: FiniteSet, budget: int) -> bool:
    # every difference of finite sets is finite, so "finite" becomes "at most budget"
    if budget < 0:
        raise ValueError("budget must be >= 0")
    return len(symmetric_difference(a, b)) <= budget


def sorted_listing(a: Iterable[int]) -> Listing:
    return Listing(tuple(sorted(a)))
