"""Uniformity and type-2 uniformity checks on listing prefixes.

All verdicts are about finite prefixes. A Uniform verdict is a necessary
condition for uniformity of the infinite listings, never a proof of it;
``compared_length`` says how much was actually checked.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .errors import OutOfRange, TooShort
from .listing import FiniteSet, Listing, rank_vector, sorted_listing


class VerdictKind(enum.Enum):
    UNIFORM = "Uniform"
    NOT_UNIFORM = "NotUniform"
    TRUNCATED = "Truncated"


@dataclass(frozen=True)
class UniformityVerdict:
    kind: VerdictKind
    compared_length: int
    witness: tuple[int, int] | None = None

    @property
    def uniform(self) -> bool:
        """True for Uniform and for a Truncated (prefix-uniform) verdict."""
        return self.kind is not VerdictKind.NOT_UNIFORM

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "compared_length": self.compared_length,
            "witness": list(self.witness) if self.witness else None,
        }


@dataclass(frozen=True)
class DiscordanceSet:
    m: int
    n: int
    overlap: int
    pairs: frozenset

    def __len__(self):
        return len(self.pairs)

    def sorted_pairs(self) -> list[tuple[int, int]]:
        return sorted(self.pairs)


@dataclass(frozen=True)
class Type2Witness:
    m: int
    n: int
    overlap: int

    def to_json(self) -> dict:
        return {"m": self.m, "n": self.n, "overlap": self.overlap}


def _discordant(a, b, i, j):
    # 0-based positions
    return (a[i] < a[j]) != (b[i] < b[j])


def _first_discordance(a, b):
    L = len(a)
    for i in range(L):
        ai, bi = a[i], b[i]
        for j in range(i + 1, L):
            if (ai < a[j]) != (bi < b[j]):
                return i + 1, j + 1
    return None


def uniform_prefix(h: Listing, g: Listing) -> UniformityVerdict:
    L = min(len(h), len(g))
    a, b = tuple(h.values[:L]), tuple(g.values[:L])
    if rank_vector(a) == rank_vector(b):
        kind = VerdictKind.UNIFORM if len(h) == len(g) else VerdictKind.TRUNCATED
        return UniformityVerdict(kind, L)
    return UniformityVerdict(VerdictKind.NOT_UNIFORM, L, _first_discordance(a, b))


def _shifted(h, g, m, n):
    if m < 0 or m > len(h):
        raise OutOfRange(f"shift m={m} outside 0..{len(h)}")
    if n < 0 or n > len(g):
        raise OutOfRange(f"shift n={n} outside 0..{len(g)}")
    overlap = min(len(h) - m, len(g) - n)
    return h.values[m:m + overlap], g.values[n:n + overlap], overlap


def discordant_pairs(h: Listing, g: Listing, m: int = 0, n: int = 0) -> DiscordanceSet:
    """All 1-based pairs (i, j), i < j, where h(i+m), h(j+m) and g(i+n), g(j+n)
    compare in opposite directions."""
    a, b, overlap = _shifted(h, g, m, n)
    pairs = frozenset(
        (i + 1, j + 1)
        for i in range(overlap)
        for j in range(i + 1, overlap)
        if _discordant(a, b, i, j)
    )
    return DiscordanceSet(m, n, overlap, pairs)


def type2_search(
    h: Listing, g: Listing, max_m: int, max_n: int, min_overlap: int
) -> Type2Witness | None:
    """Smallest shifts (by m + n, then m) making the shifted prefixes uniform.

    Only shifts leaving at least ``min_overlap`` common positions count.
    Returns None when no (m, n) within the bounds works.
    """
    if min_overlap < 1:
        raise ValueError("min_overlap must be >= 1")
    max_m = min(max_m, len(h))
    max_n = min(max_n, len(g))
    for total in range(max_m + max_n + 1):
        for m in range(max(0, total - max_n), min(total, max_m) + 1):
            n = total - m
            a, b, overlap = _shifted(h, g, m, n)
            if overlap >= min_overlap and rank_vector(a) == rank_vector(b):
                return Type2Witness(m, n, overlap)
    return None


def sets_uniform_finite(
    a: FiniteSet, b: FiniteSet
) -> tuple[bool, tuple[Listing, Listing] | None]:
    # equal cardinality suffices: both ascending listings share the identity pattern
    if len(a) != len(b):
        return False, None
    return True, (sorted_listing(a), sorted_listing(b))


def classify_corpus(listings: Sequence[Listing], prefix_len: int) -> dict[str, list[str]]:
    """Group listings whose ``prefix_len``-prefixes are uniform.

    Keys are comma-joined order patterns; each group lists names in sorted
    order. Unnamed listings are named by their 1-based corpus position.
    """
    groups: dict[str, list[str]] = {}
    for idx, h in enumerate(listings, 1):
        name = h.name if h.name is not None else str(idx)
        if len(h) < prefix_len:
            raise TooShort(name, len(h), prefix_len)
        key = ",".join(map(str, rank_vector(tuple(h.values[:prefix_len]))))
        groups.setdefault(key, []).append(name)
    return {key: sorted(names) for key, names in sorted(groups.items())}
