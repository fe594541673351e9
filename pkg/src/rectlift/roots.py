"""
The positive-root poset of type A_n.

A positive root alpha_{i,j} = alpha_i + ... + alpha_j (1 <= i <= j <= n) is
identified with the integer interval [i, j]. Dominance order is interval
containment, join is the interval hull and meet is the intersection when it
is non-empty.

Roots are written "a[i,j]" in text form; simple roots may be written "a[i]".

>>> a, b = PosRoot(4, 1, 3), PosRoot(4, 2, 4)
>>> join(a, b), meet(a, b)
(a[1,4], a[2,3])
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import PreconditionError, RankMismatchError

_ROOT_RE = re.compile(r"^\s*a\[\s*(\d+)\s*(?:,\s*(\d+)\s*)?\]\s*$")


@dataclass(frozen=True)
class PosRoot:
    rank: int
    i: int
    j: int

    def __post_init__(self):
        if not (1 <= self.i <= self.j <= self.rank):
            raise PreconditionError(f"no positive root a[{self.i},{self.j}] in rank {self.rank}")

    @property
    def height(self) -> int:
        return self.j - self.i + 1

    @property
    def support(self) -> range:
        return range(self.i, self.j + 1)

    @property
    def key(self) -> tuple[int, int]:
        return (self.i, self.j)

    def __str__(self) -> str:
        return f"a[{self.i},{self.j}]"

    __repr__ = __str__


@dataclass(frozen=True)
class SignedRoot:
    """A root of the full system, +alpha or -alpha; sign 0 stands for the zero vector."""

    sign: int
    root: PosRoot | None

    @property
    def is_zero(self) -> bool:
        return self.sign == 0

    @property
    def is_positive(self) -> bool:
        return self.sign > 0

    def __neg__(self) -> SignedRoot:
        return SignedRoot(-self.sign, self.root)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return ("-" if self.sign < 0 else "") + str(self.root)

    __repr__ = __str__


def pos(root: PosRoot) -> SignedRoot:
    return SignedRoot(1, root)


def neg(root: PosRoot) -> SignedRoot:
    return SignedRoot(-1, root)


def zero_root() -> SignedRoot:
    return SignedRoot(0, None)


def _check_rank(a: PosRoot, b: PosRoot) -> None:
    if a.rank != b.rank:
        raise RankMismatchError(f"{a} lives in rank {a.rank}, {b} in rank {b.rank}")


def leq(a: PosRoot, b: PosRoot) -> bool:
    """Dominance order: a <= b iff supp(a) is contained in supp(b)."""
    _check_rank(a, b)
    return b.i <= a.i and a.j <= b.j


def join(a: PosRoot, b: PosRoot) -> PosRoot:
    _check_rank(a, b)
    return PosRoot(a.rank, min(a.i, b.i), max(a.j, b.j))


def meet(a: PosRoot, b: PosRoot) -> PosRoot | None:
    """Greatest lower bound, or None when the supports are disjoint."""
    _check_rank(a, b)
    lo, hi = max(a.i, b.i), min(a.j, b.j)
    if lo > hi:
        return None
    return PosRoot(a.rank, lo, hi)


def union_connected(a: PosRoot, b: PosRoot) -> bool:
    """True iff supp(a) U supp(b) is an interval (adjacent supports count)."""
    _check_rank(a, b)
    return max(a.i, b.i) <= min(a.j, b.j) + 1


def root_sum(a: PosRoot, b: PosRoot) -> PosRoot | None:
    """a + b when it is a root, else None."""
    _check_rank(a, b)
    if a.j + 1 == b.i:
        return PosRoot(a.rank, a.i, b.j)
    if b.j + 1 == a.i:
        return PosRoot(a.rank, b.i, a.j)
    return None


def highest_root(rank: int) -> PosRoot:
    return PosRoot(rank, 1, rank)


def positive_roots(rank: int) -> list[PosRoot]:
    """All rank*(rank+1)/2 positive roots, sorted by (i, j)."""
    return [PosRoot(rank, i, j) for i in range(1, rank + 1) for j in range(i, rank + 1)]


def parse_root(text: str, rank: int) -> PosRoot:
    m = _ROOT_RE.match(text)
    if not m:
        raise PreconditionError(f"malformed root literal {text!r}; expected a[i,j] or a[i]")
    i = int(m.group(1))
    j = int(m.group(2)) if m.group(2) is not None else i
    return PosRoot(rank, i, j)


@dataclass(frozen=True)
class RootSubset:
    """A finite set of positive roots of one fixed rank."""

    rank: int
    members: frozenset[PosRoot]

    def __post_init__(self):
        for r in self.members:
            if r.rank != self.rank:
                raise RankMismatchError(f"{r} has rank {r.rank}, subset has rank {self.rank}")

    @classmethod
    def of(cls, rank: int, roots: Iterable[PosRoot | tuple[int, int]] = ()) -> RootSubset:
        members = frozenset(r if isinstance(r, PosRoot) else PosRoot(rank, *r) for r in roots)
        return cls(rank, members)

    @classmethod
    def parse(cls, rank: int, literals: Iterable[str]) -> RootSubset:
        return cls(rank, frozenset(parse_root(s, rank) for s in literals))

    @classmethod
    def full(cls, rank: int) -> RootSubset:
        return cls(rank, frozenset(positive_roots(rank)))

    def __contains__(self, root: object) -> bool:
        return root in self.members

    def __iter__(self) -> Iterator[PosRoot]:
        return iter(sorted(self.members, key=lambda r: r.key))

    def __len__(self) -> int:
        return len(self.members)

    def keys(self) -> set[tuple[int, int]]:
        return {r.key for r in self.members}

    def to_strings(self) -> list[str]:
        return [str(r) for r in self]

    def __str__(self) -> str:
        return "{" + ", ".join(self.to_strings()) + "}"

    __repr__ = __str__
