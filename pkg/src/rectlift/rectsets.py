"""
Triangular and rectangular subsets of the positive roots.

A subset A is triangular (axiom R1) if for every alpha, beta in A whose
supports have connected union, alpha v beta is in A, and alpha ^ beta is in A
whenever it exists. It is rectangular if moreover (R2) holds: whenever
alpha ^ beta exists and both alpha v beta and alpha ^ beta lie in A, then
alpha and beta lie in A. A rectangular subset is irreducible when it contains
the highest root.

All predicates scan pairs exhaustively; failure witnesses are the
lexicographically least violating pair under the (i, j) order on roots.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import PreconditionError
from .roots import PosRoot, RootSubset, highest_root, join, meet, positive_roots, union_connected

__all__ = [
    "RootSubset", "AxiomCheck", "Decomposition",
    "is_triangular_subset", "is_rectangular_subset", "is_irreducible",
    "decompose", "boundary_sets", "meet_reconstruction", "restrict_to_interval",
]


@dataclass(frozen=True)
class AxiomCheck:
    """Outcome of a subset predicate; falsy on failure, with the offending pair."""

    ok: bool
    axiom: str | None = None
    witness: tuple[PosRoot, PosRoot] | None = None

    def __bool__(self) -> bool:
        return self.ok


def _ordered_pairs(roots):
    # unordered pairs (a, b) with a <= b in (i, j) order, including a == b
    ordered = sorted(roots, key=lambda r: r.key)
    return itertools.combinations_with_replacement(ordered, 2)


def _r1_violation(A: RootSubset) -> tuple[PosRoot, PosRoot] | None:
    for a, b in _ordered_pairs(A.members):
        if not union_connected(a, b):
            continue
        if join(a, b) not in A:
            return (a, b)
        m = meet(a, b)
        if m is not None and m not in A:
            return (a, b)
    return None


def _r2_violation(A: RootSubset) -> tuple[PosRoot, PosRoot] | None:
    for a, b in _ordered_pairs(positive_roots(A.rank)):
        m = meet(a, b)
        if m is None or m not in A or join(a, b) not in A:
            continue
        if a not in A or b not in A:
            return (a, b)
    return None


def violates_r2(A: RootSubset, a: PosRoot, b: PosRoot) -> bool:
    m = meet(a, b)
    return m is not None and m in A and join(a, b) in A and (a not in A or b not in A)


def is_triangular_subset(A: RootSubset) -> AxiomCheck:
    w = _r1_violation(A)
    return AxiomCheck(True) if w is None else AxiomCheck(False, "R1", w)


def is_rectangular_subset(A: RootSubset) -> AxiomCheck:
    w = _r1_violation(A)
    if w is not None:
        return AxiomCheck(False, "R1", w)
    w = _r2_violation(A)
    if w is not None:
        return AxiomCheck(False, "R2", w)
    return AxiomCheck(True)


def is_irreducible(A: RootSubset) -> bool:
    check = is_rectangular_subset(A)
    if not check:
        raise PreconditionError(f"irreducibility is defined for rectangular subsets; {check.axiom} fails at {check.witness}")
    return A.rank >= 1 and highest_root(A.rank) in A


def boundary_sets(A: RootSubset) -> tuple[RootSubset, RootSubset]:
    """(A-, A+): the members starting at 1, and the members ending at rank."""
    lower = RootSubset(A.rank, frozenset(r for r in A.members if r.i == 1))
    upper = RootSubset(A.rank, frozenset(r for r in A.members if r.j == A.rank))
    if A.rank >= 1 and highest_root(A.rank) in A and is_rectangular_subset(A):
        rebuilt = meet_reconstruction(lower, upper)
        assert rebuilt == A, f"meet reconstruction {rebuilt} differs from {A}"
    return lower, upper


def meet_reconstruction(lower: RootSubset, upper: RootSubset) -> RootSubset:
    """{a ^ b : a in lower, b in upper, a ^ b exists}."""
    out = set()
    for a in lower.members:
        for b in upper.members:
            m = meet(a, b)
            if m is not None:
                out.add(m)
    return RootSubset(lower.rank, frozenset(out))


def restrict_to_interval(A: RootSubset, lo: int, hi: int) -> RootSubset:
    """A intersected with the roots supported in [lo, hi], re-indexed to rank hi-lo+1."""
    rank = hi - lo + 1
    return RootSubset(
        rank,
        frozenset(PosRoot(rank, r.i - lo + 1, r.j - lo + 1) for r in A.members if lo <= r.i and r.j <= hi),
    )


@dataclass(frozen=True)
class Decomposition:
    intervals: tuple[tuple[int, int], ...]
    components: tuple[RootSubset, ...] = field(default=())

    def union(self, rank: int) -> RootSubset:
        members = set()
        for (lo, _hi), comp in zip(self.intervals, self.components):
            members.update(PosRoot(rank, r.i + lo - 1, r.j + lo - 1) for r in comp.members)
        return RootSubset(rank, frozenset(members))


def _support_components(A: RootSubset) -> list[tuple[int, int]]:
    covered = sorted({k for r in A.members for k in r.support})
    intervals: list[tuple[int, int]] = []
    for k in covered:
        if intervals and intervals[-1][1] == k - 1:
            intervals[-1] = (intervals[-1][0], k)
        else:
            intervals.append((k, k))
    return intervals


def decompose(A: RootSubset) -> Decomposition:
    """Split a rectangular subset into irreducible pieces over the support components.

    Components are re-indexed to standalone root systems of rank |I_t|.
    """
    check = is_rectangular_subset(A)
    if not check:
        raise PreconditionError(f"decompose needs a rectangular subset; {check.axiom} fails at {check.witness}")
    intervals = _support_components(A)
    components = []
    for lo, hi in intervals:
        comp = restrict_to_interval(A, lo, hi)
        assert is_rectangular_subset(comp) and highest_root(comp.rank) in comp
        components.append(comp)
    return Decomposition(tuple(intervals), tuple(components))
