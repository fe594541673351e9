"""
Two independent routes to the dimension of a Demazure module V_tau(lambda).

* ``demazure_character`` applies isobaric divided differences along a reduced
  word of tau to the monomial x^lambda; the dimension is the value at x = 1.
* ``polytope_count`` counts lattice points of the face of the FFLV polytope
  where only coordinates indexed by a triangular subset (typically N(tau)) may
  be non-zero. The polytope is cut out by the Dyck-path inequalities: for every
  path from a[i,i] to a[j,j] moving a[p,q] -> a[p,q+1] or a[p+1,q], the sum of
  the coordinates along the path is at most c_i + ... + c_j.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .errors import PreconditionError, RankMismatchError
from .laurent import LaurentPoly, isobaric
from .perm import Permutation, inversion_set, reduced_word
from .rectsets import is_triangular_subset
from .roots import PosRoot, RootSubset
from .weights import Weight


def _check_inputs(tau: Permutation, lam: Weight) -> None:
    if lam.rank != tau.rank:
        raise RankMismatchError(f"weight of rank {lam.rank} with permutation of degree {tau.degree}")
    if not lam.is_dominant():
        raise PreconditionError(f"weight {lam.coeffs} is not dominant")


def apply_word(f: LaurentPoly, word: list[int]) -> LaurentPoly:
    """pi_{w1} ... pi_{wk} f, with pi_{wk} applied first."""
    for i in reversed(word):
        f = isobaric(f, i)
    return f


def demazure_character(tau: Permutation, lam: Weight, word: list[int] | None = None) -> LaurentPoly:
    _check_inputs(tau, lam)
    if word is None:
        return _character(tau.oneline, lam.coeffs)
    return apply_word(LaurentPoly.monomial(lam.epsilon()), word)


@functools.lru_cache(maxsize=4096)
def _character(oneline: tuple[int, ...], coeffs: tuple[int, ...]) -> LaurentPoly:
    return apply_word(LaurentPoly.monomial(Weight(coeffs).epsilon()), reduced_word(Permutation(oneline)))


def demazure_dim(tau: Permutation, lam: Weight) -> int:
    return demazure_character(tau, lam).evaluate_at_one()


def weyl_dimension(lam: Weight) -> int:
    """dim V(lambda) = prod over i<j of (a_i - a_j + j - i) / (j - i)."""
    a = lam.epsilon()
    m = len(a)
    out = Fraction(1)
    for i in range(m):
        for j in range(i + 1, m):
            out *= Fraction(a[i] - a[j] + j - i, j - i)
    assert out.denominator == 1
    return int(out)


@dataclass(frozen=True)
class FFLVFace:
    rank: int
    support: RootSubset
    marking: Weight

    def __post_init__(self):
        if self.support.rank != self.rank or self.marking.rank != self.rank:
            raise RankMismatchError("support, marking and face must share one rank")
        if not self.marking.is_dominant():
            raise PreconditionError(f"marking {self.marking.coeffs} is not dominant")


@functools.lru_cache(maxsize=None)
def dyck_paths(rank: int, i: int, j: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """All Dyck paths from a[i,i] to a[j,j] as tuples of (p, q) index pairs."""
    out = []

    def walk(p: int, q: int, acc: list[tuple[int, int]]) -> None:
        acc.append((p, q))
        if (p, q) == (j, j):
            out.append(tuple(acc))
        else:
            if q + 1 <= j:
                walk(p, q + 1, acc)
            if p + 1 <= q:
                walk(p + 1, q, acc)
        acc.pop()

    walk(i, i, [])
    return tuple(out)


def face_constraints(face: FFLVFace) -> list[tuple[tuple[int, ...], int]]:
    """Distinct (coordinate indices, bound) pairs, coordinates indexed in sorted support order."""
    coords = [r.key for r in face.support]
    index = {key: t for t, key in enumerate(coords)}
    c = face.marking.coeffs
    best: dict[tuple[int, ...], int] = {}
    for i in range(1, face.rank + 1):
        for j in range(i, face.rank + 1):
            bound = sum(c[i - 1:j])
            for path in dyck_paths(face.rank, i, j):
                cols = tuple(sorted(index[pq] for pq in path if pq in index))
                if cols and (cols not in best or bound < best[cols]):
                    best[cols] = bound
    return sorted(best.items())


def polytope_points(face: FFLVFace) -> Iterator[tuple[int, ...]]:
    """Lattice points of the face, as vectors over the sorted support."""
    if not is_triangular_subset(face.support):
        raise PreconditionError(f"support {face.support} is not a triangular subset")
    ncoord = len(face.support)
    constraints = face_constraints(face)
    by_coord: list[list[int]] = [[] for _ in range(ncoord)]
    for t, (cols, _bound) in enumerate(constraints):
        for col in cols:
            by_coord[col].append(t)
    slack = [bound for _cols, bound in constraints]
    point = [0] * ncoord

    def dfs(col: int) -> Iterator[tuple[int, ...]]:
        if col == ncoord:
            yield tuple(point)
            return
        ub = min((slack[t] for t in by_coord[col]), default=0)
        for v in range(ub + 1):
            point[col] = v
            for t in by_coord[col]:
                slack[t] -= v
            yield from dfs(col + 1)
            for t in by_coord[col]:
                slack[t] += v
        point[col] = 0

    yield from dfs(0)


def polytope_count(face: FFLVFace) -> int:
    return _count(face.rank, face.support.members, face.marking.coeffs)


@functools.lru_cache(maxsize=4096)
def _count(rank: int, members: frozenset[PosRoot], coeffs: tuple[int, ...]) -> int:
    face = FFLVFace(rank, RootSubset(rank, members), Weight(coeffs))
    return sum(1 for _ in polytope_points(face))


def demazure_face(tau: Permutation, lam: Weight) -> FFLVFace:
    return FFLVFace(tau.rank, inversion_set(tau), lam)


@dataclass(frozen=True)
class DimReport:
    demazure: int
    polytope: int
    lifted: int | None = None

    @property
    def equal(self) -> bool:
        values = {self.demazure, self.polytope}
        if self.lifted is not None:
            values.add(self.lifted)
        return len(values) == 1


def dims_agree(tau: Permutation, lam: Weight) -> DimReport:
    """Demazure dimension vs polytope count; for rectangular tau also the lifted Demazure dimension."""
    from .lift import lift_general  # lift depends on this module
    from .perm import is_rectangular, is_triangular

    _check_inputs(tau, lam)
    if not is_triangular(tau):
        raise PreconditionError(f"{tau} is not triangular")
    d = demazure_dim(tau, lam)
    p = polytope_count(demazure_face(tau, lam))
    lifted = None
    if is_rectangular(tau):
        lifted = 1
        for comp in lift_general(tau, lam):
            lifted *= demazure_dim(comp.tau_tilde, comp.lambda_tilde)
    return DimReport(d, p, lifted)
