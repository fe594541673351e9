"""
Integral weights of sl_{n+1} in fundamental-weight coordinates.

A weight lambda = c_1 w_1 + ... + c_n w_n is stored as the tuple (c_1, ..., c_n).
Its epsilon-coordinates (a_1, ..., a_{n+1}) are normalised so that a_{n+1} = 0,
with a_k = c_k + ... + c_n. The pairing with a coroot is
<lambda, alpha_{i,j}^vee> = c_i + ... + c_j = a_i - a_{j+1}.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import PreconditionError, RankMismatchError
from .roots import PosRoot


@dataclass(frozen=True)
class Weight:
    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int]):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in coeffs))

    @property
    def rank(self) -> int:
        return len(self.coeffs)

    @classmethod
    def zero(cls, rank: int) -> Weight:
        return cls([0] * rank)

    @classmethod
    def fundamental(cls, rank: int, r: int) -> Weight:
        """w_r; indices 0 and rank+1 give the zero weight (trivial and determinant)."""
        if not 0 <= r <= rank + 1:
            raise PreconditionError(f"fundamental weight index {r} outside 0..{rank + 1}")
        c = [0] * rank
        if 1 <= r <= rank:
            c[r - 1] = 1
        return cls(c)

    @classmethod
    def from_epsilon(cls, eps: Sequence[int]) -> Weight:
        return cls(eps[k] - eps[k + 1] for k in range(len(eps) - 1))

    def epsilon(self) -> tuple[int, ...]:
        out = [0] * (self.rank + 1)
        for k in range(self.rank - 1, -1, -1):
            out[k] = out[k + 1] + self.coeffs[k]
        return tuple(out)

    def pairing(self, root: PosRoot) -> int:
        if root.rank != self.rank:
            raise RankMismatchError(f"weight of rank {self.rank} paired with {root} of rank {root.rank}")
        return sum(self.coeffs[root.i - 1:root.j])

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def __add__(self, other: Weight) -> Weight:
        if other.rank != self.rank:
            raise RankMismatchError("adding weights of different rank")
        return Weight(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: Weight) -> Weight:
        return self + (-1) * other

    def __rmul__(self, k: int) -> Weight:
        return Weight(k * c for c in self.coeffs)

    def __str__(self) -> str:
        terms = [f"{c}*w{t}" for t, c in enumerate(self.coeffs, 1) if c]
        return " + ".join(terms) if terms else "0"


def parse_weight(text: str, rank: int | None = None) -> Weight:
    """Parse "c1,c2,...,cn" into a Weight, optionally checking its rank."""
    parts = [p for p in re.split(r"[,\s]+", text.strip()) if p]
    try:
        w = Weight(int(p) for p in parts)
    except ValueError:
        raise PreconditionError(f"malformed weight {text!r}; expected comma-separated integers") from None
    if rank is not None and w.rank != rank:
        raise PreconditionError(f"weight {text!r} has {w.rank} coefficients, expected {rank}")
    return w
