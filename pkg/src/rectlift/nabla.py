"""
The region nabla_n of the rank-(2n-1) root poset, its order ideals, and the
Weyl group elements tau_A they determine.

nabla_n = {a[i,j] : 1 <= i <= n <= j <= 2n-1, j - i <= n-1}. Its members are
addressed by "row" k and "column" h, both in 1..n, through
a[n-k+1, n+h-1]; the member exists iff h + k <= n + 1.

>>> A = NablaIdeal.parse(4, ["a[4]", "a[3,4]", "a[4,5]", "a[2,4]", "a[3,5]", "a[4,6]", "a[4,7]"])
>>> stats(A)
RowColStats(c=(4, 2, 1, 0), r=(3, 2, 1, 1))
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import PreconditionError
from .perm import Permutation, act_on_root, act_on_weight, root_reflection
from .roots import PosRoot, RootSubset, SignedRoot, join, leq, meet, neg, pos, positive_roots, zero_root
from .weights import Weight


def nabla(n: int) -> RootSubset:
    if n < 1:
        raise PreconditionError(f"n must be >= 1, got {n}")
    rank = 2 * n - 1
    return RootSubset.of(
        rank,
        ((i, j) for i in range(1, n + 1) for j in range(n, rank + 1) if j - i <= n - 1),
    )


def nabla_root(n: int, k: int, h: int) -> PosRoot:
    """The member of nabla_n in row k, column h: a[n-k+1, n+h-1]."""
    return PosRoot(2 * n - 1, n - k + 1, n + h - 1)


def row_col(n: int, root: PosRoot) -> tuple[int, int]:
    """Inverse of nabla_root: (k, h)."""
    return n - root.i + 1, root.j - n + 1


def in_nabla(n: int, root: PosRoot) -> bool:
    return root.rank == 2 * n - 1 and root.i <= n <= root.j and root.j - root.i <= n - 1


def is_nabla_ideal(n: int, A: RootSubset | Iterable[PosRoot]) -> bool:
    members = A.members if isinstance(A, RootSubset) else frozenset(A)
    if not all(in_nabla(n, a) for a in members):
        return False
    full = nabla(n)
    return all(b in members for a in members for b in full if leq(b, a))


@dataclass(frozen=True)
class NablaIdeal:
    n: int
    members: RootSubset

    def __post_init__(self):
        if self.members.rank != 2 * self.n - 1:
            raise PreconditionError(f"an ideal of nabla_{self.n} lives in rank {2 * self.n - 1}")
        if not is_nabla_ideal(self.n, self.members):
            raise PreconditionError(f"{self.members} is not a nabla_{self.n}-ideal")

    @classmethod
    def of(cls, n: int, roots: Iterable[PosRoot | tuple[int, int]]) -> NablaIdeal:
        return cls(n, RootSubset.of(2 * n - 1, roots))

    @classmethod
    def parse(cls, n: int, literals: Iterable[str]) -> NablaIdeal:
        return cls(n, RootSubset.parse(2 * n - 1, literals))

    @classmethod
    def from_stats(cls, n: int, c: Sequence[int]) -> NablaIdeal:
        """The ideal whose row k holds columns 1..c_k."""
        return cls.of(n, (nabla_root(n, k, h).key for k in range(1, n + 1) for h in range(1, c[k - 1] + 1)))

    @property
    def rank(self) -> int:
        return 2 * self.n - 1

    def __contains__(self, root: object) -> bool:
        return root in self.members

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class RowColStats:
    c: tuple[int, ...]
    r: tuple[int, ...]


def stats(A: NablaIdeal) -> RowColStats:
    n = A.n
    c = [0] * n
    r = [0] * n
    for root in A.members:
        k, h = row_col(n, root)
        c[k - 1] = max(c[k - 1], h)
        r[h - 1] = max(r[h - 1], k)
    return RowColStats(tuple(c), tuple(r))


def height_order(roots: Iterable[PosRoot]) -> list[PosRoot]:
    """Members sorted by decreasing height; ties broken by (i, j)."""
    return sorted(roots, key=lambda a: (-a.height, a.key))


def tau_A(A: NablaIdeal, order: Sequence[PosRoot] | None = None) -> Permutation:
    """s_{b1} s_{b2} ... s_{br} over the members of A, b1 of largest height.

    ``order`` may supply any listing of A with non-increasing height.
    """
    seq = height_order(A.members) if order is None else list(order)
    if sorted(seq, key=lambda a: a.key) != sorted(A.members, key=lambda a: a.key):
        raise PreconditionError("order must list every member of the ideal exactly once")
    if any(seq[t].height < seq[t + 1].height for t in range(len(seq) - 1)):
        raise PreconditionError("order must be non-increasing in height")
    result = Permutation.identity(2 * A.n)
    for beta in seq:
        result = result * root_reflection(beta)
    return result


def tau_inv_on_nabla(A: NablaIdeal, alpha: PosRoot) -> SignedRoot:
    """tau_A^{-1}(alpha) for alpha in nabla_n, from the row/column statistics alone."""
    n = A.n
    if not in_nabla(n, alpha):
        raise PreconditionError(f"{alpha} is not in nabla_{n}")
    st = stats(A)
    k, h = row_col(n, alpha)
    ck, rh = st.c[k - 1], st.r[h - 1]
    rank = 2 * n - 1
    if alpha in A:
        return neg(PosRoot(rank, n + h - rh, n - k + ck))
    lo, hi = n - k + ck + 1, n + h - rh - 1
    if lo == hi + 1:
        return zero_root()
    return pos(PosRoot(rank, lo, hi))


def i_A(A: NablaIdeal, alpha: PosRoot) -> PosRoot:
    if alpha not in A:
        raise PreconditionError(f"{alpha} is not in the ideal")
    image = tau_inv_on_nabla(A, alpha)
    assert image.sign == -1
    return image.root


def check_weight_hypotheses(A: NablaIdeal, f: Mapping[PosRoot, int]) -> None:
    """Raise PreconditionError naming the first failed hypothesis (i)-(iv)."""
    if set(f) != set(A.members):
        raise PreconditionError("f must be defined exactly on the members of the ideal")
    members = sorted(A.members, key=lambda a: a.key)
    for a in members:
        if f[a] > 0:
            raise PreconditionError(f"hypothesis (i) fails: f({a}) = {f[a]} > 0")
    for a in members:
        for b in members:
            if leq(a, b) and f[a] > f[b]:
                raise PreconditionError(f"hypothesis (ii) fails: {a} <= {b} but f({a}) > f({b})")
    for a in members:
        for b in members:
            m = meet(a, b)
            j = join(a, b)
            # members of nabla_n all contain n in their support, so m exists and lies in A
            if j in A and f[j] != f[a] + f[b] - f[m]:
                raise PreconditionError(f"hypothesis (iii) fails at {a}, {b}")
            if f[a] + f[b] - f[m] < 0 and j not in A:
                raise PreconditionError(f"hypothesis (iv) fails at {a}, {b}")


def weight_mu(A: NablaIdeal, f: Mapping[PosRoot, int]) -> Weight:
    """A weight mu of rank 2n-1 with <mu, alpha> = f(alpha) on A and >= 0 off A."""
    n = A.n
    rank = 2 * n - 1
    check_weight_hypotheses(A, f)
    if not A.members:
        return Weight.zero(rank)

    def fv(i: int, j: int) -> int:
        return f[PosRoot(rank, i, j)]

    h = min(r.i for r in A.members if r.j == n)
    k = max(r.j for r in A.members if r.i == n)
    c = [0] * (2 * n + 1)  # indices 0..2n; 0 and 2n are the zero weight
    c[n] = fv(n, n)
    for t in range(h, n):
        c[t] = fv(t, n) - fv(t + 1, n)
    for t in range(n + 1, k + 1):
        c[t] = fv(n, t) - fv(n, t - 1)
    c[h - 1] = -fv(h, n)
    c[k + 1] = -fv(n, k)
    mu = Weight(c[1:2 * n])

    for a in positive_roots(rank):
        value = mu.pairing(a)
        if a in A:
            assert value == f[a], f"<mu, {a}> = {value} != f = {f[a]}"
        else:
            assert value >= 0, f"<mu, {a}> = {value} < 0 off the ideal"
    assert act_on_weight(tau_A(A).inverse(), mu).is_dominant()
    return mu
