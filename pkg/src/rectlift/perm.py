"""
Permutations of {1..m} in one-line notation, viewed as Weyl group elements of
type A_{m-1}.

Composition is right-to-left, (p*q)(x) = p(q(x)), so ``from_word(n, [i1, ..., ik])``
is s_{i1} s_{i2} ... s_{ik} with s_{ik} acting first. A permutation p acts on
epsilon-coordinates by e_i -> e_{p(i)}, and on roots through
alpha_{i,j} = e_i - e_{j+1}.

>>> tau = from_word(4, [1, 2, 3, 4, 1, 2, 1])
>>> tau
43251
>>> inversion_set(tau)
{a[1,1], a[1,2], a[1,4], a[2,2], a[2,4], a[3,4], a[4,4]}
"""
from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import EnumerationBoundError, PreconditionError, RankMismatchError
from .roots import PosRoot, RootSubset, SignedRoot
from .weights import Weight

RECTANGULAR_PATTERNS = ((2, 4, 1, 3), (2, 4, 3, 1), (4, 2, 1, 3), (4, 2, 3, 1))
TRIANGULAR_PATTERNS = ((4, 2, 3, 1), (2, 4, 1, 3))
CLASSES = {"rectangular": RECTANGULAR_PATTERNS, "triangular": TRIANGULAR_PATTERNS}

DEFAULT_CENSUS_LIMIT = 8


@dataclass(frozen=True)
class Permutation:
    oneline: tuple[int, ...]

    def __init__(self, oneline: Iterable[int]):
        word = tuple(int(x) for x in oneline)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise PreconditionError(f"{word} is not a permutation of 1..{len(word)}")
        object.__setattr__(self, "oneline", word)

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(range(1, degree + 1))

    @classmethod
    def longest(cls, degree: int) -> Permutation:
        return cls(range(degree, 0, -1))

    @property
    def degree(self) -> int:
        return len(self.oneline)

    @property
    def rank(self) -> int:
        return len(self.oneline) - 1

    def __call__(self, x: int) -> int:
        return self.oneline[x - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if other.degree != self.degree:
            raise RankMismatchError("composing permutations of different degree")
        return Permutation(self(other(x)) for x in range(1, self.degree + 1))

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, v in enumerate(self.oneline, 1):
            inv[v - 1] = i
        return Permutation(inv)

    def length(self) -> int:
        w = self.oneline
        return sum(1 for a, b in itertools.combinations(range(len(w)), 2) if w[a] > w[b])

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.oneline, 1))

    def __str__(self) -> str:
        return format_perm(self)

    __repr__ = __str__


def format_perm(p: Permutation) -> str:
    if p.degree <= 9:
        return "".join(str(v) for v in p.oneline)
    return ",".join(str(v) for v in p.oneline)


def parse_perm(text: str) -> Permutation:
    """Parse "43251", "4,3,2,5,1" or an s-word such as "s1 s3 s2" (degree = max index + 1)."""
    s = text.strip()
    if not s:
        raise PreconditionError("empty permutation")
    if s.startswith("s"):
        idx = re.findall(r"s\s*(\d+)", s)
        if not idx or re.sub(r"s\s*\d+", "", s).strip(" ,*"):
            raise PreconditionError(f"malformed s-word {text!r}")
        word = [int(i) for i in idx]
        return from_word(max(word), word)
    if "," in s:
        parts = s.split(",")
    else:
        parts = list(s)
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise PreconditionError(f"malformed permutation {text!r}") from None
    return Permutation(values)


def simple_reflection(rank: int, i: int) -> Permutation:
    if not 1 <= i <= rank:
        raise PreconditionError(f"simple reflection s{i} outside 1..{rank}")
    w = list(range(1, rank + 2))
    w[i - 1], w[i] = w[i], w[i - 1]
    return Permutation(w)


def root_reflection(root: PosRoot) -> Permutation:
    """s_alpha for alpha = alpha_{i,j}: the transposition (i, j+1)."""
    w = list(range(1, root.rank + 2))
    w[root.i - 1], w[root.j] = w[root.j], w[root.i - 1]
    return Permutation(w)


def from_word(rank: int, word: Sequence[int]) -> Permutation:
    """The product s_{w1} s_{w2} ... s_{wk} in S_{rank+1}."""
    oneline = list(range(1, rank + 2))
    for i in word:
        if not 1 <= i <= rank:
            raise PreconditionError(f"simple reflection index {i} outside 1..{rank}")
        # right multiplication by s_i swaps positions i and i+1
        oneline[i - 1], oneline[i] = oneline[i], oneline[i - 1]
    return Permutation(oneline)


def inversion_set(p: Permutation) -> RootSubset:
    """N(p) = {alpha_{i,j-1} : i < j, p(i) > p(j)}."""
    w = p.oneline
    return RootSubset.of(
        p.rank,
        ((i + 1, j) for i, j in itertools.combinations(range(len(w)), 2) if w[i] > w[j]),
    )


def act_on_root(p: Permutation, root: PosRoot | SignedRoot) -> SignedRoot:
    sr = root if isinstance(root, SignedRoot) else SignedRoot(1, root)
    if sr.is_zero:
        return sr
    r = sr.root
    if r.rank != p.rank:
        raise RankMismatchError(f"{r} of rank {r.rank} acted on by a permutation of degree {p.degree}")
    a, b = p(r.i), p(r.j + 1)
    if a < b:
        return SignedRoot(sr.sign, PosRoot(r.rank, a, b - 1))
    return SignedRoot(-sr.sign, PosRoot(r.rank, b, a - 1))


def act_on_weight(p: Permutation, w: Weight) -> Weight:
    if w.rank != p.rank:
        raise RankMismatchError(f"weight of rank {w.rank} acted on by a permutation of degree {p.degree}")
    eps = w.epsilon()
    out = [0] * p.degree
    for i, v in enumerate(eps, 1):
        out[p(i) - 1] = v
    return Weight.from_epsilon(out)


def _order_isomorphic(seq: Sequence[int], pattern: Sequence[int]) -> bool:
    return all(
        (seq[a] < seq[b]) == (pattern[a] < pattern[b])
        for a, b in itertools.combinations(range(len(pattern)), 2)
    )


def contains_pattern(p: Permutation | Sequence[int], q: Permutation | Sequence[int]) -> bool:
    w = p.oneline if isinstance(p, Permutation) else tuple(p)
    pat = q.oneline if isinstance(q, Permutation) else tuple(q)
    if len(pat) > len(w):
        raise PreconditionError("pattern longer than permutation")
    return any(_order_isomorphic(sub, pat) for sub in itertools.combinations(w, len(pat)))


def avoids_all(p: Permutation, patterns: Iterable[Sequence[int]]) -> bool:
    return not any(len(q) <= p.degree and contains_pattern(p, q) for q in patterns)


def is_rectangular(p: Permutation) -> bool:
    return avoids_all(p, RECTANGULAR_PATTERNS)


def is_triangular(p: Permutation) -> bool:
    return avoids_all(p, TRIANGULAR_PATTERNS)


def is_rectangular_by_inequalities(p: Permutation) -> bool:
    """For all i<k<j<l: (p(i)>p(j) and p(k)>p(l)) iff (p(i)>p(l) and p(k)>p(j))."""
    for i, k, j, l in itertools.combinations(range(1, p.degree + 1), 4):
        first = p(i) > p(j) and p(k) > p(l)
        second = p(i) > p(l) and p(k) > p(j)
        if first != second:
            return False
    return True


def is_triangular_by_inequalities(p: Permutation) -> bool:
    """For all i<k<=j<l with p(i)>p(j), p(k)>p(l): p(i)>p(l) and p(k)>=p(j)."""
    m = p.degree
    for i in range(1, m + 1):
        for k in range(i + 1, m + 1):
            for j in range(k, m + 1):
                for l in range(j + 1, m + 1):
                    if p(i) > p(j) and p(k) > p(l):
                        if not (p(i) > p(l) and p(k) >= p(j)):
                            return False
    return True


def involution_i(p: Permutation) -> Permutation:
    """Backward reading of the one-line notation of p^{-1}."""
    return Permutation(reversed(p.inverse().oneline))


def reduced_word(p: Permutation) -> list[int]:
    """A reduced word for p, peeling off the leftmost descent each step."""
    w = list(p.oneline)
    out: list[int] = []
    while True:
        for i in range(len(w) - 1):
            if w[i] > w[i + 1]:
                w[i], w[i + 1] = w[i + 1], w[i]
                out.append(i + 1)
                break
        else:
            break
    out.reverse()
    return out


def random_reduced_word(p: Permutation, rng: random.Random) -> list[int]:
    w = list(p.oneline)
    out: list[int] = []
    while True:
        descents = [i for i in range(len(w) - 1) if w[i] > w[i + 1]]
        if not descents:
            break
        i = rng.choice(descents)
        w[i], w[i + 1] = w[i + 1], w[i]
        out.append(i + 1)
    out.reverse()
    return out


def _standardize(seq: Sequence[int]) -> tuple[int, ...]:
    order = sorted(seq)
    return tuple(order.index(v) + 1 for v in seq)


def _extension_ok(prefix: list[int], patterns: Sequence[tuple[int, ...]]) -> bool:
    # only subsequences ending at the newly appended entry can be new occurrences
    last = prefix[-1]
    head = prefix[:-1]
    for k in {len(pat) for pat in patterns}:
        if len(prefix) < k:
            continue
        shapes = {pat for pat in patterns if len(pat) == k}
        for sub in itertools.combinations(head, k - 1):
            if _standardize(sub + (last,)) in shapes:
                return False
    return True


def enumerate_class(n: int, cls: str, limit: int = DEFAULT_CENSUS_LIMIT) -> Iterator[Permutation]:
    """Members of the class in S_n, in lexicographic one-line order."""
    if cls not in CLASSES:
        raise PreconditionError(f"unknown class {cls!r}; expected one of {sorted(CLASSES)}")
    if n < 1:
        raise PreconditionError(f"n must be >= 1, got {n}")
    if n > limit:
        raise EnumerationBoundError(f"n={n} exceeds the enumeration limit {limit}")
    patterns = CLASSES[cls]
    prefix: list[int] = []
    used = [False] * (n + 1)

    def extend() -> Iterator[Permutation]:
        if len(prefix) == n:
            yield Permutation(prefix)
            return
        for v in range(1, n + 1):
            if used[v]:
                continue
            prefix.append(v)
            if _extension_ok(prefix, patterns):
                used[v] = True
                yield from extend()
                used[v] = False
            prefix.pop()

    yield from extend()


def census(n: int, cls: str, limit: int = DEFAULT_CENSUS_LIMIT) -> int:
    return sum(1 for _ in enumerate_class(n, cls, limit))


def all_permutations(degree: int) -> Iterator[Permutation]:
    for w in itertools.permutations(range(1, degree + 1)):
        yield Permutation(w)
