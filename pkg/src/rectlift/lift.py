"""
Lifting a rectangular permutation tau in S_{n+1} and a dominant weight lambda
of sl_{n+1} to a permutation tau~ in S_{2n} and a dominant weight lambda~ of
sl_{2n}.

For irreducible rectangular tau, N(tau) is the set of meets a[i_h, j_k] of its
boundary roots a[1, j_k] (j_1 = n > j_2 > ...) and a[i_h, n]
(1 = i_1 < i_2 < ...). The map D sends a[i_h, j_k] to a[n-k+1, n+h-1] in
nabla_n; its image A is an ideal, tau~ = tau_A, and lambda~ is assembled from
fundamental weights w~_{r'} with r' = n - v(r) + u(r).

>>> res = lift(Permutation([4, 3, 2, 5, 1]), Weight([1, 0, 0, 0]))
>>> res.tau_tilde, res.lambda_tilde.coeffs
(15263784, (0, 1, 0, 0, 0, 0, 0))
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .dimension import FFLVFace, demazure_dim, polytope_count
from .errors import PreconditionError, RankMismatchError
from .nabla import NablaIdeal, i_A, is_nabla_ideal, tau_A, weight_mu
from .perm import (
    Permutation, act_on_weight, enumerate_class, inversion_set, is_rectangular,
)
from .rectsets import boundary_sets, decompose, is_rectangular_subset, restrict_to_interval
from .roots import PosRoot, RootSubset, highest_root, join, leq, meet, positive_roots, root_sum
from .weights import Weight


@dataclass(frozen=True)
class DMap:
    n: int
    source: RootSubset
    js: tuple[int, ...]
    is_: tuple[int, ...]
    pairs: dict[PosRoot, PosRoot] = field(hash=False, compare=False)

    def __call__(self, alpha: PosRoot) -> PosRoot:
        return self.pairs[alpha]

    def image(self) -> NablaIdeal:
        return NablaIdeal(self.n, RootSubset(2 * self.n - 1, frozenset(self.pairs.values())))


def _require_irreducible_rectangular(tau: Permutation) -> RootSubset:
    N = inversion_set(tau)
    if tau.rank < 1:
        raise PreconditionError("lifting needs a permutation of degree at least 2")
    check = is_rectangular_subset(N)
    if not check:
        raise PreconditionError(f"{tau} is not rectangular ({check.axiom} fails at {check.witness})")
    if highest_root(tau.rank) not in N:
        raise PreconditionError(f"{tau} is rectangular but reducible; use lift_general")
    return N


def d_map(tau: Permutation) -> DMap:
    N = _require_irreducible_rectangular(tau)
    n = tau.rank
    lower, upper = boundary_sets(N)
    js = tuple(sorted((r.j for r in lower.members), reverse=True))
    is_ = tuple(sorted(r.i for r in upper.members))
    h_of = {i: h for h, i in enumerate(is_, 1)}
    k_of = {j: k for k, j in enumerate(js, 1)}
    pairs = {}
    for alpha in N:
        k, h = k_of[alpha.j], h_of[alpha.i]
        pairs[alpha] = PosRoot(2 * n - 1, n - k + 1, n + h - 1)
    assert len(set(pairs.values())) == len(pairs)
    return DMap(n, N, js, is_, pairs)


def fundamental_index(N: RootSubset, r: int) -> tuple[int, int, int]:
    """(r', v, u) for the fundamental weight w_r, where r' = n - v + u."""
    n = N.rank
    v = sum(1 for a in N.members if a.i == 1 and a.j >= r)
    u = sum(1 for a in N.members if a.j == n and a.i <= r)
    return n - v + u, v, u


@dataclass(frozen=True)
class LiftResult:
    tau: Permutation
    lam: Weight
    tau_tilde: Permutation
    lambda_tilde: Weight
    ideal: NablaIdeal
    dmap: DMap
    mu: Weight
    interval: tuple[int, int]

    def to_json(self) -> dict:
        return {
            "interval": list(self.interval),
            "tau": str(self.tau),
            "lambda": list(self.lam.coeffs),
            "tau_tilde": str(self.tau_tilde),
            "lambda_tilde": list(self.lambda_tilde.coeffs),
            "ideal": self.ideal.members.to_strings(),
            "mu": list(self.mu.coeffs),
        }


def _check_weight(tau: Permutation, lam: Weight) -> None:
    if lam.rank != tau.rank:
        raise RankMismatchError(f"weight has {lam.rank} coefficients, {tau} needs {tau.rank}")
    if not lam.is_dominant():
        raise PreconditionError(f"weight {lam.coeffs} is not dominant")


def lift(tau: Permutation, lam: Weight, interval: tuple[int, int] | None = None) -> LiftResult:
    """Lift an irreducible rectangular tau and a dominant lambda."""
    _check_weight(tau, lam)
    dm = d_map(tau)
    n = dm.n
    ideal = dm.image()
    tt = tau_A(ideal)
    rank = 2 * n - 1
    coeffs = [0] * rank
    for r, a in enumerate(lam.coeffs, 1):
        if a:
            rp, _v, _u = fundamental_index(dm.source, r)
            coeffs[rp - 1] += a
    lt = Weight(coeffs)
    mu = act_on_weight(tt, lt)
    for alpha in dm.source:
        assert mu.pairing(dm(alpha)) == -lam.pairing(alpha)
    for beta in positive_roots(rank):
        if beta not in ideal:
            assert mu.pairing(beta) >= 0
    return LiftResult(tau, lam, tt, lt, ideal, dm, mu, interval or (1, n))


def component_permutation(tau: Permutation, lo: int, hi: int) -> Permutation:
    """The factor of tau acting on positions lo..hi+1, standardised to S_{hi-lo+2}."""
    values = tau.oneline[lo - 1:hi + 1]
    if sorted(values) != list(range(lo, hi + 2)):
        raise PreconditionError(f"{tau} does not preserve the block {lo}..{hi + 1}")
    return Permutation(v - lo + 1 for v in values)


def lift_general(tau: Permutation, lam: Weight) -> list[LiftResult]:
    """Lift each irreducible component of a rectangular tau on its own sub-root system."""
    _check_weight(tau, lam)
    if not is_rectangular(tau):
        raise PreconditionError(f"{tau} is not rectangular")
    N = inversion_set(tau)
    out = []
    for (lo, hi), comp in zip(*_decomposition(N)):
        sub = component_permutation(tau, lo, hi)
        assert inversion_set(sub) == comp
        out.append(lift(sub, Weight(lam.coeffs[lo - 1:hi]), (lo, hi)))
    return out


def _decomposition(N: RootSubset):
    dec = decompose(N)
    return dec.intervals, dec.components


def weight_function(res: LiftResult) -> dict[PosRoot, int]:
    """f(D(alpha)) = -<lambda, alpha> on the ideal."""
    return {res.dmap(a): -res.lam.pairing(a) for a in res.dmap.source}


def check_component(res: LiftResult) -> dict[str, bool]:
    """All computable consequences of the lift for one irreducible component."""
    n = res.dmap.n
    rank = 2 * n - 1
    A = res.ideal.members
    tt = res.tau_tilde
    N = res.dmap.source
    Nt = inversion_set(tt)
    checks: dict[str, bool] = {}

    checks["ideal"] = is_nabla_ideal(n, A)
    checks["inversion_set"] = inversion_set(tt.inverse()) == A and tt.length() == len(A)

    phi = {a: i_A(res.ideal, res.dmap(a)) for a in N}
    iso = set(phi.values()) == set(Nt.members) and len(phi) == len(Nt)
    for a, b in itertools.product(N, repeat=2):
        if leq(a, b) != leq(phi[a], phi[b]):
            iso = False
        j = join(a, b)
        if j not in N or phi[j] != join(phi[a], phi[b]):
            iso = False
        m, mt = meet(a, b), meet(phi[a], phi[b])
        if (m is None) != (mt is None) or (m is not None and phi[m] != mt):
            iso = False
    checks["poset_isomorphism"] = iso

    lo = min(r.i for r in Nt.members)
    hi = max(r.j for r in Nt.members)
    sub = restrict_to_interval(Nt, lo, hi)
    checks["tilde_rectangular"] = bool(is_rectangular_subset(sub)) and highest_root(sub.rank) in sub

    checks["commutative"] = all(root_sum(g, d) is None for g, d in itertools.combinations_with_replacement(Nt, 2))

    mu = act_on_weight(tt, res.lambda_tilde)
    pairing_ok = all(mu.pairing(res.dmap(a)) == -res.lam.pairing(a) for a in N)
    pairing_ok &= all(mu.pairing(b) >= 0 for b in positive_roots(rank) if b not in A)
    checks["pairings"] = pairing_ok

    try:
        mu_c = weight_mu(res.ideal, weight_function(res))
        checks["weight_construction"] = (
            mu_c == res.mu and act_on_weight(tt.inverse(), mu_c) == res.lambda_tilde
        )
    except (AssertionError, PreconditionError):
        checks["weight_construction"] = False

    d_tau = demazure_dim(res.tau, res.lam)
    d_tilde = demazure_dim(tt, res.lambda_tilde)
    p_tau = polytope_count(FFLVFace(n, N, res.lam))
    p_tilde = polytope_count(FFLVFace(rank, Nt, res.lambda_tilde))
    checks["dimension"] = d_tau == d_tilde == p_tau == p_tilde
    return checks


CHECK_NAMES = (
    "ideal", "inversion_set", "poset_isomorphism", "tilde_rectangular",
    "commutative", "pairings", "weight_construction", "dimension",
)


@dataclass
class VerificationReport:
    tau: Permutation
    lam: Weight
    components: list[LiftResult]
    component_checks: list[dict[str, bool]]
    checks: dict[str, bool]
    dims: dict[str, int]

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        comps = []
        for res, chk in zip(self.components, self.component_checks):
            d = res.to_json()
            d["checks"] = chk
            comps.append(d)
        return {
            "tau": str(self.tau),
            "lambda": list(self.lam.coeffs),
            "components": comps,
            "dims": self.dims,
            "checks": self.checks,
            "pass": self.passed,
        }


def verify_lift(tau: Permutation, lam: Weight) -> VerificationReport:
    components = lift_general(tau, lam)
    per = [check_component(res) for res in components]
    checks = {name: all(c[name] for c in per) for name in CHECK_NAMES}

    d_tau = demazure_dim(tau, lam)
    p_tau = polytope_count(FFLVFace(tau.rank, inversion_set(tau), lam)) if tau.rank >= 1 else 1
    d_lift = 1
    for res in components:
        d_lift *= demazure_dim(res.tau_tilde, res.lambda_tilde)
    checks["dimension"] = checks["dimension"] and d_tau == p_tau == d_lift
    dims = {"demazure": d_tau, "polytope": p_tau, "lifted": d_lift}
    return VerificationReport(tau, lam, components, per, checks, dims)


def dominant_weights(rank: int, max_coeff: int) -> Iterator[Weight]:
    for c in itertools.product(range(max_coeff + 1), repeat=rank):
        yield Weight(c)


def _verify_pair(pair: tuple[tuple[int, ...], tuple[int, ...]]) -> VerificationReport:
    return verify_lift(Permutation(pair[0]), Weight(pair[1]))


def sweep(n: int, max_coeff: int, jobs: int = 1) -> list[VerificationReport]:
    """verify_lift over every rectangular tau in S_n and every weight with coefficients <= max_coeff.

    Results are ordered by one-line notation, then weight.
    """
    pairs = [
        (tau.oneline, lam.coeffs)
        for tau in enumerate_class(n, "rectangular")
        for lam in dominant_weights(n - 1, max_coeff)
    ]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_verify_pair, pairs, chunksize=8))
    return [_verify_pair(p) for p in pairs]
