"""
Sparse multivariate Laurent polynomials with integer coefficients.

Terms are kept in a dict from exponent tuples to non-zero ints; all exponent
tuples of one polynomial have the same length.
"""
from __future__ import annotations

from typing import Iterable, Mapping


class LaurentPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], int] | Iterable = ()):
        self.nvars = nvars
        clean: dict[tuple[int, ...], int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exp, coeff in items:
            exp = tuple(exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} has length {len(exp)}, expected {nvars}")
            if coeff:
                clean[exp] = clean.get(exp, 0) + coeff
                if not clean[exp]:
                    del clean[exp]
        self.terms = clean

    @classmethod
    def monomial(cls, exp: Iterable[int], coeff: int = 1) -> LaurentPoly:
        exp = tuple(exp)
        return cls(len(exp), {exp: coeff})

    @classmethod
    def zero(cls, nvars: int) -> LaurentPoly:
        return cls(nvars)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(self.nvars, out)

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        return self + (-other)

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(self.nvars, out)

    __rmul__ = __mul__

    def swap(self, i: int) -> LaurentPoly:
        """Exchange variables x_i and x_{i+1} (1-based)."""
        out = {}
        for e, c in self.terms.items():
            e = list(e)
            e[i - 1], e[i] = e[i], e[i - 1]
            out[tuple(e)] = c
        return LaurentPoly(self.nvars, out)

    def evaluate_at_one(self) -> int:
        return sum(self.terms.values())

    def is_zero(self) -> bool:
        return not self.terms

    def is_symmetric(self) -> bool:
        return all(self.swap(i) == self for i in range(1, self.nvars))

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            mono = "*".join(f"x{k}^{a}" if a != 1 else f"x{k}" for k, a in enumerate(e, 1) if a)
            c = self.terms[e]
            parts.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(parts)


def isobaric(f: LaurentPoly, i: int) -> LaurentPoly:
    """pi_i f = (x_i f - x_{i+1} s_i f) / (x_i - x_{i+1}), via the geometric-sum closed form."""
    out: dict[tuple[int, ...], int] = {}
    for e, c in f.terms.items():
        p, q = e[i - 1], e[i]
        base = list(e)
        if p >= q:
            shifts = [(p - t, q + t) for t in range(p - q + 1)]
            sign = 1
        else:
            shifts = [(p + t, q - t) for t in range(1, q - p)]
            sign = -1
        for a, b in shifts:
            base[i - 1], base[i] = a, b
            key = tuple(base)
            out[key] = out.get(key, 0) + sign * c
    return LaurentPoly(f.nvars, out)
