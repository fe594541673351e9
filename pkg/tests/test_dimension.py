import itertools
import random

import pytest
import sympy

from rectlift.dimension import (
    FFLVFace, apply_word, demazure_character, demazure_dim, demazure_face, dims_agree, dyck_paths,
    polytope_count, polytope_points, weyl_dimension,
)
from rectlift.errors import PreconditionError, RankMismatchError
from rectlift.laurent import LaurentPoly, isobaric
from rectlift.perm import (
    Permutation, all_permutations, from_word, inversion_set, is_triangular, random_reduced_word,
)
from rectlift.roots import RootSubset
from rectlift.weights import Weight

P = Permutation


def to_sympy(f: LaurentPoly, xs):
    return sum(c * sympy.prod([x ** e for x, e in zip(xs, exp)]) for exp, c in f.terms.items())


def test_isobaric_matches_division():
    xs = sympy.symbols("x1:5")
    rng = random.Random(1)
    for _ in range(40):
        exp = tuple(rng.randint(-3, 3) for _ in range(4))
        f = LaurentPoly.monomial(exp) + LaurentPoly.monomial(tuple(rng.randint(-2, 2) for _ in range(4)), 3)
        i = rng.randint(1, 3)
        g = to_sympy(f, xs)
        swapped = g.subs({xs[i - 1]: xs[i], xs[i]: xs[i - 1]}, simultaneous=True)
        expected = sympy.cancel((xs[i - 1] * g - xs[i] * swapped) / (xs[i - 1] - xs[i]))
        assert sympy.simplify(to_sympy(isobaric(f, i), xs) - expected) == 0


def test_isobaric_closed_form_cases():
    assert isobaric(LaurentPoly.monomial((2, 0)), 1) == LaurentPoly(2, {(2, 0): 1, (1, 1): 1, (0, 2): 1})
    assert isobaric(LaurentPoly.monomial((0, 1)), 1).is_zero()
    assert isobaric(LaurentPoly.monomial((0, 3)), 1) == LaurentPoly(2, {(1, 2): -1, (2, 1): -1})


def test_isobaric_idempotent():
    rng = random.Random(4)
    for _ in range(30):
        f = LaurentPoly.monomial(tuple(rng.randint(-2, 3) for _ in range(3)))
        for i in (1, 2):
            once = isobaric(f, i)
            assert isobaric(once, i) == once


def test_laurent_arithmetic():
    x = LaurentPoly.monomial((1, 0))
    y = LaurentPoly.monomial((0, 1))
    assert (x + y) * (x - y) == x * x - y * y
    assert (x - x).is_zero()
    assert (2 * x).evaluate_at_one() == 2
    assert (x + y).is_symmetric() and not x.is_symmetric()
    with pytest.raises(ValueError):
        LaurentPoly(2, {(1,): 1})


@pytest.mark.parametrize("rank", range(1, 5))
def test_longest_element_gives_weyl_dimension(rank):
    w0 = Permutation.longest(rank + 1)
    for c in itertools.product(range(3), repeat=rank):
        lam = Weight(c)
        ch = demazure_character(w0, lam)
        assert ch.is_symmetric()
        assert ch.evaluate_at_one() == weyl_dimension(lam)


def test_weyl_formula_small_values():
    assert weyl_dimension(Weight([1, 0])) == 3
    assert weyl_dimension(Weight([1, 1])) == 8
    assert weyl_dimension(Weight([1, 1, 1])) == 64


def test_character_independent_of_reduced_word():
    rng = random.Random(9)
    for p in all_permutations(4):
        lam = Weight([1, 2, 1])
        base = demazure_character(p, lam)
        for _ in range(20):
            assert demazure_character(p, lam, random_reduced_word(p, rng)) == base


def minuscule_dim(tau, k):
    # weights of the k-th wedge power in the Demazure module are the k-subsets
    # below tau({1..k}) in the componentwise (Gale) order
    top = sorted(tau(x) for x in range(1, k + 1))
    return sum(
        1 for s in itertools.combinations(range(1, tau.degree + 1), k)
        if all(a <= b for a, b in zip(s, top))
    )


def test_minuscule_oracle():
    for p in all_permutations(5):
        for k in range(1, 5):
            assert demazure_dim(p, Weight.fundamental(4, k)) == minuscule_dim(p, k)
    assert demazure_dim(P([4, 3, 2, 5, 1]), Weight([1, 0, 0, 0])) == 4
    assert demazure_dim(P([1, 5, 2, 6, 3, 7, 8, 4]), Weight.fundamental(7, 2)) == 4


def test_dimension_input_errors():
    with pytest.raises(RankMismatchError):
        demazure_dim(P([2, 1, 3]), Weight([1]))
    with pytest.raises(PreconditionError):
        demazure_dim(P([2, 1, 3]), Weight([1, -1]))


def test_dyck_paths_count():
    # paths from a[i,i] to a[j,j] are counted by Catalan numbers
    catalan = [1, 1, 2, 5, 14, 42]
    for d in range(5):
        assert len(dyck_paths(6, 1, 1 + d)) == catalan[d]


def test_polytope_examples():
    assert polytope_count(demazure_face(P([4, 3, 2, 5, 1]), Weight([1, 0, 0, 0]))) == 4
    assert polytope_count(FFLVFace(3, RootSubset(3, frozenset()), Weight([2, 1, 0]))) == 1
    assert polytope_count(FFLVFace(2, RootSubset.full(2), Weight([1, 1]))) == 8
    with pytest.raises(PreconditionError):
        list(polytope_points(FFLVFace(3, RootSubset.of(3, [(1, 2), (2, 3)]), Weight([1, 1, 1]))))


@pytest.mark.parametrize("n", range(2, 6))
def test_polytope_equals_demazure_for_triangular(n):
    coeff_range = range(3) if n <= 4 else range(2)
    for p in all_permutations(n):
        if not is_triangular(p):
            continue
        for c in itertools.product(coeff_range, repeat=n - 1):
            lam = Weight(c)
            assert polytope_count(demazure_face(p, lam)) == demazure_dim(p, lam)


def test_polytope_minkowski_property():
    # every point for lambda+nu splits as a point for lambda plus a point for nu
    p = P([4, 3, 2, 5, 1])
    lam, nu = Weight([1, 0, 1, 0]), Weight([0, 1, 0, 1])
    pts_l = set(polytope_points(demazure_face(p, lam)))
    pts_n = set(polytope_points(demazure_face(p, nu)))
    sums = {tuple(a + b for a, b in zip(x, y)) for x in pts_l for y in pts_n}
    assert sums == set(polytope_points(demazure_face(p, lam + nu)))


def test_dims_agree():
    report = dims_agree(Permutation.longest(4), Weight([1, 1, 1]))
    assert report.demazure == report.polytope == report.lifted == 64
    assert report.equal
    report = dims_agree(P([2, 4, 3, 1]), Weight([1, 0, 1]))
    assert report.lifted is None and report.equal
    with pytest.raises(PreconditionError):
        dims_agree(P([2, 4, 1, 3]), Weight([1, 0, 0]))


def test_apply_word_order():
    f = LaurentPoly.monomial((1, 0, 0))
    assert apply_word(f, [2, 1]) == isobaric(isobaric(f, 1), 2)
    assert demazure_character(from_word(2, [2, 1]), Weight([1, 0]), [2, 1]).evaluate_at_one() == 3
