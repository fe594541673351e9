import itertools

import pytest

from rectlift.errors import RankMismatchError
from rectlift.roots import (
    PosRoot, RootSubset, highest_root, join, leq, meet, parse_root, positive_roots, root_sum, union_connected,
)
from rectlift.weights import Weight, parse_weight
from rectlift.errors import PreconditionError


def test_join_meet_examples():
    a, b = PosRoot(4, 1, 2), PosRoot(4, 2, 4)
    assert join(a, b) == PosRoot(4, 1, 4)
    assert meet(a, b) == PosRoot(4, 2, 2)
    assert meet(PosRoot(4, 1, 1), PosRoot(4, 3, 4)) is None
    assert join(PosRoot(4, 1, 1), PosRoot(4, 3, 4)) == PosRoot(4, 1, 4)


@pytest.mark.parametrize("rank", range(1, 7))
def test_join_is_least_upper_bound(rank):
    roots = positive_roots(rank)
    for a, b in itertools.product(roots, repeat=2):
        uppers = [c for c in roots if leq(a, c) and leq(b, c)]
        j = join(a, b)
        assert j in uppers and all(leq(j, c) for c in uppers)
        lowers = [c for c in roots if leq(c, a) and leq(c, b)]
        m = meet(a, b)
        if m is None:
            assert not lowers
        else:
            assert m in lowers and all(leq(c, m) for c in lowers)


@pytest.mark.parametrize("rank", range(1, 6))
def test_lattice_laws(rank):
    roots = positive_roots(rank)
    for a, b, c in itertools.product(roots, repeat=3):
        assert join(a, join(b, c)) == join(join(a, b), c)
    for a, b in itertools.product(roots, repeat=2):
        assert join(a, b) == join(b, a)
        assert meet(a, b) == meet(b, a)
        assert join(a, a) == a and meet(a, a) == a
        if union_connected(a, b):
            m = meet(a, b)
            # height identity for connected unions
            assert join(a, b).height + (m.height if m else 0) == a.height + b.height


def test_rank_mismatch():
    with pytest.raises(RankMismatchError):
        join(PosRoot(3, 1, 2), PosRoot(4, 1, 2))


def test_root_sum():
    assert root_sum(PosRoot(4, 1, 2), PosRoot(4, 3, 4)) == PosRoot(4, 1, 4)
    assert root_sum(PosRoot(4, 1, 2), PosRoot(4, 2, 4)) is None
    assert root_sum(PosRoot(4, 1, 1), PosRoot(4, 3, 3)) is None


def test_parse_and_format():
    assert parse_root("a[2,4]", 4) == PosRoot(4, 2, 4)
    assert parse_root("a[3]", 4) == PosRoot(4, 3, 3)
    assert str(PosRoot(4, 2, 4)) == "a[2,4]"
    with pytest.raises(ValueError):
        parse_root("b[1,2]", 4)
    with pytest.raises(ValueError):
        parse_root("a[3,5]", 4)
    S = RootSubset.parse(3, ["a[2,3]", "a[1]"])
    assert [str(r) for r in S] == ["a[1,1]", "a[2,3]"]
    assert highest_root(3) in RootSubset.full(3)


def test_weights():
    w = parse_weight("1,0,2")
    assert w.pairing(PosRoot(3, 1, 3)) == 3
    assert w.epsilon() == (3, 2, 2, 0)
    assert Weight.from_epsilon(w.epsilon()) == w
    assert Weight.fundamental(3, 0) == Weight.zero(3) == Weight.fundamental(3, 4)
    assert not Weight([1, -1]).is_dominant()
    with pytest.raises(PreconditionError):
        parse_weight("1,x")
    with pytest.raises(PreconditionError):
        parse_weight("1,0", 3)
