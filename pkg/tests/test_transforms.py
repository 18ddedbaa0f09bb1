import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperdist.corpus import verify
from hyperdist.errors import (
    DuplicateParameter, InvalidSpec, NotIntegerDifference, VanishingPochhammer,
)
from hyperdist.expr import Hyp, Num, hyp_nodes, structurally_equal
from hyperdist.identity import Identity
from hyperdist.numerics import Precision
from hyperdist.params import ParamList
from hyperdist.parse import parse_expr, parse_series
from hyperdist.transforms import (
    DistSpec, annihilation_sum, dist, dist_block, dist_blocks, init, pfd, stir,
)

from transform_cases import dist_spec, init_case, pfd_case, stir_case

P40 = Precision(40)
seeds = st.integers(0, 2 ** 32 - 1)


def P(*xs):
    return ParamList(F(x) for x in xs)


def holds(ident, tol=-25):
    report = verify(ident, P40, tol)
    assert report.passed, (ident.name, report.abs_diff, report.error)
    return report


# ----------------------------------------------------------------- blocks

def test_dist_block_examples():
    assert dist_block(1, 4, 3) == P(1, "5/4", "3/2", "7/4")
    assert dist_block(F(3, 2), 4, 3) == P("9/8", "11/8", "13/8", "15/8")
    assert dist_block(2, 4, 3) == P("5/4", "3/2", "7/4", 2)
    assert dist_block(F(1, 3), 1, 0) == P("1/3")
    assert dist_blocks([1, 1], 2, 0) == P("1/2", 1, "1/2", 1)
    with pytest.raises(InvalidSpec):
        dist_block(1, 3, 3)


def test_dist_example_parameter_lists():
    spec = DistSpec(4, 3, Num(F(1)), P(1, 1, 1), P("3/2", 2))
    ident = dist(spec)
    s = ident.lhs.series
    assert s.upper == P(1, 1, 1, "5/4", "3/2", "7/4")
    assert s.lower == P("9/8", "11/8", "13/8", "15/8", 2)
    raw = dist(spec, raw=True).lhs.series
    assert raw.p == 13 and raw.q == 12
    assert len(hyp_nodes(ident.rhs)) == 4
    for node in hyp_nodes(ident.rhs):
        assert node.series.upper == P(1, 1, 1) and node.series.lower == P("3/2", 2)


def test_dist_example_verifies():
    holds(dist(DistSpec(4, 3, Num(F(1)), P(1, 1, 1), P("3/2", 2))), -15)


def test_dist_with_n_equal_one_is_trivial():
    ident = dist(DistSpec(1, 0, Num(F(1, 3)), P("1/2", "1/3"), P("5/4")))
    assert structurally_equal(ident.lhs, parse_expr("2F1(1/2, 1/3; 5/4; 1/3)"))
    holds(ident, -35)


def test_dist_spec_validation():
    with pytest.raises(InvalidSpec):
        DistSpec(0, 0, Num(F(1, 2)), P(), P())
    with pytest.raises(InvalidSpec):
        DistSpec(3, 3, Num(F(1, 2)), P(), P())
    with pytest.raises(InvalidSpec):
        dist(DistSpec(2, 1, Num(F(0)), P(1), P(2)))
    with pytest.raises(InvalidSpec):
        dist(DistSpec(2, 1, Num(F(1, 2)), P(0), P(2)))
    with pytest.raises(InvalidSpec):
        dist(DistSpec(2, 0, Num(F(3, 2)), P(1), P(2)))


@settings(max_examples=25)
@given(seeds)
def test_random_dist_specs_verify(seed):
    rng = random.Random(seed)
    holds(dist(dist_spec(rng)))


@given(st.integers(1, 12), st.integers(-30, 30), st.integers(0, 11))
def test_root_of_unity_annihilation(n, j, m):
    m %= n
    want = Num(F(n)) if (j - m) % n == 0 else Num(F(0))
    assert annihilation_sum(n, j, m) == want


# --------------------------------------------------------------- rewrites

def test_stir_example():
    # (a)_k / (a-1)_k = 1 + k/(a-1)
    s = parse_series("2F1(5/2, 1/3; 3/2; 1/4)")
    ident = stir(s, 0, 0)
    assert len(hyp_nodes(ident.rhs)) == 2
    holds(ident, -35)
    with pytest.raises(NotIntegerDifference):
        stir(parse_series("2F1(5/2, 1/3; 7/3; 1/4)"), 0, 0)
    with pytest.raises(InvalidSpec):
        stir(parse_series("2F1(5/2, 1/3; 3/2; 1/4)"), 2, 0)


def test_init_example():
    # 2F1(1, 1/2; 2; z) = 2*(1 - sqrt(1-z))/z
    ident = init(parse_series("2F1(1, 1/2; 2; 1/2)"), 0, 0)
    holds(ident, -35)
    assert verify(Identity("x", ident.rhs, parse_expr("4*(1 - 1/sqrt(2))")), P40, -35).passed
    with pytest.raises(InvalidSpec):
        init(parse_series("2F1(2, 1; 2; 1/2)"), 0, 0)
    with pytest.raises(VanishingPochhammer):
        init(parse_series("2F1(1, 1; 2; 1/2)"), 0, 0)


def test_pfd_example():
    s = parse_series("3F2(1/3, 2/3, 1; 4/3, 5/3; -1/2)")
    ident = pfd(s, [(0, 0), (1, 1)])
    assert len(hyp_nodes(ident.rhs)) == 2
    holds(ident, -35)
    with pytest.raises(InvalidSpec):
        pfd(s, [(0, 1)])
    with pytest.raises(DuplicateParameter):
        pfd(parse_series("3F2(1/3, 1/3, 1; 4/3, 4/3; -1/2)"), [(0, 0), (1, 1)])


def test_rewrites_need_concrete_series():
    with pytest.raises(InvalidSpec):
        stir(parse_series("2F1(a+1, 1/3; a; 1/4)"), 0, 0)


@settings(max_examples=25)
@given(seeds)
def test_random_stir_instances(seed):
    rng = random.Random(seed)
    s, i, j = stir_case(rng)
    holds(stir(s, i, j))


@settings(max_examples=25)
@given(seeds)
def test_random_init_instances(seed):
    rng = random.Random(seed)
    s, i, j = init_case(rng)
    holds(init(s, i, j))


@settings(max_examples=25)
@given(seeds)
def test_random_pfd_instances(seed):
    rng = random.Random(seed)
    s, pairs = pfd_case(rng)
    ident = pfd(s, pairs)
    assert all(isinstance(h, Hyp) for h in hyp_nodes(ident.rhs))
    holds(ident)
