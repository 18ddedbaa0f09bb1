import random
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperdist.corpus import verify
from hyperdist.errors import HyperdistError, PoleInRHS, SideConditionViolated
from hyperdist.expr import Hyp, Num, canonical, hyp_nodes
from hyperdist.identity import Identity
from hyperdist.numerics import Precision, eval_expression
from hyperdist.params import ParamList
from hyperdist.parse import parse_expr, parse_series
from hyperdist.series import Convergence, convergence_class
from hyperdist.theorems import (
    TheoremId, apply_theorem, clausen_product_identity, match_closed_form, sum_dist_rhs,
    templates, templates_for,
)
from hyperdist.transforms import DistSpec, dist

P40 = Precision(40)
BOUNDARY = (Convergence.BOUNDARY_ABS, Convergence.BOUNDARY_COND)


def draw(rng) -> F:
    q = rng.randint(1, 24)
    return F(rng.randint(-3 * q, 3 * q), q)


def random_instance(tp, rng) -> Identity:
    """A template instance whose series converges comfortably."""
    while True:
        b = {}
        for name in tp.symbols:
            b[name] = Num(F(rng.randint(-15, 15), 16)) if name == tp.argument_symbol else draw(rng)
        try:
            ident = apply_theorem(tp.theorem, b, tp.variant)
        except HyperdistError:
            continue
        s = ident.lhs.series
        if convergence_class(s) in BOUNDARY and s.excess() <= F(1, 4):
            continue
        return ident


def agree(a, b, tol=1e-30) -> bool:
    x = eval_expression(a, {}, P40)
    y = eval_expression(b, {}, P40)
    return abs(x.mid - y.mid) <= tol * max(1.0, abs(y.mid))


# ------------------------------------------------------------------ apply

def test_gauss_example():
    ident = apply_theorem(TheoremId.GAUSS1, {"a": F(1, 2), "b": F(1, 2), "c": 2})
    assert ident.lhs == Hyp(parse_series("2F1(1/2, 1/2; 2; 1)"))
    assert agree(ident.rhs, parse_expr("gamma(2)*gamma(1)/gamma(3/2)^2"))
    assert verify(ident, P40, -30).passed


def test_dougall_l2_example():
    ident = apply_theorem("DougallL2", {"a": F(1, 2), "b": F(1, 4), "c": F(1, 4)})
    assert canonical(ident.lhs.series.z) == Num(F(-1))
    assert verify(ident, P40, -30).passed


def test_k2_example():
    ident = apply_theorem("K2", {"a": F(1, 4)})
    want = parse_expr("sqrt(pi)*2^(1/4)*(sqrt(2)-1)^(1/4)*gamma(3/4)/(gamma(1/2)*gamma(3/4))")
    assert agree(ident.rhs, want)
    assert verify(ident, P40, -30).passed


def test_l4_right_side_keeps_a_3f2():
    ident = apply_theorem("DougallL4", {"a": F(1, 2), "b": F(1, 3), "c": F(1, 4), "d": F(1, 5), "e": F(1, 6)})
    nodes = hyp_nodes(ident.rhs)
    assert len(nodes) == 1 and nodes[0].series.p == 3 and nodes[0].series.q == 2
    assert verify(ident, P40, -25).passed


def test_k1_has_two_variants():
    assert sorted(tp.variant for tp in templates_for("K1")) == ["+", "-"]
    plus = apply_theorem("K1", {"a": F(1, 5)}, "+")
    minus = apply_theorem("K1", {"a": F(1, 5)}, "-")
    x = eval_expression(plus.rhs, {}, P40).mid
    y = eval_expression(minus.rhs, {}, P40).mid
    assert abs(x - y.conjugate()) < 1e-30


def test_apply_errors():
    with pytest.raises(SideConditionViolated):
        apply_theorem("Gauss1", {"a": 1, "b": 1, "c": 2})
    with pytest.raises(SideConditionViolated):
        apply_theorem("K3", {"a": F(3, 4)})
    with pytest.raises(SideConditionViolated):
        apply_theorem("Gauss1", {"a": 1, "b": 1})
    with pytest.raises(PoleInRHS):
        apply_theorem("KummerMinus1", {"a": -2, "b": F(1, 2)})


@pytest.mark.parametrize("tp", templates(), ids=lambda tp: tp.label)
def test_template_instances_verify(tp):
    rng = random.Random(tp.label)
    for _ in range(50):
        ident = random_instance(tp, rng)
        report = verify(ident, P40, -20)
        assert report.passed, (str(ident), report.abs_diff, report.error)


# ------------------------------------------------------------------ match

def test_match_kummer_minus_one():
    got = match_closed_form(parse_series("2F1(1/2, 1/8; 11/8; -1)"))
    assert [m.theorem for m in got] == [TheoremId.KUMMER_MINUS1]
    assert got[0].binding_text() == {"a": "1/2", "b": "1/8"}
    assert verify(got[0].identity, P40, -30).passed


def test_match_dougall_l3():
    s = parse_series("5F4(3/2, 1, 1/4, 1/4, 1/4; 1/2, 7/4, 7/4, 7/4; 1)")
    got = match_closed_form(s)
    assert TheoremId.DOUGALL_L3 in [m.theorem for m in got]


def test_match_rejects_divergent_gauss():
    assert match_closed_form(parse_series("2F1(1, 1; 2; 1)")) == []


def test_match_needs_concrete_parameters():
    assert match_closed_form(parse_series("2F1(a, b; c; 1)")) == []


def test_match_is_order_independent():
    a = match_closed_form(parse_series("3F2(1/3, 1/4, 1/5; 13/12, 17/15; 1)"))
    b = match_closed_form(parse_series("3F2(1/5, 1/3, 1/4; 17/15, 13/12; 1)"))
    assert {m.theorem for m in a} == {m.theorem for m in b} == {TheoremId.DIXON}


@pytest.mark.parametrize("tp", templates(), ids=lambda tp: tp.label)
def test_match_round_trips_apply(tp):
    rng = random.Random("match:" + tp.label)
    for _ in range(5):
        ident = random_instance(tp, rng)
        found = [m for m in match_closed_form(ident.lhs.series)
                 if m.theorem == tp.theorem and m.variant == tp.variant]
        assert found, str(ident)
        for m in found:
            assert m.identity.lhs.series == ident.lhs.series
        assert any(agree(m.closed_form, ident.rhs, 1e-25) for m in found)


# ------------------------------------------------------------- properties

@given(st.integers(0, 2 ** 32 - 1))
def test_l1_is_the_limit_of_l3(seed):
    rng = random.Random(seed)
    while True:
        a, b, c = draw(rng), draw(rng), draw(rng)
        try:
            l3 = apply_theorem("DougallL3", {"a": a, "b": b, "c": c, "d": (a + 1) / 2})
            l1 = apply_theorem("DougallL1", {"a": a, "b": b, "c": c})
        except HyperdistError:
            continue
        break
    assert agree(l3.rhs, l1.rhs)


@given(st.fractions(F(-3, 2), F(3, 2), max_denominator=24),
       st.fractions(F(-3, 2), F(3, 2), max_denominator=24),
       st.fractions(F(-1, 2), F(1, 2), max_denominator=24))
def test_clausen_product(a, b, z):
    if b.denominator == 1:
        return
    assert verify(clausen_product_identity(a, b, z), P40, -30).passed


# --------------------------------------------------------------- sum_dist

def test_sum_dist_rhs_on_the_dist_example():
    ident = dist(DistSpec(4, 3, Num(F(1)), ParamList([1, 1, 1]), ParamList([F(3, 2), 2])))
    summed = sum_dist_rhs(ident)
    assert not hyp_nodes(summed.rhs)
    fired = [t["theorem"] for t in summed.notes["theorems"]]
    # the z = 1 node is also a Watson instance
    assert len(fired) == 4 and set(fired) <= {"ArcSinSquare", "Watson"}
    want = parse_expr("35/64*(pi^2 + 4*asin(root(8, 1))^2 - 4*asinh(1)^2 - 4*asinh(root(8, 1))^2)")
    assert verify(Identity("x", summed.rhs, want), P40, -30).passed
    assert verify(summed, P40, -15).passed


def test_sum_dist_rhs_over_dougall_pair():
    a, b, c = F(1, 2), F(1, 3), F(1, 5)
    A = ParamList([a, a / 2 + 1, b, c])
    B = ParamList([a / 2, a - b + 1, a - c + 1])
    summed = sum_dist_rhs(dist(DistSpec(2, 0, Num(F(1)), A, B)))
    assert not hyp_nodes(summed.rhs)
    assert sorted(t["theorem"] for t in summed.notes["theorems"]) == ["DougallL1", "DougallL2"]
    l1 = apply_theorem("DougallL1", {"a": a, "b": b, "c": c}).rhs
    l2 = apply_theorem("DougallL2", {"a": a, "b": b, "c": c}).rhs
    half = eval_expression(parse_expr("1/2"), {}, P40).mid
    want = half * (eval_expression(l1, {}, P40).mid + eval_expression(l2, {}, P40).mid)
    assert abs(eval_expression(summed.rhs, {}, P40).mid - want) < 1e-30
    assert verify(summed, P40, -20).passed


def test_sum_dist_rhs_without_series_is_unchanged():
    ident = Identity("plain", parse_expr("gamma(1/2)^2"), parse_expr("pi"))
    assert sum_dist_rhs(ident) is ident
