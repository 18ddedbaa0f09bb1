from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperdist.errors import ConstraintViolated, InvalidSeries, ParseError, ValidationError
from hyperdist.expr import (
    Hyp, Num, Sym, canonical, from_json, structurally_equal, to_json, to_text,
)
from hyperdist.identity import ConstraintPredicate, Identity, gt, not_pole
from hyperdist.numerics import Precision
from hyperdist.params import Affine, ParamList, format_param, parse_param
from hyperdist.parse import parse_affine, parse_expr, parse_series
from hyperdist.series import (
    Convergence, HypSeries, cancel_parameters, convergence_class, pochhammer, series_term,
)
from hyperdist.serieseval import eval_pfq

rationals = st.fractions(min_value=-6, max_value=6, max_denominator=24)


def P(*xs):
    return ParamList(F(x) for x in xs)


# ---------------------------------------------------------------- pochhammer

def test_pochhammer_examples():
    assert pochhammer(F(1, 2), 3) == F(15, 8)
    assert pochhammer(F(7, 3), 0) == 1
    assert pochhammer(F(-2), 4) == 0


@given(rationals, st.integers(0, 50), st.integers(0, 50))
def test_pochhammer_splits(a, j, k):
    assert pochhammer(a, j + k) == pochhammer(a, j) * pochhammer(a + j, k)


# -------------------------------------------------------------- param lists

def test_param_list_is_a_multiset():
    assert P("1/2", 1, 1) == P(1, "1/2", 1)
    assert P(1, 1) != P(1)
    assert hash(P(1, 2)) == hash(P(2, 1))


def test_parse_param_forms():
    assert parse_param("5/4") == F(5, 4)
    assert parse_param("-1/24") == F(-1, 24)
    a = parse_param("a/2+1")
    assert isinstance(a, Affine) and a.subs({"a": F(1)}) == F(3, 2)
    assert format_param(a) == "a/2+1"


def test_lower_nonpositive_integer_rejected():
    with pytest.raises(InvalidSeries):
        HypSeries(P(1), P(0), Num(F(1, 2)))
    with pytest.raises(InvalidSeries):
        HypSeries(P(1), P(-3), Num(F(1, 2)))


def test_terminating_flag():
    s = parse_series("2F1(-3, 1/2; 3/2; 1)")
    assert s.terminating and s.degree == 3
    assert not parse_series("2F1(1, 1/2; 3/2; 1/2)").terminating


# ------------------------------------------------------------- cancellation

def test_cancel_parameters_dist_example():
    upper = P(1, 1, 1, 1, "5/4", "5/4", "5/4", "3/2", "3/2", "3/2", "7/4", "7/4", "7/4")
    lower = P(1, "5/4", "5/4", "3/2", "3/2", "7/4", "7/4", 2, "9/8", "11/8", "13/8", "15/8")
    s = cancel_parameters(HypSeries(upper, lower, Num(F(1))))
    assert s.upper == P(1, 1, 1, "5/4", "3/2", "7/4")
    assert s.lower == P("9/8", "11/8", "13/8", "15/8", 2)


def test_cancel_parameters_full_and_disjoint():
    s = cancel_parameters(HypSeries(P("1/3"), P("1/3"), Num(F(1, 2))))
    assert len(s.upper) == 0 and len(s.lower) == 0
    t = HypSeries(P(1, 2), P(3), Num(F(1, 2)))
    assert cancel_parameters(t) == t


params_lists = st.lists(st.fractions(min_value=F(1, 24), max_value=3, max_denominator=24),
                        min_size=1, max_size=4)


@given(params_lists, params_lists, st.lists(st.fractions(F(1, 8), 3, max_denominator=8), max_size=2))
def test_cancel_parameters_idempotent_and_value_preserving(upper, lower, shared):
    s = HypSeries(ParamList(upper + shared), ParamList(lower + shared), Num(F(1, 3)))
    c = cancel_parameters(s)
    assert cancel_parameters(c) == c
    assert convergence_class(c) == convergence_class(s) or s.p > s.q + 1
    if convergence_class(s) == Convergence.INSIDE_DISK:
        prec = Precision(20)
        a, b = eval_pfq(s, prec), eval_pfq(c, prec)
        assert abs(a.mid - b.mid) <= 1e-18 * max(1, abs(a.mid))


# -------------------------------------------------------------- convergence

@pytest.mark.parametrize("text, cls", [
    ("2F1(1/2, 1/2; 2; 1)", Convergence.BOUNDARY_ABS),
    ("6F5(1, 1, 1, 5/4, 3/2, 7/4; 9/8, 11/8, 13/8, 15/8, 2; 1)", Convergence.BOUNDARY_ABS),
    ("3F2(1, 1, 1; 2, 2; 1/2)", Convergence.INSIDE_DISK),
    ("2F1(1/2, 1; 1; -1)", Convergence.BOUNDARY_COND),
    ("2F1(1, 1; 1; -1)", Convergence.DIVERGENT),
    ("2F1(1, 1; 2; 1)", Convergence.DIVERGENT),
    ("3F1(1, 1, 1; 2; 1/2)", Convergence.DIVERGENT),
    ("3F1(-2, 1, 1; 2; 5)", Convergence.TERMINATING),
    ("2F1(1, 1; 2; 2)", Convergence.DIVERGENT),
])
def test_convergence_class(text, cls):
    assert convergence_class(parse_series(text)) == cls


@given(params_lists, params_lists, st.randoms(use_true_random=False))
def test_convergence_class_permutation_invariant(upper, lower, rnd):
    s = HypSeries(ParamList(upper + [F(1)]), ParamList(lower), Num(F(1)))
    u2, l2 = list(s.upper), list(s.lower)
    rnd.shuffle(u2)
    rnd.shuffle(l2)
    t = HypSeries(ParamList(u2), ParamList(l2), Num(F(1)))
    assert convergence_class(s) == convergence_class(t)


# -------------------------------------------------------------- series_term

def test_series_term_examples():
    z = Sym("z")
    assert structurally_equal(series_term(parse_series("2F1(1, 1; 2; z)"), 2), z ** 2 / 3)
    assert structurally_equal(series_term(parse_series("3F2(1/2, 1/2, 1/2; 3/2, 3/2; z)"), 1), z / 18)
    assert series_term(parse_series("3F2(1/2, 1/2, 1/2; 3/2, 3/2; z)"), 0) == Num(F(1))


# ------------------------------------------------------------- expressions

EXPRESSIONS = [
    "35/64*(pi^2 + 4*asin(root(8, 1))^2 - 4*asinh(1)^2)",
    "gamma(1/8)*gamma(3/8)/(2^(11/4)*sqrt(pi))",
    "Li2(1/2) - Li3(3-2*sqrt(2))*log(2) + Li4(1/2) + zeta(3)",
    "K(1/2+I/2)*E(1/2-I/2) + catalan",
    "im(Li2(3/4-I*sqrt(7)/4)) + re(polylog(3, 1/3))",
    "3F2(1/2, 1/2, 1/2; 3/2, 3/2; -z)*sqrt(z) - beta(s, t)",
    "0F2(/; 1/3, 2/3; 1/27) + 1F0(1/2; ; 1/2)",
    "(-1)^(5/6) + csc(pi*a) + sec(x) + cot(x) + acot(sqrt(7)) + acos(1/3)",
]


@pytest.mark.parametrize("text", EXPRESSIONS)
def test_expression_json_round_trip(text):
    e = parse_expr(text)
    assert from_json(to_json(e)) == e


@pytest.mark.parametrize("text", EXPRESSIONS)
def test_expression_text_round_trip(text):
    e = parse_expr(text)
    assert structurally_equal(parse_expr(to_text(e)), e)


@given(rationals, rationals, rationals)
def test_canonical_equality_is_an_equivalence(a, b, c):
    x = Sym("x")
    e1 = Num(a) * x + Num(b) + Num(c) * x
    e2 = Num(b) + x * Num(a + c)
    e3 = Num(c) * x + (Num(a) * x + Num(b))
    assert structurally_equal(e1, e1)
    assert structurally_equal(e1, e2) == structurally_equal(e2, e1)
    if structurally_equal(e1, e2) and structurally_equal(e2, e3):
        assert structurally_equal(e1, e3)


def test_canonical_folds_rationals():
    assert canonical(parse_expr("2 + 3*4 - 1/2")) == Num(F(27, 2))


@pytest.mark.parametrize("bad", ["", "2F1(1, 2; 3)", "gamma(", "foo(1)", "1 +* 2", "Li5(1/2)"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse_expr(bad)


def test_parse_error_has_position():
    with pytest.raises(ParseError) as exc:
        parse_expr("1 + * 2")
    assert "4" in str(exc.value) or "col" in str(exc.value)


def test_hyp_inside_hyp_parameters_rejected():
    with pytest.raises(ParseError):
        parse_expr("2F1(2F1(1,1;2;1/2), 1; 2; 1/2)")


# -------------------------------------------------------------- identities

def test_constraint_relations():
    a = parse_affine("a")
    b = {"a": F(-2)}
    assert not gt(a).holds(b)
    assert ConstraintPredicate(a, ">=", F(-2)).holds(b)
    assert not ConstraintPredicate(a, "!=", F(-2)).holds(b)
    assert ConstraintPredicate(a, "in_Z").holds(b)
    assert not not_pole(a).holds(b)
    assert not_pole(a).holds({"a": F(1, 2)})


def test_constraint_json_round_trip():
    c = ConstraintPredicate(parse_affine("a-2*b-2*c+1"), ">", F(1, 4))
    assert ConstraintPredicate.from_json(c.to_json()) == c


def test_identity_free_symbols_enforced():
    with pytest.raises(ValidationError):
        Identity("bad", parse_expr("a"), parse_expr("1"), ())


def test_identity_instantiate():
    ident = Identity("K3", parse_expr("3F2(1/2, 1/2-a, a+1/2; 1-a, a+1; 1)"),
                     parse_expr("pi^2*a*csc(pi*a)/(gamma(3/4)^2*gamma(3/4-a)*gamma(a+3/4))"),
                     ("a",), (gt(parse_affine("a")), gt(parse_affine("1/2-a"))))
    got = ident.instantiate({"a": F(1, 8)})
    assert got.is_concrete
    lhs = got.lhs
    assert isinstance(lhs, Hyp)
    assert lhs.series.upper == P("1/2", "3/8", "5/8") and lhs.series.lower == P("7/8", "9/8")
    with pytest.raises(ConstraintViolated):
        ident.instantiate({"a": F(3, 4)})


def test_identity_json_round_trip():
    ident = Identity("x", parse_expr("2F1(a, 1; 2; 1/2)"), parse_expr("gamma(a)"), ("a",),
                     (gt(parse_affine("a")),), "test")
    back = Identity.from_json(ident.to_json())
    assert back == ident
