import json
from dataclasses import replace as dc_replace
from fractions import Fraction as F

import pytest

from hyperdist.corpus import (
    ACTIVE, DISPUTED, FIXED, PARAMETRIC, CorpusEntry, default_corpus_path, dump_corpus,
    instantiate, load_corpus, parse_corpus, run_all, sample_bindings, select, verify, verify_entry,
)
from hyperdist.errors import ConstraintViolated, ParseError, ValidationError
from hyperdist.expr import Hyp, Num, replace
from hyperdist.identity import Identity
from hyperdist.numerics import Precision
from hyperdist.parse import parse_expr, parse_series

P40 = Precision(40)


@pytest.fixture(scope="module")
def corpus():
    return load_corpus()


@pytest.fixture(scope="module")
def by_name(corpus):
    return {e.name: e for e in corpus}


def fixed_entries(corpus):
    return [e for e in corpus if e.verify_mode == FIXED]


# ------------------------------------------------------------------ loading

def test_shipped_corpus_size(corpus):
    assert len(corpus) >= 60
    props = [e for e in corpus if e.name[:1] == "P" and e.name[1:].isdigit()]
    assert len(props) == 17 and all(e.verify_mode == PARAMETRIC for e in props)


def test_every_entry_is_active(corpus):
    assert all(e.status == ACTIVE for e in corpus)


def test_empty_file_is_a_parse_error(tmp_path):
    p = tmp_path / "empty.json"
    p.write_text("")
    with pytest.raises(ParseError):
        load_corpus(p)
    with pytest.raises(ParseError):
        parse_corpus("{not json")


def test_lower_parameter_zero_in_json_is_rejected():
    entry = CorpusEntry(Identity("zero-lower", Hyp(parse_series("2F1(1, 1; 3; 1/2)")), Num(F(1))))
    d = entry.to_json()
    text = json.dumps({"schema": 1, "entries": [d]}).replace('"3"', '"0"')
    with pytest.raises(ValidationError) as exc:
        parse_corpus(text)
    assert "zero-lower" in str(exc.value)


def test_wrong_schema_and_duplicates():
    with pytest.raises(ParseError):
        parse_corpus(json.dumps({"schema": 2, "entries": []}))
    e = CorpusEntry(Identity("twice", parse_expr("1"), parse_expr("1"))).to_json()
    with pytest.raises(ValidationError):
        parse_corpus(json.dumps({"schema": 1, "entries": [e, e]}))


def test_entry_invariants():
    with pytest.raises(ValidationError):
        CorpusEntry(Identity("p", parse_expr("a"), parse_expr("a"), ("a",)), verify_mode=FIXED).validate()
    with pytest.raises(ValidationError):
        CorpusEntry(Identity("f", parse_expr("1"), parse_expr("1")), verify_mode=PARAMETRIC,
                    samples=3).validate()


def test_round_trip_is_byte_identical():
    text = default_corpus_path().read_text()
    assert dump_corpus(parse_corpus(text)) == text


def test_environment_override(tmp_path, monkeypatch, by_name):
    p = tmp_path / "one.json"
    p.write_text(dump_corpus([by_name["K-singular-value"]]))
    monkeypatch.setenv("HYPERDIST_CORPUS", str(p))
    assert [e.name for e in load_corpus()] == ["K-singular-value"]


# ------------------------------------------------------------ instantiate

def test_instantiate_p11_first_example(by_name):
    ident = instantiate(by_name["P11"], {"a": F(1, 4), "b": F(1, 4), "c": F(1, 4)})
    assert ident.is_concrete
    want = parse_series("6F5(1/4, 1/4, 1/4, 3/4, 3/4, 9/8; 1/8, 1/2, 1/2, 1, 1; -1)")
    assert ident.lhs.series.upper == want.upper and ident.lhs.series.lower == want.lower
    closed = parse_expr("2^(1/4)*(sqrt(2)+1)*gamma(3/8)^2/(pi^(3/2)*gamma(1/4))")
    assert verify(Identity("P11-check", ident.rhs, closed), P40, -30).passed
    assert verify(ident, P40, -15).passed


def test_instantiate_k3(by_name):
    ident = instantiate(by_name["K3"], {"a": F(1, 8)})
    assert ident.lhs.series == parse_series("3F2(1/2, 3/8, 5/8; 7/8, 9/8; 1)")
    assert verify(ident, P40, -20).passed


def test_instantiate_violation(by_name):
    with pytest.raises(ConstraintViolated):
        instantiate(by_name["K3"], {"a": F(3, 4)})
    with pytest.raises(ConstraintViolated):
        instantiate(by_name["K-singular-value"], {"a": F(1)})


def test_verify_needs_concrete_identity(by_name):
    with pytest.raises(ConstraintViolated):
        verify(by_name["K3"].identity, P40)


# ---------------------------------------------------------------- sampling

def test_sampling_is_deterministic(by_name):
    e = by_name["L3"]
    a = sample_bindings(e, seed=7)
    assert a == sample_bindings(e, seed=7)
    assert a != sample_bindings(e, seed=8)
    assert len(a) == e.samples == 100
    for b in a:
        assert all(v.denominator <= 24 and abs(v) <= 3 for v in b.values())
        assert not e.identity.check(b)


def test_unsatisfiable_constraints_are_reported():
    ident = Identity("never", parse_expr("a"), parse_expr("a"), ("a",),
                     (parse_constraint("a", ">", 5),))
    with pytest.raises(ValidationError):
        sample_bindings(CorpusEntry(ident, verify_mode=PARAMETRIC, samples=3), seed=0)


def parse_constraint(form, rel, bound):
    from hyperdist.identity import ConstraintPredicate
    from hyperdist.parse import parse_affine

    return ConstraintPredicate(parse_affine(form), rel, F(bound))


# ------------------------------------------------------------ verification

def test_fixed_entries_pass_at_two_precisions(corpus):
    for e in fixed_entries(corpus):
        lo = verify_entry(e, None, Precision(40))
        hi = verify_entry(e, None, Precision(60))
        assert lo.passed and hi.passed, (e.name, lo.abs_diff, hi.abs_diff, lo.error, hi.error)


def test_12F11_forms_agree(by_name):
    reports = [verify_entry(by_name[n], None, P40)
               for n in ("12F11-gamma-form", "12F11-algebraic-form", "12F11-forms-agree")]
    assert all(r.passed and r.abs_diff <= 1e-15 for r in reports)


def _flip_first_literal(e):
    done = []

    def flip(node):
        if not done and isinstance(node, Num) and node.value:
            done.append(node)
            return Num(-node.value)
        return None

    return replace(e, flip)


MUTATED = [
    "dist-asin-squared-6F5-inverse-trig", "12F11-gamma-form", "K-singular-value",
    "P1-example-quarter", "P2-example-7F6", "P3-example-16ths", "7F6-catalan",
    "6F5-central-binomial-1/4", "4F3-at-729/1024", "6F5-tetralog",
]


def test_even_function_argument_flip_is_invisible(by_name):
    # the 0F23 closed form starts with cos(24), so its first literal is not a useful mutation
    e = by_name["0F23-bessel"]
    bad = dc_replace(e.identity, rhs=_flip_first_literal(e.identity.rhs))
    assert verify(bad, P40, e.expected_tolerance).passed


@pytest.mark.parametrize("name", MUTATED)
def test_mutated_right_side_fails(by_name, name):
    e = by_name[name]
    bad = dc_replace(e.identity, rhs=_flip_first_literal(e.identity.rhs))
    assert bad.rhs != e.identity.rhs
    report = verify(bad, P40, e.expected_tolerance)
    assert not report.passed


def test_failures_report_the_binding(by_name):
    e = by_name["K3"]
    wrong = dc_replace(e, identity=dc_replace(e.identity, rhs=parse_expr("2*a")))
    b = sample_bindings(wrong, 1, seed=0)[0]
    report = verify_entry(wrong, b, P40)
    assert not report.passed and report.binding == {"a": str(b["a"]).replace(" ", "")}


def test_evaluation_errors_do_not_escape():
    e = CorpusEntry(Identity("log-zero", parse_expr("log(0)"), parse_expr("1")))
    report = verify_entry(e, None, P40)
    assert not report.passed and "lhs" in report.error


# ----------------------------------------------------------------- run_all

def test_elliptic_selection(corpus):
    names = {e.name for e in select(corpus, ["elliptic"])}
    assert {"K-singular-value", "E-singular-value", "6F5-elliptic-K-squared",
            "4F3-K-product", "8F7-K-products"} <= names
    summary = run_all(select(corpus, ["elliptic"]), P40, seed=0)
    assert summary.ok and summary.counts["failed"] == 0


def test_run_all_is_deterministic_and_ordered(corpus):
    chosen = select(corpus, ["K"])
    a = run_all(chosen, P40, seed=3)
    b = run_all(list(chosen), P40, parallelism=2, seed=3)
    assert a.dumps() == b.dumps()
    assert [r.name for r in a.results] == [e.name for e in chosen]


def test_disputed_entries_do_not_fail_the_run(by_name):
    bad = CorpusEntry(Identity("wrong", parse_expr("gamma(1/2)^2"), parse_expr("3")),
                      status=DISPUTED, discrepancy="1.4e-1")
    summary = run_all([by_name["K-singular-value"], bad], P40)
    assert summary.ok
    assert summary.counts == {"entries": 2, "passed": 1, "failed": 0, "disputed": 1, "checks": 2}
