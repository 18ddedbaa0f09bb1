"""Acceptance criteria 1-10.

Each criterion is one test named ``test_criterion_<n>_<name>``; the conftest
prints a PASS/FAIL line per criterion at the end of the run. Corpus-backed
criteria read the JSON report of a real ``hyperdist corpus run``.
"""

import json
import random
import subprocess
import sys
import time
from fractions import Fraction as F

import pytest

from hyperdist.corpus import instantiate, load_corpus, verify
from hyperdist.expr import Num
from hyperdist.identity import Identity
from hyperdist.numerics import RIGOROUS, Precision, eval_expression
from hyperdist.params import ParamList
from hyperdist.parse import parse_expr
from hyperdist.series import Convergence, convergence_class
from hyperdist.serieseval import ALTERNATING_ACCEL, TAIL_ASYMPTOTIC, eval_pfq, plan
from hyperdist.transforms import DistSpec, annihilation_sum, dist, init, pfd, stir

from transform_cases import dist_spec, init_case, pfd_case, stir_case

P40 = Precision(40)
P50 = Precision(50)

DIST_EXAMPLE_FORMS = [
    "35/64*(pi^2 + 4*asin(root(8, 1))^2 - 4*asinh(1)^2 - 4*asinh(root(8, 1))^2)",
    "35/64*(pi^2 - 4*log(sqrt(2)+1)^2 - log(sqrt(2)-sqrt(2*sqrt(2)+2)+1)^2"
    " - log(sqrt(2)+sqrt(2*sqrt(2)+2)+1)^2 + 8*atan(sqrt(sqrt(2)-1))^2)",
]

PROPOSITIONS = [f"P{g}{i}" for g, n in ((1, 5), (2, 6), (3, 6)) for i in range(1, n + 1)]
SPECIALIZATIONS = [
    "P1-example-quarter", "P1-example-twelfths", "P1-example-48ths",
    "P2-example-7F6", "P2-example-6F5-twelfths", "P2-example-6F5-24ths",
    "P3-example-16ths", "P3-example-negative-16ths", "P3-example-24ths",
    "S-gamma-form", "S-radical-form",
]
POLYLOG_DISPLAYS = [
    "7F6-catalan", "8F7-dilog-sqrt2", "7F6-gamma-quarter-sixths", "7F6-gamma-quarter-twelfths",
    "8F7-gamma-eighths", "9F8-gamma-eighths", "5F4-trilog-quarters", "8F7-dilog-half-integers",
    "9F8-trilog", "6F5-trilog-ones", "6F5-tetralog", "5F4-at-1/64", "6F5-at-1/16",
    "6F5-catalan-trilog", "6F5-dilog-quarters",
]
ELLIPTIC_DISPLAYS = ["6F5-elliptic-K-squared", "6F5-elliptic-at-1/4096", "4F3-K-product", "8F7-K-products"]


# ---------------------------------------------------------------- fixtures

@pytest.fixture(scope="session")
def corpus_reports(tmp_path_factory):
    """Two full ``corpus run`` invocations with the same seed."""
    out = []
    for i in range(2):
        path = tmp_path_factory.mktemp("run") / f"report{i}.json"
        proc = subprocess.run(
            [sys.executable, "-m", "hyperdist.cli", "corpus", "run", "--json", "--seed", "0",
             "--out", str(path)], capture_output=True, text=True)
        assert proc.returncode in (0, 1), proc.stderr
        out.append(path.read_bytes())
    return out


@pytest.fixture(scope="session")
def report(corpus_reports):
    doc = json.loads(corpus_reports[0])
    return {e["name"]: e for e in doc["entries"]}


@pytest.fixture(scope="session")
def entries():
    return {e.name: e for e in load_corpus()}


def checks(report, name):
    return report[name]["checks"]


def diff(check) -> float:
    return float(check["abs_diff"])


def bindings_ok(entry, check) -> bool:
    b = {k: F(v) for k, v in check["binding"].items()}
    return not entry.identity.check(b)


def assert_entry(report, name, tol, count=None):
    cs = checks(report, name)
    assert report[name]["passed"], (name, [c for c in cs if not c["passed"]][:3])
    if count is not None:
        assert len(cs) >= count, (name, len(cs))
    worst = max(diff(c) for c in cs)
    assert worst <= tol, (name, worst)
    return cs


# ---------------------------------------------------------------- criteria

def test_criterion_1_dist_example():
    start = time.perf_counter()
    ident = dist(DistSpec(4, 3, Num(F(1)), ParamList([1, 1, 1]), ParamList([F(3, 2), 2])))
    s = ident.lhs.series
    assert s.upper == ParamList([1, 1, 1, F(5, 4), F(3, 2), F(7, 4)])
    assert s.lower == ParamList([F(9, 8), F(11, 8), F(13, 8), F(15, 8), 2])
    series = eval_pfq(s, P40)
    for text in DIST_EXAMPLE_FORMS:
        closed = eval_expression(parse_expr(text), {}, P40)
        assert abs(series.mid - closed.mid) <= 1e-15
        assert verify(Identity("dist-example", ident.lhs, parse_expr(text)), P40, -15).passed
    assert verify(ident, P40, -15).passed
    assert time.perf_counter() - start < 30


def test_criterion_2_dougall_lemma(report, entries):
    for name, count in (("L1", 100), ("L2", 100), ("L3", 100), ("L4", 50)):
        cs = assert_entry(report, name, 1e-20, count)
        for c in cs:
            assert bindings_ok(entries[name], c)
            s = instantiate(entries[name], {k: F(v) for k, v in c["binding"].items()}).lhs.series
            if convergence_class(s) != Convergence.TERMINATING:
                want = ALTERNATING_ACCEL if name in ("L2", "L4") else TAIL_ASYMPTOTIC
                assert plan(s).strategy == want, (name, c["binding"])
            # the boundary error estimate must cover the observed difference
            assert diff(c) <= float(c["lhs_err"]) + float(c["rhs_err"]), (name, c["binding"])


def test_criterion_3_elliptic_lemma(report, entries):
    for name in ("K1+", "K1-", "K2", "K3", "K4"):
        cs = assert_entry(report, name, 1e-20, 50)
        for c in cs:
            a = F(c["binding"]["a"])
            assert 0 < a < F(1, 2) and bindings_ok(entries[name], c)


def test_criterion_4_propositions(report):
    for name in PROPOSITIONS:
        assert_entry(report, name, 1e-12, 20)
    for name in SPECIALIZATIONS:
        assert_entry(report, name, 1e-15, 1)


def test_criterion_5_polylog_corpus(report, entries):
    assert len(POLYLOG_DISPLAYS) >= 13
    for name in POLYLOG_DISPLAYS:
        cs = assert_entry(report, name, 1e-18, 1)
        if "inside-disk" in entries[name].class_tags:
            assert all(c["rigor"] == RIGOROUS for c in cs), name
    inside = [n for n in POLYLOG_DISPLAYS if "inside-disk" in entries[n].class_tags]
    assert {"5F4-at-1/64", "6F5-at-1/16"} <= set(inside)


def test_criterion_6_miscellany(report, entries):
    start = time.perf_counter()
    direct = verify(entries["0F23-bessel"].identity, P40, -20)
    assert direct.passed and time.perf_counter() - start < 1.0
    assert_entry(report, "0F23-bessel", 1e-20, 1)
    for name in ("6F5-central-binomial-1/4", "6F5-central-binomial-1/64", "4F3-at-729/1024"):
        assert_entry(report, name, 1e-25, 1)
    for name in ELLIPTIC_DISPLAYS:
        assert_entry(report, name, 1e-15, 1)


def test_criterion_7_12F11_forms(report):
    values = {}
    for name in ("12F11-gamma-form", "12F11-algebraic-form", "12F11-forms-agree"):
        (c,) = assert_entry(report, name, 1e-15, 1)
        values[name] = c
    # series = gamma form and series = algebraic form, so the closed forms share a left side
    assert values["12F11-gamma-form"]["lhs"] == values["12F11-algebraic-form"]["lhs"]


def _rigorous_within(ident, tol=1e-25):
    r = verify(ident, P40, -25)
    assert r.passed and r.rigor == RIGOROUS, (ident.name, r.abs_diff)
    assert r.lhs_err + r.rhs_err <= tol, (ident.name, r.lhs_err, r.rhs_err)


def test_criterion_8_transform_properties():
    rng = random.Random(20240801)
    for _ in range(200):
        spec = dist_spec(rng)
        assert spec.n <= 4 and abs(spec.z.value) <= F(1, 2)
        _rigorous_within(dist(spec))
    for _ in range(200):
        _rigorous_within(stir(*stir_case(rng)))
    for _ in range(200):
        _rigorous_within(init(*init_case(rng)))
    for _ in range(200):
        _rigorous_within(pfd(*pfd_case(rng)))
    for n in range(1, 13):
        for m in range(n):
            for j in range(-n, 2 * n):
                want = Num(F(n)) if (j - m) % n == 0 else Num(F(0))
                assert annihilation_sum(n, j, m) == want


def _small(text, **binding) -> float:
    v = eval_expression(parse_expr(text), {k: F(x) for k, x in binding.items()}, P50)
    return abs(v.mid)


def test_criterion_9_numerics_identities():
    rng = random.Random(9)
    for _ in range(40):
        z = F(rng.randint(1, 95), 96)
        n = rng.randint(2, 6)
        assert _small("gamma(z)*gamma(1-z) - pi/sin(pi*z)", z=z) <= 1e-30
        prod = "*".join(f"gamma(z + {k}/{n})" for k in range(n))
        assert _small(f"{prod} - (2*pi)^(({n}-1)/2)*{n}^(1/2 - {n}*z)*gamma({n}*z)", z=z) <= 1e-30
        assert _small("E(z)*K(1-z) + E(1-z)*K(z) - K(z)*K(1-z) - pi/2", z=z) <= 1e-30
        x = F(rng.randint(-40, 40), 50)
        y = F(rng.randint(-30, 30), 50)
        for s in (2, 3, 4):
            assert _small(f"polylog({s}, x+I*y) + polylog({s}, -x-I*y)"
                          f" - 2^(1-{s})*polylog({s}, (x+I*y)^2)", x=x, y=y) <= 1e-30
    assert _small("K(1/2-sqrt(2)/2) - gamma(1/8)*gamma(3/8)/(2^(11/4)*sqrt(pi))") <= 1e-30
    assert _small("E(1/2-sqrt(2)/2) - (gamma(5/8)*gamma(7/8)"
                  " + (sqrt(2)+1)/8*gamma(1/8)*gamma(3/8))/(2^(5/4)*sqrt(pi))") <= 1e-30


def test_criterion_10_determinism(corpus_reports):
    first, second = corpus_reports
    assert first == second
    doc = json.loads(first)
    assert doc["schema"] == 1 and doc["seed"] == 0
    assert doc["totals"]["failed"] == 0
