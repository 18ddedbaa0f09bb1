"""Identity corpus: loading, sampling, verification and reports.

A corpus file is JSON with ``{"schema": 1, "entries": [...]}``. Each entry
holds an identity (expressions in the tree encoding of
:func:`hyperdist.expr.to_json`), tags, a verification mode and a decimal
tolerance exponent. Parametric entries are checked at random rational
bindings drawn deterministically from a seed and the entry name.
"""

from __future__ import annotations

import hashlib
import json
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Mapping

from .errors import (
    ConstraintViolated, EvaluationError, HyperdistError, ParseError, ValidationError,
)
from .expr import Fn, Num, Pow, canonical, hyp_nodes, rational_value, walk
from .identity import Identity
from .numerics import Precision, eval_expression, eval_side, weaker, working_bits
from .params import as_rational, format_rational, is_nonpositive_integer

SCHEMA = 1
FIXED, PARAMETRIC = "fixed", "parametric"
ACTIVE, DISPUTED = "active", "disputed"
MAX_DENOMINATOR = 24
MAX_MAGNITUDE = 3
_MAX_TRIES = 200_000


def default_corpus_path() -> Path:
    env = os.environ.get("HYPERDIST_CORPUS")
    if env:
        return Path(env)
    return Path(str(resources.files("hyperdist") / "data" / "corpus.json"))


@dataclass(frozen=True)
class CorpusEntry:
    identity: Identity
    class_tags: tuple = ()
    verify_mode: str = FIXED
    samples: int = 0
    expected_tolerance: int = -15
    status: str = ACTIVE
    discrepancy: str = ""

    def __post_init__(self):
        object.__setattr__(self, "class_tags", tuple(self.class_tags))

    @property
    def name(self) -> str:
        return self.identity.name

    def validate(self) -> None:
        """Raise :class:`ValidationError` naming the entry on a broken invariant."""
        name = self.name
        if self.verify_mode not in (FIXED, PARAMETRIC):
            raise ValidationError(f"{name}: unknown verify_mode {self.verify_mode!r}")
        if self.status not in (ACTIVE, DISPUTED):
            raise ValidationError(f"{name}: unknown status {self.status!r}")
        if self.verify_mode == FIXED and (self.identity.free_symbols or self.identity.constraints):
            raise ValidationError(f"{name}: fixed entries take no free symbols or constraints")
        if self.verify_mode == PARAMETRIC:
            if not self.identity.free_symbols:
                raise ValidationError(f"{name}: parametric entries need free symbols")
            if self.samples < 1:
                raise ValidationError(f"{name}: parametric entries need samples >= 1")
        for side in (self.identity.lhs, self.identity.rhs):
            for node in hyp_nodes(side):
                for b in node.series.lower:
                    if isinstance(b, Fraction) and is_nonpositive_integer(b):
                        raise ValidationError(f"{name}: lower parameter {b} is a nonpositive integer")

    def to_json(self) -> dict:
        d = self.identity.to_json()
        d["class_tags"] = list(self.class_tags)
        d["verify_mode"] = self.verify_mode
        if self.verify_mode == PARAMETRIC:
            d["samples"] = self.samples
        d["expected_tolerance"] = self.expected_tolerance
        d["status"] = self.status
        if self.discrepancy:
            d["discrepancy"] = self.discrepancy
        return d

    @staticmethod
    def from_json(d: Mapping) -> "CorpusEntry":
        name = d.get("name", "<unnamed>") if isinstance(d, Mapping) else "<not an object>"
        try:
            ident = Identity.from_json(d)
            entry = CorpusEntry(ident, tuple(d.get("class_tags", ())), d.get("verify_mode", FIXED),
                                int(d.get("samples", 0)), int(d.get("expected_tolerance", -15)),
                                d.get("status", ACTIVE), d.get("discrepancy", ""))
        except ParseError as exc:
            raise ParseError(f"entry {name}: {exc}") from exc
        except (HyperdistError, KeyError, TypeError, ValueError) as exc:
            raise ValidationError(f"entry {name}: {exc}") from exc
        entry.validate()
        return entry


def parse_corpus(text: str) -> list:
    if not text.strip():
        raise ParseError("corpus file is empty")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", f"line {exc.lineno} column {exc.colno}") from exc
    if not isinstance(data, dict) or data.get("schema") != SCHEMA:
        raise ParseError(f"expected an object with schema {SCHEMA}")
    if not isinstance(data.get("entries"), list):
        raise ParseError("missing 'entries' list")
    entries = []
    seen = set()
    for i, d in enumerate(data["entries"]):
        try:
            e = CorpusEntry.from_json(d)
        except ParseError as exc:
            raise ParseError(str(exc), f"entries[{i}]") from exc
        if e.name in seen:
            raise ValidationError(f"duplicate entry name {e.name!r}")
        seen.add(e.name)
        entries.append(e)
    return entries


def load_corpus(path=None) -> list:
    path = Path(path) if path is not None else default_corpus_path()
    return parse_corpus(path.read_text())


def dump_corpus(entries) -> str:
    """Canonical JSON text; ``dump_corpus(parse_corpus(t)) == t`` for shipped files."""
    return json.dumps({"schema": SCHEMA, "entries": [e.to_json() for e in entries]},
                      indent=1, ensure_ascii=False) + "\n"


# ---------------------------------------------------------------- sampling

def instantiate(entry: CorpusEntry, binding: Mapping | None = None) -> Identity:
    """A concrete identity; fixed entries ignore an empty binding."""
    if entry.verify_mode == FIXED:
        if binding:
            raise ConstraintViolated(f"{entry.name}: fixed entries take no binding")
        return entry.identity
    return entry.identity.instantiate(binding or {})


def _rng(seed: int, name: str) -> random.Random:
    digest = hashlib.sha256(f"{seed}:{name}".encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def _draw(rng: random.Random) -> Fraction:
    den = rng.randint(1, MAX_DENOMINATOR)
    return Fraction(rng.randint(-MAX_MAGNITUDE * den, MAX_MAGNITUDE * den), den)


def _degenerate(ident: Identity) -> bool:
    """True when a concrete identity hits a gamma pole or a vanishing denominator."""
    for side in (ident.lhs, ident.rhs):
        for node in walk(side):
            if isinstance(node, Fn) and node.name == "gamma":
                v = rational_value(canonical(node.arg))
                if v is not None and is_nonpositive_integer(v):
                    return True
            elif isinstance(node, Pow) and isinstance(node.exp, Num) and node.exp.value < 0:
                if hyp_nodes(node.base):
                    continue
                try:
                    v = eval_expression(node.base, {}, Precision(15, 10))
                except HyperdistError:
                    return True
                if v.ball.contains(0):
                    return True
    return False


def sample_bindings(entry: CorpusEntry, count: int | None = None, seed: int = 0) -> list:
    """``count`` distinct admissible bindings, deterministic in ``(seed, entry.name)``.

    Values are rationals with denominator at most 24 and magnitude at most 3.
    """
    count = entry.samples if count is None else count
    syms = entry.identity.free_symbols
    rng = _rng(seed, entry.name)
    out, seen = [], set()
    for _ in range(_MAX_TRIES):
        if len(out) == count:
            return out
        b = {s: _draw(rng) for s in syms}
        key = tuple(b[s] for s in syms)
        if key in seen:
            continue
        seen.add(key)
        if entry.identity.check(b):
            continue
        try:
            concrete = entry.identity.instantiate(b)
        except HyperdistError:
            continue
        if _degenerate(concrete):
            continue
        out.append(b)
    if not out:
        raise ValidationError(f"{entry.name}: no admissible binding found; constraints look unsatisfiable")
    raise ValidationError(f"{entry.name}: only {len(out)} of {count} admissible bindings found")


# ------------------------------------------------------------ verification

@dataclass
class VerificationReport:
    name: str
    binding: dict
    lhs: str
    rhs: str
    lhs_err: float
    rhs_err: float
    abs_diff: float
    tolerance: int
    passed: bool
    rigor: str
    error: str = ""
    elapsed: float = field(default=0.0, compare=False)
    lhs_value: object = field(default=None, compare=False, repr=False)
    rhs_value: object = field(default=None, compare=False, repr=False)

    def to_json(self) -> dict:
        """Deterministic fields only; elapsed time and ball objects are left out."""
        return {
            "name": self.name,
            "binding": self.binding,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "lhs_err": _float_text(self.lhs_err),
            "rhs_err": _float_text(self.rhs_err),
            "abs_diff": _float_text(self.abs_diff),
            "tolerance": self.tolerance,
            "passed": self.passed,
            "rigor": self.rigor,
            "error": self.error,
        }

    def detached(self) -> "VerificationReport":
        """A copy without ball objects, safe to send between processes."""
        return VerificationReport(self.name, self.binding, self.lhs, self.rhs, self.lhs_err,
                                  self.rhs_err, self.abs_diff, self.tolerance, self.passed,
                                  self.rigor, self.error, self.elapsed)


def _float_text(x: float) -> str:
    return f"{x:.3e}" if x == x else "nan"


def _abs_diff(a, b) -> float:
    with working_bits(max(a.ball.bits(), b.ball.bits()) + 32):
        return float(abs(a.ball.mid() - b.ball.mid()).mid())


def verify(ident: Identity, prec: Precision = Precision(), tol_exp: int = -15,
           binding: Mapping | None = None) -> VerificationReport:
    """Evaluate both sides and compare midpoints; raises :class:`EvaluationError`."""
    if not ident.is_concrete:
        raise ConstraintViolated(f"{ident.name}: verify needs a concrete identity")
    start = time.perf_counter()
    lhs = eval_side(ident.lhs, "lhs", None, prec)
    rhs = eval_side(ident.rhs, "rhs", None, prec)
    diff = _abs_diff(lhs, rhs)
    digits = min(prec.digits, 30)
    return VerificationReport(
        ident.name, _binding_text(binding or {}), lhs.digits_text(digits), rhs.digits_text(digits),
        lhs.err, rhs.err, diff, tol_exp, diff <= 10.0 ** tol_exp, weaker(lhs.rigor, rhs.rigor),
        elapsed=time.perf_counter() - start, lhs_value=lhs, rhs_value=rhs)


def _binding_text(binding: Mapping) -> dict:
    return {k: format_rational(as_rational(v)) for k, v in sorted(binding.items())}


def _failed(name, binding, tol, error) -> VerificationReport:
    return VerificationReport(name, _binding_text(binding), "", "", float("nan"), float("nan"),
                              float("nan"), tol, False, "heuristic", error)


def verify_entry(entry: CorpusEntry, binding: Mapping | None, prec: Precision,
                 tol_exp: int | None = None) -> VerificationReport:
    """Like :func:`verify` but never raises: problems land in ``report.error``."""
    tol = entry.expected_tolerance if tol_exp is None else tol_exp
    binding = binding or {}
    try:
        ident = instantiate(entry, binding)
        return verify(ident, prec, tol, binding)
    except EvaluationError as exc:
        return _failed(entry.name, binding, tol, str(exc))
    except HyperdistError as exc:
        return _failed(entry.name, binding, tol, f"{type(exc).__name__}: {exc}")


@dataclass
class EntryResult:
    name: str
    status: str
    verify_mode: str
    tolerance: int
    reports: list

    @property
    def passed(self) -> bool:
        return bool(self.reports) and all(r.passed for r in self.reports)

    def to_json(self) -> dict:
        return {"name": self.name, "status": self.status, "verify_mode": self.verify_mode,
                "tolerance": self.tolerance, "passed": self.passed,
                "checks": [r.to_json() for r in self.reports]}


@dataclass
class Summary:
    seed: int
    digits: int
    results: list

    @property
    def counts(self) -> dict:
        active = [r for r in self.results if r.status == ACTIVE]
        return {
            "entries": len(self.results),
            "passed": sum(r.passed for r in active),
            "failed": sum(not r.passed for r in active),
            "disputed": len(self.results) - len(active),
            "checks": sum(len(r.reports) for r in self.results),
        }

    @property
    def ok(self) -> bool:
        """All active entries passed; disputed entries do not count."""
        return all(r.passed for r in self.results if r.status == ACTIVE)

    def to_json(self) -> dict:
        return {"schema": SCHEMA, "seed": self.seed, "digits": self.digits,
                "totals": self.counts, "entries": [r.to_json() for r in self.results]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1, sort_keys=False) + "\n"


def _job(args):
    entry_json, binding, digits, guard, tol = args
    entry = CorpusEntry.from_json(entry_json)
    return verify_entry(entry, binding, Precision(digits, guard), tol).detached()


def _jobs_for(entry: CorpusEntry, seed: int):
    if entry.verify_mode == FIXED:
        return [{}]
    try:
        return sample_bindings(entry, seed=seed)
    except ValidationError:
        return None


def run_all(entries, prec: Precision = Precision(), parallelism: int = 1, seed: int = 0,
            tol_exp: int | None = None) -> Summary:
    """Verify every entry; reports come back in corpus order whatever the scheduling."""
    plan = []
    jobs = []
    for e in entries:
        bindings = _jobs_for(e, seed)
        tol = e.expected_tolerance if tol_exp is None else tol_exp
        if bindings is None:
            plan.append((e, tol, None))
            continue
        plan.append((e, tol, (len(jobs), len(bindings))))
        ej = e.to_json()
        jobs.extend((ej, {k: str(v) for k, v in b.items()}, prec.digits, prec.guard, tol)
                    for b in bindings)
    if parallelism > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=parallelism) as pool:
            reports = list(pool.map(_job, jobs, chunksize=1))
    else:
        reports = [_job(j) for j in jobs]
    results = []
    for e, tol, span in plan:
        if span is None:
            rs = [_failed(e.name, {}, tol, "ValidationError: no admissible bindings")]
        else:
            rs = reports[span[0]:span[0] + span[1]]
        results.append(EntryResult(e.name, e.status, e.verify_mode, tol, rs))
    return Summary(seed, prec.digits, results)


def select(entries, tags=(), names=()) -> list:
    """Entries carrying any of ``tags`` and, if given, named in ``names``."""
    out = list(entries)
    if tags:
        out = [e for e in out if set(tags) & set(e.class_tags)]
    if names:
        out = [e for e in out if e.name in set(names)]
    return out


__all__ = [
    "CorpusEntry", "VerificationReport", "EntryResult", "Summary", "load_corpus",
    "parse_corpus", "dump_corpus", "instantiate", "sample_bindings", "verify", "verify_entry",
    "run_all", "select", "default_corpus_path",
]
