"""Generate src/hyperdist/data/corpus.json from the identity table below.

Identities are written in the parser's text syntax. Parametric entries get
their convergence constraints derived here: every symbolic series at
``z = 1`` must have parameter excess above 1/4, and every one at ``z = -1``
above -1/2. Extra constraints are listed per entry.

Run ``python3 scripts/build_corpus.py``; the test suite checks that the
shipped file matches this table.
"""

from __future__ import annotations

import argparse
from fractions import Fraction
from pathlib import Path

from hyperdist.corpus import ACTIVE, DISPUTED, FIXED, PARAMETRIC, CorpusEntry, dump_corpus
from hyperdist.expr import canonical, hyp_nodes, rational_value
from hyperdist.identity import ConstraintPredicate, Identity
from hyperdist.params import Affine
from hyperdist.parse import parse_affine, parse_expr

OUT = Path(__file__).resolve().parents[1] / "src" / "hyperdist" / "data" / "corpus.json"

MARGIN_AT_ONE = Fraction(1, 4)
MARGIN_AT_MINUS_ONE = Fraction(-1, 2)

ENTRIES = []


def add(name, lhs, rhs, *, symbols="", where=(), samples=20, tol=-15, tags=(), note=""):
    ENTRIES.append(dict(name=name, lhs=lhs, rhs=rhs, symbols=symbols.split(), where=list(where),
                        samples=samples, tol=tol, tags=list(tags), note=note))


def params(*ps):
    return ", ".join(ps)


# -------------------------------------------------------- distribution lemma

F6_ASIN = "6F5(1, 1, 1, 5/4, 3/2, 7/4; 9/8, 11/8, 13/8, 15/8, 2; 1)"
add("dist-asin-squared-6F5-inverse-trig", F6_ASIN,
    "35/64*(pi^2 + 4*asin(root(8, 1))^2 - 4*asinh(1)^2 - 4*asinh(root(8, 1))^2)",
    tags=["dist", "arcsine-squared"],
    note="DIST(4,3,1,{1,1,1},{3/2,2}) summed with the arcsine-squared series; inverse trig form")
add("dist-asin-squared-6F5-log-atan", F6_ASIN,
    "35/64*(pi^2 - 4*log(sqrt(2)+1)^2 - log(sqrt(2)-sqrt(2*sqrt(2)+2)+1)^2"
    " - log(sqrt(2)+sqrt(2*sqrt(2)+2)+1)^2 + 8*atan(sqrt(sqrt(2)-1))^2)",
    tags=["dist", "arcsine-squared"],
    note="same series as the inverse trig form, written with real logarithms and arctangent")
add("init-dougall-6F5",
    "6F5(1/2, 1, 3/2, 3/2, 3/2, 9/4; 5/4, 2, 2, 2, 3; 1)", "32/5*(1 - 8/pi^2)",
    tags=["init", "dougall"], note="INIT with n = 2 applied to the Dougall 5F4 evaluation")

# ------------------------------------------------------------ Dougall (L1-L4)

add("L1", "4F3(a, a/2+1, b, c; a/2, a-b+1, a-c+1; 1)",
    "gamma((a+1)/2)*gamma(a-b+1)*gamma(a-c+1)*gamma((a+1)/2-b-c)"
    "/(gamma(a+1)*gamma((a+1)/2-b)*gamma((a+1)/2-c)*gamma(a-b-c+1))",
    symbols="a b c", samples=100, tol=-20, tags=["dougall", "L"],
    note="very-well-poised 4F3 at 1, the d = (a+1)/2 case of L3")
add("L2", "4F3(a, a/2+1, b, c; a/2, a-b+1, a-c+1; -1)",
    "gamma(a-b+1)*gamma(a-c+1)/(gamma(a+1)*gamma(a-b-c+1))",
    symbols="a b c", samples=100, tol=-20, tags=["dougall", "L"],
    note="very-well-poised 4F3 at -1")
add("L3", "5F4(a/2+1, a, b, c, d; a/2, a-b+1, a-c+1, a-d+1; 1)",
    "gamma(a-b+1)*gamma(a-c+1)*gamma(a-d+1)*gamma(a-b-c-d+1)"
    "/(gamma(a+1)*gamma(a-b-c+1)*gamma(a-b-d+1)*gamma(a-c-d+1))",
    symbols="a b c d", samples=100, tol=-20, tags=["dougall", "L"],
    note="Dougall 5F4 at 1")
add("L4", "6F5(a/2+1, a, b, c, d, e; a/2, a-b+1, a-c+1, a-d+1, a-e+1; -1)",
    "gamma(a-d+1)*gamma(a-e+1)/(gamma(a+1)*gamma(a-d-e+1))"
    "*3F2(a-b-c+1, d, e; a-b+1, a-c+1; 1)",
    symbols="a b c d e", samples=50, tol=-20, tags=["dougall", "L"],
    note="very-well-poised 6F5 at -1 reduced to a 3F2 at 1")

# --------------------------------------------------------------- K1-K4

K_RANGE = [("a", ">", "0"), ("1/2-a", ">", "0")]
add("K1+", "2F1(a, (a+1)/3; 2*(a+1)/3; root(6, 1))",
    "3^(a/2-1)*exp(I*pi*a/6)*gamma(a/3)*gamma(2*(a+1)/3)/(gamma(2/3)*gamma(a))",
    symbols="a", where=K_RANGE, samples=50, tol=-20, tags=["K"],
    note="2F1 at exp(i pi/3)")
add("K1-", "2F1(a, (a+1)/3; 2*(a+1)/3; root(6, 5))",
    "3^(a/2-1)*exp(-I*pi*a/6)*gamma(a/3)*gamma(2*(a+1)/3)/(gamma(2/3)*gamma(a))",
    symbols="a", where=K_RANGE, samples=50, tol=-20, tags=["K"],
    note="2F1 at exp(-i pi/3), the conjugate of K1+")
add("K2", "2F1(a+1/2, 1/2-a; 1-a; (1-sqrt(2))/2)",
    "sqrt(pi)*2^(2*a-1/4)*(sqrt(2)-1)^a*gamma(1-a)/(gamma(5/8-a/2)*gamma(7/8-a/2))",
    symbols="a", where=K_RANGE, samples=50, tol=-20, tags=["K"],
    note="2F1 at (1-sqrt 2)/2")
add("K3", "3F2(1/2, 1/2-a, a+1/2; 1-a, a+1; 1)",
    "pi^2*a*csc(pi*a)/(gamma(3/4)^2*gamma(3/4-a)*gamma(a+3/4))",
    symbols="a", where=K_RANGE, samples=50, tol=-20, tags=["K"],
    note="3F2 at 1 from the product formula with b = a")
add("K4", "3F2(1/2, 1/2-a, a+1/2; 1-a, a+1; -1)",
    "pi^2*a*csc(pi*a)/(sqrt(2)*gamma(5/8-a/2)*gamma(7/8-a/2)*gamma(a/2+5/8)*gamma(a/2+7/8))",
    symbols="a", where=K_RANGE, samples=50, tol=-20, tags=["K"],
    note="3F2 at -1 from the product formula with b = a")
add("clausen-product-3F2",
    "3F2(1/2, 1/2-a, a+1/2; 1-b, b+1; z)",
    "2F1(1/2-a, a+1/2; 1-b; (1-sqrt(1-z))/2)*2F1(1/2-a, a+1/2; b+1; (1-sqrt(1-z))/2)",
    symbols="a b z", where=[("z", ">", "-1"), ("1-z", ">", "0")], samples=20, tol=-20,
    tags=["K", "clausen"], note="product formula behind K3 and K4")

# --------------------------------------------------------------- P1 family

add("P11", "6F5(a/2+1, a, 1-b, b, 1-c, c; a/2, a-b+1, a+b, a-c+1, a+c; -1)",
    "pi*2^(1-2*a)*gamma(a-b+1)*gamma(a+b)*gamma(a-c+1)*gamma(a+c)"
    "/(gamma(a)*gamma(a+1)*gamma(a/2-b/2-c/2+1)*gamma(a/2+b/2-c/2+1/2)"
    "*gamma(a/2+c/2-b/2+1/2)*gamma(a/2+b/2+c/2))",
    symbols="a b c", tags=["P1", "dougall"], note="L4 summed by Whipple")
add("P12", "6F5(a/2+1, a, 2*b, a-2*c+1, 2*a-2*b-2*c+1, c; a/2, a-2*b+1, a-c+1, 2*c, -a+2*b+2*c; -1)",
    "sqrt(pi)*gamma(c+1/2)*gamma(a-2*b+1)*gamma(a-c+1)*gamma(-a+2*b+2*c)"
    "/(gamma(a+1)*gamma(b+1/2)*gamma(-b+c+1/2)*gamma(a-b-c+1)*gamma(-a+b+2*c))",
    symbols="a b c", tags=["P1", "dougall"], note="L4 summed by Watson")
add("P13", "6F5(a/2+1, a, 2*b, a-b-c+1/2, 2*c, -a+2*b+2*c; a/2, a-2*b+1, a-2*c+1, 2*a-2*b-2*c+1, b+c+1/2; -1)",
    "sqrt(pi)*gamma(a-2*b+1)*gamma(a-2*c+1)*gamma(b+c+1/2)*gamma(a-b-c+1)"
    "/(gamma(a+1)*gamma(b+1/2)*gamma(c+1/2)*gamma(a-b-2*c+1)*gamma(a-2*b-c+1))",
    symbols="a b c", tags=["P1", "dougall"], note="L4 summed by Watson")
add("P14", "6F5(1/2, a, a+3/4, 2*a-1/2, 2*a-b, b; a-1/4, 2*a, a+1/2, 2*a-b+1/2, b+1/2; -1)",
    "sqrt(pi)*gamma(a+1/2)^2*gamma(b+1/2)*gamma(2*a-b+1/2)"
    "/(gamma(2*a+1/2)*gamma(b/2+1/2)^2*gamma(a-b/2+1/2)^2)",
    symbols="a b", tags=["P1", "dougall"], note="L4 summed by Clausen")
add("P15", "6F5(a/2+1, a, a-2*b+1, a-b+1/2, a-b+1/2, b; a/2, a-b+1, 2*b, b+1/2, b+1/2; -1)",
    "sqrt(pi)*gamma(b+1/2)^3*gamma(a-b+1)"
    "/(gamma(a+1)*gamma(a/2-b/2+3/4)^2*gamma(-a/2+3*b/2+1/4)^2)",
    symbols="a b", tags=["P1", "dougall"], note="L4 summed by Dixon")

# --------------------------------------------------------------- P2 family

add("P21", "4F3(a, a+1/2, b, b+1/2; 1/2, a-b+1/2, a-b+1; 1)",
    "1/2*(gamma(1-4*b)/(gamma(1-2*b)*gamma(2*a-4*b+1))"
    " + sqrt(pi)*4^(-a)/(gamma(a+1/2)*gamma(a-2*b+1)))*gamma(2*a-2*b+1)",
    symbols="a b", tags=["P2"], note="Gauss and Kummer at -1, DIST(2,0,1)")
add("P22", "6F5(a/3+1/3, a/3+2/3, a-1/3, a/3, a, a+1/3; 1/3, 2/3, 2*a/3+1/3, 2*a/3+2/3, 2*a/3; -1)",
    "sqrt(pi)*8^(-a)*(a*gamma(2*a)/(gamma((a+1)/2)*gamma(3*a/2+1))"
    " + 2^(5*a+1)*3^(-3*a/2-1)*sin(pi*(4-3*a)/6)*gamma(a+1/2)/(gamma(2/3)*gamma(a+1/3)))",
    symbols="a", tags=["P2"], note="Kummer at -1, K1 and its conjugate, DIST(3,0,-1)")
add("P23", "6F5(1/4, 3/4, 1/4-a/2, 3/4-a/2, a/2+1/4, a/2+3/4; 1/2, 1/2-a/2, 1-a/2, a/2+1/2, a/2+1; 1)",
    "1/4*pi^2*a*csc(pi*a)*(sqrt(2)/(gamma(5/8-a/2)*gamma(7/8-a/2)*gamma(a/2+5/8)*gamma(a/2+7/8))"
    " + 2/(gamma(3/4)^2*gamma(3/4-a)*gamma(a+3/4)))",
    symbols="a", tags=["P2"], note="K3 and K4, DIST(2,0,1)")
add("P24", "6F5(1/4, 3/4, a/2+1/2, a-1/4, a/2, a+1/4; 1/2, a/2+1/4, a/2+3/4, a, a+1/2; 1)",
    "pi*2^(-2*a-1/2)*gamma(a+1/2)^2/(gamma(a/2+3/8)^2*gamma(a/2+5/8)^2)"
    " + gamma(1/4)^2*gamma(a+1/2)^2/(4*pi*gamma(a+1/4)^2)",
    symbols="a", tags=["P2"], note="Kummer at -1 and Clausen, DIST(2,0,1)")
add("P25", "6F5(3/4, 5/4, a/4+3/8, a/4+7/8, a/2+1/2, a/2; 1/2, a/4+5/8, a/4+9/8, a/2+3/4, a/2+5/4; 1)",
    "1/2*pi*gamma(a/2+5/4)^2*(2^(3*a-1)*(gamma((a+1)/4)*gamma((a+2)/4)"
    " - gamma(a/4)*gamma((a+3)/4))^2/(pi^3*gamma(a)^2) + 1/(gamma(5/4)^2*gamma((a+1)/2)^2))",
    symbols="a", tags=["P2"], note="Kummer at -1 and Clausen, DIST(2,0,1)")
add("P26", "7F6(a/4+1, a/2+1/2, a/2, b/2+1/2, b/2, c/2+1/2, c/2;"
    " 1/2, a/4, a/2-b/2+1/2, a/2-b/2+1, a/2-c/2+1/2, a/2-c/2+1; 1)",
    "1/2*(gamma(a-b+1)*gamma(a-c+1)/(gamma(a+1)*gamma(a-b-c+1))"
    " + gamma((a+1)/2)*gamma(a-b+1)*gamma(a-c+1)*gamma((a+1)/2-b-c)"
    "/(gamma(a+1)*gamma((a+1)/2-b)*gamma((a+1)/2-c)*gamma(a-b-c+1)))",
    symbols="a b c", tags=["P2", "dougall"], note="L1 and L2, DIST(2,0,1)")

# --------------------------------------------------------------- P3 family

PROP3 = {
    "P31": (
        params("a/4+1", "a/2+1/2", "a/2", "a/2-b+1/2", "a/2-b+1", "3*a/4-b+1/4", "3*a/4-b+3/4",
               "b/2+1/2", "b/2"),
        params("1/2", "a/4", "a/2-b/2+1/2", "a/2-b/2+1", "b", "b+1/2", "-a/4+b+1/4", "-a/4+b+3/4"),
        "4^(b-1)*gamma(b+1/2)*gamma(a-b+1)*(gamma(a/4+1/4)*gamma(-a/4+b+3/4)"
        "/(gamma(3*a/4-b+3/4)*gamma(-3*a/4+2*b+1/4))"
        " + gamma(-a/2+2*b+1/2)*gamma(-3*a/2+3*b-1/2)/(gamma(-a/2+b+1/2)*gamma(-3*a/2+4*b-1/2)))"
        "/(sqrt(pi)*gamma(a+1))"),
    "P32": (
        params("1/4-a/4", "3/4-a/4", "a/4+1", "a/2+1/2", "a/2", "1/2-b/2", "1-b/2", "b/2+1/2", "b/2"),
        params("1/2", "3*a/4+1/4", "3*a/4+3/4", "a/4", "a/2-b/2+1/2", "a/2-b/2+1", "a/2+b/2",
               "a/2+b/2+1/2"),
        "gamma(3*a/2+1/2)*gamma(a-b+1)*gamma(a+b)*(gamma(3*a/2-1/2)"
        "/(gamma(a)*gamma(3*a/2-b+1/2)*gamma(3*a/2+b-1/2))"
        " + pi^(3/2)*2^(2-3*a)/(gamma(a/2)*gamma(a/4-b/2+3/4)*gamma(3*a/4-b/2+3/4)"
        "*gamma(a/4+b/2+1/4)*gamma(3*a/4+b/2+1/4)))/(2*gamma(a+1))"),
    "P33": (
        params("a/8+1/8", "a/8+5/8", "a/4+1", "a/2+1/2", "a/2", "3*a/4-b/2+1/4", "3*a/4-b/2+3/4",
               "b/2+1/2", "b/2"),
        params("1/2", "3*a/8+3/8", "3*a/8+7/8", "a/4", "a/2-b/2+1/2", "a/2-b/2+1", "-a/4+b/2+1/4",
               "-a/4+b/2+3/4"),
        "gamma(a-b+1)*gamma(-a/2+b+1/2)*(sqrt(pi)*gamma(a/4+3/4)*gamma(3*a/4+3/4)"
        "/(gamma(b/2+1/2)*gamma(a/4-b/2+3/4)*gamma(3*a/4-b/2+3/4)*gamma(-a/2+b/2+1/2))"
        " + sec((3*pi*a+pi)/4)*cos(pi*(3*a-4*b+1)/4)/gamma(1/2-a/2))/(2*gamma(a+1))"),
    "P34": (
        params("1/4-a/4", "3/4-a/4", "a/4+1", "a/2+1/2", "a/2", "1/2-b/2", "1-b/2", "b/2+1/2", "b/2"),
        params("1/2", "3*a/4+1/4", "3*a/4+3/4", "a/4", "a/2-b/2+1/2", "a/2-b/2+1", "a/2+b/2",
               "a/2+b/2+1/2"),
        "gamma(3*a/2+1/2)*gamma(a-b+1)*gamma(a+b)*(pi*2^(1-2*a)*gamma(a/2+1/2)"
        "/(gamma(a/4-b/2+3/4)*gamma(3*a/4-b/2+3/4)*gamma(a/4+b/2+1/4)*gamma(3*a/4+b/2+1/4))"
        " + gamma(3*a/2-1/2)/(gamma(3*a/2-b+1/2)*gamma(3*a/2+b-1/2)))/(2*gamma(a)*gamma(a+1))"),
    "P35": (
        params("a/4+1", "a/2+1/2", "a/2", "3*a/8-b/4+1/8", "3*a/8-b/4+5/8", "b/2+1/2",
               "-a/4+b/2+1/4", "-a/4+b/2+3/4", "b/2"),
        params("1/2", "a/4", "a/2-b/2+1/2", "a/2-b/2+1", "3*a/4-b/2+1/4", "3*a/4-b/2+3/4",
               "a/8+b/4+3/8", "a/8+b/4+7/8"),
        "2^(3*(a-1)/2-b)*gamma(3*a/4-b/2+3/4)*gamma(a/4+b/2+3/4)"
        "*(gamma(a/4+1/4)*gamma(a/2-b/2+1)/(gamma(b/2+1/2)*gamma(3*a/4-b+3/4))"
        " + gamma(3*a/4-3*b/2+1/4)*gamma(a-b+1)/(gamma(3*a/2-2*b+1/2)*gamma(a/4-b/2+3/4)))"
        "/(sqrt(pi)*gamma(a+1))"),
    "P36": (
        params("a/8+1/8", "a/8+5/8", "a/4+1", "3*a/8+1/8", "3*a/8+1/8", "3*a/8+5/8", "3*a/8+5/8",
               "a/2+1/2", "a/2"),
        params("1/2", "a/8+3/8", "a/8+3/8", "a/8+7/8", "a/8+7/8", "3*a/8+3/8", "3*a/8+7/8", "a/4"),
        "gamma((a+3)/4)^2*(sqrt(pi)*gamma(a/4+3/4)*gamma(3*a/4+3/4)"
        "/(gamma(5/8-a/8)^2*gamma(3*a/8+5/8)^2) + sec((3*pi*a+pi)/4)/gamma(1/2-a/2))/(2*gamma(a+1))"),
}
for name, (upper, lower, rhs) in PROP3.items():
    syms = "a" if name == "P36" else "a b"
    add(name, f"9F8({upper}; {lower}; 1)", rhs, symbols=syms, tags=["P3", "dougall"],
        note="L3 and 5F4 evaluations induced by L4, DIST(2,0,1)")

# ----------------------------------------- Fourier-Legendre and 12F11 forms

add("fourier-legendre-5F4",
    "5F4(1/2, 1/2, 5/4, 1-s, 1-t; 1/4, s+1/2, t+1/2, 1; 1)",
    "beta(s+t-1, s+t-1)/(beta(s, s)*beta(t, t))",
    symbols="s t", tol=-20, tags=["dougall", "fourier-legendre"],
    note="Parseval for a Fourier-Legendre expansion; symmetric case of L3")

F12 = ("12F11(-1/24, 1/24, 1/8, 5/24, 7/24, 3/8, 11/24, 13/24, 5/8, 17/24, 19/24, 7/8;"
       " 1/12, 1/6, 1/4, 1/3, 5/12, 1/2, 7/12, 2/3, 3/4, 5/6, 11/12; 1)")
F12_GAMMA = ("(2*sqrt(sqrt(2)+1) + 3^(1/8)*(sqrt(3)+1)*gamma(1/3)*gamma(5/12)/gamma(1/4)"
             "*sqrt((sqrt(sqrt(3)+2)+2)/pi))/(12*sqrt(2))"
             " + pi*(gamma(1/4)^2/gamma(5/12)^2 + (-sqrt(2)+sqrt(6)+4)*gamma(7/24)^2"
             "/(2^(11/6)*gamma(11/24)^2))/(6*gamma(1/3)^2)")
F12_ALGEBRAIC = ("1/12*sqrt(1-(-1)^(1/6)) - 1/12*(-1)^(5/6) + (-1)^(1/6)/12"
                 " - 1/12*(-1)^(11/12)*sqrt((-1)^(1/6)-1) + 1/12*sqrt(1-(-1)^(5/6))"
                 " - 1/12*(-1)^(7/12)*sqrt((-1)^(5/6)-1) + (-1)^(1/8)/(6*2^(3/4))"
                 " - (-1)^(7/8)/(6*2^(3/4)) + (-1)^(1/12)/(4*3^(3/4))"
                 " - (-1)^(11/12)/(4*3^(3/4)) + 1/(6*sqrt(2))")
add("12F11-gamma-form", F12, F12_GAMMA, tags=["dist", "12F11"],
    note="P22 at a = 1/4 and P24 at a = 1/6 combined by DIST(2,0,1)")
add("12F11-algebraic-form", F12, F12_ALGEBRAIC, tags=["dist", "12F11"],
    note="DIST(12,0,1,{-1/2},{}) applied to the binomial series")
add("12F11-forms-agree", F12_GAMMA, F12_ALGEBRAIC, tags=["12F11"],
    note="the gamma form and the algebraic form of the same 12F11")

# ---------------------------------------------------- half-integer 3F2 and 4F3

DISK = [("z", ">", "-1"), ("1-z", ">", "0")]
# closed forms with log(0) at the removable point z = 0
PUNCTURED = DISK + [("z", "!=", "0")]
add("3F2-OOO|OO-dilog",
    "sqrt(z)*3F2(1/2, 1/2, 1/2; 3/2, 3/2; -z)",
    "Li2(-sqrt(z)-sqrt(z+1)) - Li2(-sqrt(z)-sqrt(z+1)+1) - 1/2*log(sqrt(z)+sqrt(z+1))^2"
    " + log(sqrt(z)+sqrt(z+1)+1)*log(sqrt(z)+sqrt(z+1)) + pi^2/12",
    symbols="z", where=DISK, tol=-20, tags=["polylog", "OOO|OO"], note="half-integer class OOO|OO")
add("3F2-EEO|OO-dilog",
    "sqrt(z)*3F2(1, 1, 1/2; 3/2, 3/2; -z)",
    "-Li2(1/(sqrt(z)+sqrt(z+1))) + Li2(-1/(sqrt(z)+sqrt(z+1)))"
    " + log(sqrt(z)+sqrt(z+1))*log((sqrt(z)+sqrt(z+1)-1)/(sqrt(z)+sqrt(z+1)+1)) + pi^2/4",
    symbols="z", where=PUNCTURED, tol=-20, tags=["polylog", "EEO|OO"], note="half-integer class EEO|OO")
add("3F2-EOO|EE-elliptic",
    "9*pi*z^2*3F2(1/2, 3/2, 1; 3, 3; z)",
    "-512*z*K(z) + 512*K(z) + 144*pi*z - 128*z*E(z) - 896*E(z) + 192*pi",
    symbols="z", where=DISK, tol=-20, tags=["elliptic", "EOO|EE"], note="half-integer class EOO|EE")
add("3F2-OOO|EE-elliptic",
    "pi^2*sqrt(1-z)*3F2(1/2, 1/2, 3/2; 1, 1; z)",
    "8*K(1/2-sqrt(1-z)/2)*E(1/2-sqrt(1-z)/2) - 4*K(1/2-sqrt(1-z)/2)^2",
    symbols="z", where=DISK, tol=-20, tags=["elliptic", "OOO|EE"], note="half-integer class OOO|EE")
add("K-singular-value", "K(1/2-sqrt(2)/2)", "gamma(1/8)*gamma(3/8)/(2^(11/4)*sqrt(pi))",
    tol=-30, tags=["elliptic", "singular-value"], note="K at 1/2 - sqrt(2)/2 in gamma values")
add("E-singular-value", "E(1/2-sqrt(2)/2)",
    "(gamma(5/8)*gamma(7/8) + 1/8*(sqrt(2)+1)*gamma(1/8)*gamma(3/8))/(2^(5/4)*sqrt(pi))",
    tol=-30, tags=["elliptic", "singular-value"], note="E at 1/2 - sqrt(2)/2 in gamma values")
add("4F3-OOOO|OOO-trilog",
    "4F3(1/2, 1/2, 1/2, 1/2; 3/2, 3/2, 3/2; z)",
    "asin(sqrt(z))^3/(6*sqrt(z)) + I*(Li3(2*z-2*I*sqrt(z-z^2)) - Li3(2*z+2*I*sqrt(z-z^2)))/(4*sqrt(z))",
    symbols="z", where=DISK, tol=-20, tags=["polylog", "OOOO|OOO"], note="irreducible class OOOO|OOO")
add("4F3-OEEE|EEE-dilog",
    "z*4F3(1/2, 1, 1, 1; 2, 2, 2; z)",
    "-4*Li2(1/2-sqrt(1-z)/2) - 8*sqrt(1-z) + 2*log(sqrt(1-z)+1)^2 - 4*log(2)*log(sqrt(1-z)+1)"
    " + 8*log(sqrt(1-z)+1) + 8 + 2*log(2)^2 - 8*log(2)",
    symbols="z", where=DISK, tol=-20, tags=["polylog", "EEEO|EEE"], note="irreducible class EEEO|EEE")
add("4F3-EEEE|EEO-trilog",
    "z*4F3(1, 1, 1, 1; 3/2, 2, 2; z)",
    "Li3(-2*z-2*I*sqrt(1-z)*sqrt(z)+1) + 2*I*Li2(-2*z-2*I*sqrt(1-z)*sqrt(z)+1)*asin(sqrt(z))"
    " + 2/3*I*asin(sqrt(z))^3 + 2*log(2)*asin(sqrt(z))^2"
    " + 2*log((sqrt(z)+I*sqrt(1-z))*sqrt(z))*asin(sqrt(z))^2 - zeta(3)",
    symbols="z", where=PUNCTURED, tol=-20, tags=["polylog", "EEEE|EEO"], note="irreducible class EEEE|EEO")
add("arcsine-squared-3F2", "3F2(1, 1, 1; 3/2, 2; z)", "asin(sqrt(z))^2/z",
    symbols="z", where=DISK, tol=-20,
    tags=["arcsine-squared"], note="Taylor series of the squared arcsine")

# ------------------------------------------------- Dougall DIST specializations

add("P1-example-quarter", "6F5(1/4, 1/4, 1/4, 3/4, 3/4, 9/8; 1/8, 1/2, 1/2, 1, 1; -1)",
    "2^(1/4)*(sqrt(2)+1)*gamma(3/8)^2/(pi^(3/2)*gamma(1/4))",
    tags=["P1", "specialization"], note="P1 specialization")
add("P1-example-twelfths", "6F5(-1/4, 1/12, 1/8, 1/6, 1/2, 7/8; -1/8, 1/4, 7/12, 5/8, 2/3; -1)",
    "(sqrt(6)+3)*gamma(1/4)*gamma(5/12)*gamma(11/24)^2/(6*sqrt(pi)*gamma(1/3)*gamma(3/8)^2)",
    tags=["P1", "specialization"], note="P1 specialization")
add("P1-example-48ths", "6F5(1/8, 1/6, 11/24, 11/24, 19/24, 17/16; 1/16, 1/3, 2/3, 2/3, 23/24; -1)",
    "32*(sqrt(2-sqrt(sqrt(3)+2))+2)*pi^(5/2)*gamma(13/48)^2/(3*sqrt(6-3*sqrt(sqrt(3)+2))"
    "*gamma(1/24)*gamma(1/8)*gamma(1/3)^3*gamma(7/16)^2)",
    tags=["P1", "specialization"], note="P1 specialization")
add("P2-example-7F6", "7F6(1/6, 1/6, 1/4, 2/3, 2/3, 3/4, 9/8; 1/8, 1/2, 7/12, 7/12, 13/12, 13/12; 1)",
    "gamma(1/3)^6*(sqrt(3) + 3*sqrt(sqrt(3)+2)*gamma(1/3)^2/(gamma(1/4)*gamma(5/12)))/(48*pi^3)",
    tags=["P2", "specialization"], note="P2 specialization")
add("P2-example-6F5-twelfths", "6F5(1/6, 1/4, 1/3, 2/3, 3/4, 5/6; 5/12, 1/2, 7/12, 11/12, 13/12; 1)",
    "(4*gamma(1/12)*gamma(5/12)*gamma(1/4)^2"
    " + sqrt(2)*gamma(1/24)*gamma(5/24)*gamma(7/24)*gamma(11/24))/(192*pi^2)",
    tags=["P2", "specialization"], note="P2 specialization")
add("P2-example-6F5-24ths", "6F5(1/6, 11/24, 2/3, 3/4, 23/24, 5/4; 1/2, 17/24, 11/12, 29/24, 17/12; 1)",
    "25*(-3*sqrt(3) + 6 + 2^(2/3)*pi*gamma(1/12)^2*gamma(5/12)^2/gamma(1/3)^6"
    " - 3*2^(5/6)*gamma(5/12)^2/(sqrt(pi)*gamma(1/3))"
    " + 9*gamma(1/3)^2*gamma(5/12)^2/(pi*gamma(1/4)^2))/216",
    tags=["P2", "specialization"], note="P2 specialization")
add("P3-example-16ths",
    "9F8(-1/16, 1/8, 1/8, 1/4, 7/16, 5/8, 5/8, 3/4, 17/16; 1/16, 3/8, 1/2, 1/2, 11/16, 7/8, 1, 19/16; 1)",
    "6*sqrt(2)*(sqrt((3-2*sqrt(2))*pi) + sqrt(pi)*gamma(3/16)*gamma(5/16)/(gamma(1/16)*gamma(7/16)))"
    "/gamma(1/4)^2",
    tags=["P3", "specialization"], note="P3 specialization")
add("P3-example-negative-16ths",
    "9F8(-1/4, -1/16, -1/16, 1/16, 1/4, 7/16, 7/16, 9/16, 7/8;"
    " -1/8, 3/16, 5/16, 5/16, 1/2, 11/16, 13/16, 13/16; 1)",
    "(pi*(sqrt(2-sqrt(2))+2)*gamma(5/16)^2 + 2*sqrt(2*pi)*gamma(1/4)*gamma(7/16)^2)"
    "/((sqrt(2)+2)^(3/2)*gamma(3/8)^2*gamma(7/16)^2)",
    tags=["P3", "specialization"], note="P3 specialization")
add("P3-example-24ths",
    "9F8(1/24, 1/12, 5/12, 5/12, 13/24, 7/12, 11/12, 11/12, 29/24; 5/24, 1/2, 1/2, 5/6, 7/8, 1, 4/3, 11/8; 1)",
    "3*sqrt(3)*gamma(1/3)*(3*2^(1/6)*gamma(1/12)*gamma(1/3)^2*gamma(5/12)^2/(pi*gamma(1/4))"
    " - sqrt(2-sqrt(2))*(sqrt(3)-3)*gamma(1/24)*gamma(1/8)*gamma(11/24)/gamma(7/24))"
    "/(70*2^(5/6)*pi*gamma(1/4)*gamma(5/12))",
    tags=["P3", "specialization"], note="P3 specialization")

S12 = ("12F11(1/8, 5/24, 7/24, 3/8, 11/24, 13/24, 5/8, 17/24, 19/24, 7/8, 23/24, 25/24;"
       " 1/4, 1/3, 5/12, 1/2, 7/12, 2/3, 3/4, 5/6, 11/12, 13/12, 7/6; 1)")
add("S-gamma-form", S12,
    "2/3*sqrt(2*(sqrt(2)+1)) + (2*gamma(1/4)^2/gamma(1/12)^2"
    " + 2^(1/3)*(2*sqrt(2)-sqrt(3)+1)*gamma(5/24)^2/gamma(1/24)^2)*gamma(1/3)^2/pi"
    " - 2*(sqrt(3)+1)*sqrt((2-sqrt(2))/pi)*gamma(1/4)*gamma(1/3)/(3^(5/8)*gamma(1/12))",
    tags=["specialization", "bonus-12F11"],
    note="analogue of P22 with DIST(3,1,-1) and P24, combined by DIST(2,0,1)")
_A = "(7*sqrt(2)+16*sqrt(3)+7*sqrt(6)+8*sqrt(3*sqrt(3)+6)+28)"
_B = "(-7*sqrt(2)-16*sqrt(3)+7*sqrt(6)-8*sqrt(6-3*sqrt(3))+28)"
add("S-radical-form", S12,
    ("-sqrt(A)/(6*sqrt(2)*(sqrt(3)+2)^(3/4)) - (sqrt(3)+2)^(3/4)/sqrt(6*A)"
     " + (2-sqrt(3))^(3/4)/sqrt(6*B) - sqrt(B)/(6*sqrt(2)*(2-sqrt(3))^(3/4))"
     " + sqrt(2-sqrt(2))*(2-sqrt(3))^(1/4)/(6*sqrt(2)) + sqrt(sqrt(2)+2)*(2-sqrt(3))^(1/4)/(6*sqrt(2))"
     " + sqrt(6-3*sqrt(2))*(2-sqrt(3))^(1/4)/(6*sqrt(2)) - sqrt(sqrt(2)+2)*(2-sqrt(3))^(1/4)/(2*sqrt(6))"
     " - 1/6*sqrt(sqrt(2)+2)*(sqrt(3)+2)^(1/4) - 1/6*sqrt(6-3*sqrt(2))*(sqrt(3)+2)^(1/4)"
     " + sqrt(2)/3^(1/4) + 1/6*(sqrt(3)+2)^(1/4)*sqrt(2-sqrt(2))"
     " + (sqrt(3)+2)^(1/4)*sqrt(2-sqrt(2))/(6*sqrt(2)) + sqrt(2-sqrt(2))/(3*2^(1/4))"
     " + (sqrt(3)+2)^(1/4)*sqrt(sqrt(2)+2)/(6*sqrt(2)) + 1/3*2^(1/4)*sqrt(sqrt(2)+2)"
     " + sqrt(sqrt(2)+2)/(3*2^(1/4)) + (sqrt(3)+2)^(1/4)*sqrt(sqrt(2)+2)/(2*sqrt(6))"
     " - 2*sqrt(2)/3 - sqrt(2)/3^(3/4) - sqrt(6-3*sqrt(2))*(sqrt(3)+2)^(1/4)/(6*sqrt(2))"
     " + 2/sqrt(3) - sqrt(sqrt(2)+2)*(sqrt(3)+2)^(1/4)/(2*sqrt(3))").replace("A", _A).replace("B", _B),
    tags=["specialization", "bonus-12F11"],
    note="DIST(12,2,1,{-1/2},{}) simplified to real radicals")

# ------------------------------------------------------ polylog and K/E DIST

L2 = "log(sqrt(2)+1)"
add("7F6-catalan",
    "7F6(3/4, 1, 1, 5/4, 3/2, 13/8, 5/3; 5/8, 2/3, 7/4, 7/4, 9/4, 9/4; 1)",
    f"3195*catalan/64 + 3105*Li2(1-sqrt(2))/128 - 3105*Li2(sqrt(2)-1)/128 + 3105*pi^2/512"
    f" - 5265/64 - 3105/128*{L2}^2 + 2115*{L2}/(64*sqrt(2))",
    tol=-18, tags=["polylog", "level-8"], note="DIST(2,1,1,{1/2,1,1,5/4,4/3},{1/4,1/3,5/2,5/2})")
add("8F7-dilog-sqrt2",
    "8F7(1/4, 3/4, 3/4, 1, 5/4, 5/4, 3/2, 7/4; 1/2, 7/4, 7/4, 2, 9/4, 9/4, 5/2; 1)",
    f"-675*Li2(1-sqrt(2))/4 + 675/4*Li2(-1/sqrt(2)) + 225*pi^2/16 + 2995/(8*sqrt(2)) + 375*pi/32"
    f" - 600 + 675*log(2)^2/32 + 675/8*{L2}*log(2) + 675/8*pi*log(2) - 825/16*{L2}",
    tol=-18, tags=["polylog", "level-8"], note="DIST(2,0,1,{1/2,3/2,2,5/2},{7/2,7/2,4})")
add("7F6-gamma-quarter-sixths",
    "7F6(1/4, 1/4, 1, 3/4, 3/4, 7/6, 7/6; 1/6, 1/6, 3/2, 3/2, 2, 2; 1)",
    "-1600/9 + 10336/(27*pi) - 80*sqrt(2)*gamma(1/4)^2/(27*pi^(3/2)) + 352*sqrt(2*pi)/gamma(1/4)^2",
    tol=-18, tags=["elliptic-gamma"], note="DIST(2,0,1,{1/2,1/2,1,4/3,4/3},{1/3,1/3,3,3})")
add("7F6-gamma-quarter-twelfths",
    "7F6(1, 3/4, 5/4, 5/4, 19/12, 5/3, 7/4; 7/12, 2/3, 3/2, 5/2, 2, 3; 1)",
    "320/7 - 19328/(315*pi) - 2224*sqrt(2)*gamma(1/4)^2/(63*pi^(3/2))"
    " + 52352*sqrt(2*pi)/(105*gamma(1/4)^2)",
    tol=-18, tags=["elliptic-gamma"], note="DIST(2,1,1,{1/2,1,7/6,4/3,3/2},{1/6,1/3,2,4})")
add("8F7-gamma-eighths",
    "8F7(1/4, 1/4, 1/4, 3/4, 3/4, 3/4, 7/6, 7/6; 1/6, 1/6, 1, 1, 3/2, 3/2, 3/2; 1)",
    "15/pi - 15*gamma(1/4)^4/(8*pi^3) + 35*gamma(1/8)^2*gamma(3/8)^2/(32*sqrt(2)*pi^3)"
    " + 264*pi*sqrt(2)/(gamma(1/8)^2*gamma(3/8)^2) - 264*pi/gamma(1/4)^4",
    tol=-18, tags=["elliptic-gamma"], note="DIST(2,0,1,{1/2,1/2,1/2,1,4/3,4/3},{1/3,1/3,2,2,2})")
add("9F8-gamma-eighths",
    "9F8(3/4, 3/4, 3/4, 1, 5/4, 5/4, 5/4, 13/8, 15/8; 5/8, 7/8, 3/2, 3/2, 2, 2, 2, 5/2; 1)",
    "4608/35 + 512/(105*pi) - 4288*gamma(1/4)^4/(315*pi^3)"
    " - 24*sqrt(2)*gamma(1/8)^2*gamma(3/8)^2/(5*pi^3) + 4096*pi/(5*gamma(1/4)^4)"
    " - 4096*sqrt(2)*pi/(45*gamma(1/8)^2*gamma(3/8)^2)",
    tol=-18, tags=["elliptic-gamma"], note="DIST(2,1,1,{1/2,1/2,1/2,1,5/4,7/4},{1/4,3/4,2,2,3})")
add("5F4-trilog-quarters",
    "5F4(1/4, 1/4, 1/4, 1/4, 3/4; 1/2, 5/4, 5/4, 5/4; 1)",
    f"-1/8*Li3(1/2-1/sqrt(2)) + 1/8*Li3(2*sqrt(2)-2) + pi^3/96 + log(2)^3/48 - 1/16*{L2}^3"
    f" + 1/16*{L2}*log(2)^2 + 1/8*pi*log(2)^2 + 1/16*{L2}^2*log(2) + 1/48*pi^2*log(2)"
    f" + 1/48*pi^2*{L2}",
    tol=-18, tags=["polylog", "level-8"], note="DIST(2,0,1,{1/2,1/2,1/2,1/2},{3/2,3/2,3/2})")
add("8F7-dilog-half-integers",
    "8F7(1/2, 1/2, 1, 1, 1, 5/4, 5/4, 7/4; 1/4, 3/2, 3/2, 2, 2, 2, 5/2; 1)",
    f"-88*Li2(1/2-1/sqrt(2)) - 84*sqrt(2) - 26*pi^2/3 + 128 + 148*log(2)^2 + 44*{L2}^2"
    f" - 88*{L2}*log(2) - 64*log(2) + 60*{L2}",
    tol=-18, tags=["polylog", "level-8"], note="DIST(2,0,1,{1,1,1,3/2,5/2},{1/2,3,3,4})")
add("9F8-trilog",
    "9F8(1/2, 1/2, 1/2, 1, 1, 1, 1, 9/8, 7/4; 1/8, 3/4, 3/4, 5/4, 3/2, 3/2, 2, 2; 1)",
    f"13/3*Li3(3-2*sqrt(2)) + 26/3*Li2(3-2*sqrt(2))*{L2} - 59*zeta(3)/12 - pi^2/4"
    f" + 52/9*{L2}^3 + 19/3*{L2}^2 - 26/3*log(2)*{L2}^2 + 2*sqrt(2)*{L2} + 1/6*pi^2*log(2)",
    tol=-18, tags=["polylog", "level-8"], note="DIST(2,0,1,{1,1,1,1,5/4,5/2},{1/4,3/2,3/2,3,3})")
add("6F5-trilog-ones",
    "6F5(1, 1, 1, 1, 5/4, 7/4; 3/2, 2, 2, 2, 2; 1)",
    f"-64/3*Li3(2*sqrt(2)-2) + 64/3*Li3(1/2-1/sqrt(2)) - 64/3*Li2(2*sqrt(2)-2)*{L2}"
    f" + 64/3*Li2(1/2-1/sqrt(2))*{L2} + 128*zeta(3)/3 + 224*log(2)^3/9 - 64/3*{L2}^3"
    f" + 32/3*{L2}^2*log(2)",
    tol=-18, tags=["polylog", "level-8"], note="DIST(2,1,1,{1,1,1,1,3/2},{2,2,2,2})")
add("6F5-tetralog",
    "6F5(1/2, 1/2, 1/2, 1/2, 1, 1; 3/4, 5/4, 3/2, 3/2, 3/2; 1)",
    f"2*Li4(1/2) - Li4(1/2-1/sqrt(2)) + Li4(2*sqrt(2)-2) - 1/2*Li2(1/2-1/sqrt(2))*log(2)^2"
    f" + 1/2*Li2(2*sqrt(2)-2)*log(2)^2 - 1/2*Li2(1/2-1/sqrt(2))*{L2}^2"
    f" + 5/2*Li2(2*sqrt(2)-2)*{L2}^2 + 2*Li2(3-2*sqrt(2))*{L2}^2"
    f" - Li2(1/2-1/sqrt(2))*{L2}*log(2) - Li2(2*sqrt(2)-2)*{L2}*log(2)"
    f" - 2*Li2(3-2*sqrt(2))*{L2}*log(2) - Li3(1/2-1/sqrt(2))*log(2) - Li3(2*sqrt(2)-2)*log(2)"
    f" - Li3(3-2*sqrt(2))*log(2) - Li3(1/2-1/sqrt(2))*{L2} + Li3(2*sqrt(2)-2)*{L2}"
    f" + zeta(3)*log(2) - 47*pi^4/1440 - 1/24*log(2)^4 + 35/8*{L2}^4 - 1/2*{L2}*log(2)^3"
    f" - 35/6*{L2}^3*log(2) + 1/6*pi^2*log(2)^2 + 9/4*{L2}^2*log(2)^2 - 1/3*pi^2*{L2}^2",
    tol=-18, tags=["polylog", "level-8"], note="DIST(2,0,1,{1,1,1,1,1},{3/2,2,2,2})")
add("5F4-at-1/64",
    "5F4(1/2, 1/2, 1/2, 1, 1; 3/4, 5/4, 3/2, 3/2; 1/64)",
    "-4*pi*im(Li2(3/4-I*sqrt(7)/4)) + 8*atan(sqrt(7))*im(Li2(3/4-I*sqrt(7)/4))"
    " + 4*re(Li3(3/4-I*sqrt(7)/4)) - 7*zeta(3)/2 - 1/3*log(2)^3 - pi^2*log(2)"
    " - 4*log(2)*atan(sqrt(7))^2 + 4*pi*log(2)*atan(sqrt(7))",
    tol=-18, tags=["polylog", "inside-disk"], note="DIST(2,0,1/64,{1,1,1,1,3/2},{2,2,2,2})")
_PHI = "log(sqrt(5)/2+1/2)"
add("6F5-at-1/16",
    "6F5(1/2, 1/2, 1/2, 1/2, 1, 1; 3/4, 5/4, 3/2, 3/2, 3/2; 1/16)",
    f"8*Li4(sqrt(5)/2-1/2) - 1/2*Li4(3/2-sqrt(5)/2) + 4*Li3(sqrt(5)/2-1/2)*{_PHI}"
    f" - 4*Li3(1/2-sqrt(5)/2)*{_PHI} - 47*pi^4/648 - 3/2*{_PHI}^4 + 1/3*pi^2*{_PHI}^2",
    tol=-18, tags=["polylog", "inside-disk", "level-5"],
    note="DIST(2,0,1/16,{1,1,1,1,1},{3/2,2,2,2})")
add("6F5-catalan-trilog",
    "6F5(1/4, 1/2, 1/2, 1/2, 1, 1; 3/4, 5/4, 5/4, 3/2, 3/2; 1)",
    f"4*catalan + 1/2*Li3(3-2*sqrt(2)) + Li2(3-2*sqrt(2))*{L2} + 3*zeta(3)/8 + 2/3*{L2}^3"
    f" - log(2)*{L2}^2 - 2*{L2}^2 - 1/4*pi^2*log(2)",
    tol=-18, tags=["polylog", "level-8"], note="bonus example from DIST and STIR")
add("6F5-dilog-quarters",
    "6F5(1/4, 1/4, 3/4, 3/4, 3/4, 5/4; 1/2, 7/4, 7/4, 9/4, 9/4; 1)",
    f"-1125*Li2(1-sqrt(2))/256 + 1125/256*Li2(-1/sqrt(2)) + 375*pi^2/1024 + 225/(64*sqrt(2))"
    f" + 225*pi/64 + 1125*log(2)^2/2048 + 1125/512*{L2}*log(2) - 2475/512*pi*log(2) - 225/32*{L2}",
    tol=-18, tags=["polylog", "level-8"], note="bonus example from DIST and STIR")

# --------------------------------------------------------------- miscellany

lower_24 = ", ".join(str(Fraction(k, 24)) for k in range(1, 24))
add("0F23-bessel", f"0F23(/; {lower_24}; 1)",
    "cos(24)/12 + cosh(24)/12 + 1/6*cos(12*sqrt(3))*cosh(12) + 1/6*cos(12*sqrt(2))*cosh(12*sqrt(2))"
    " + 1/6*cos(12)*cosh(12*sqrt(3)) + 1/6*cos(6*sqrt(2)-6*sqrt(6))*cosh(6*sqrt(2)+6*sqrt(6))"
    " + 1/6*cos(6*sqrt(2)+6*sqrt(6))*cosh(6*sqrt(2)-6*sqrt(6))",
    tol=-20, tags=["bessel", "mittag-leffler"], note="DIST(12,0,1,{},{1/2}) of a Bessel 0F1")
add("6F5-central-binomial-1/4",
    "6F5(5/4, 7/4, 2, 2, 2, 2; 1, 1, 1, 1, 3/2; 1/4)", "31/(2592*sqrt(6)) + 4921/(96*sqrt(2))",
    tol=-25, tags=["binomial"], note="central binomial sum with n^m weights after DIST")
add("6F5-central-binomial-1/64",
    "6F5(3/2, 2, 2, 2, 2, 2; 1, 1, 1, 5/4, 7/4; 1/64)",
    "617416/583443 + 19*log(2)/729 + 5298*acot(sqrt(7))/(2401*sqrt(7))",
    tol=-25, tags=["binomial"], note="inverse central binomial sum with n^m weights after DIST")
add("binomial-3n-n-series", "2F1(1/3, 2/3; 1/2; 27*x/4)",
    "2*cos(acos(1-27*x/2)/6)/sqrt(4-27*x)",
    symbols="x", where=[("x", ">", "-4/27"), ("4/27-x", ">", "0")], samples=10, tol=-20,
    tags=["binomial"], note="generating function of binomial(3n, n)")
add("4F3-at-729/1024",
    "4F3(1/6, 1/3, 2/3, 5/6; 1/4, 1/2, 3/4; 729/1024)",
    "2*(2/(3*sqrt(3)+sqrt(59)))^(1/3)/sqrt(59) + (3*sqrt(6)+sqrt(118))^(1/3)/sqrt(118)"
    " + 2*sqrt(2/5*(3*sqrt(5)/16+7/16))",
    tol=-25, tags=["binomial"], note="DIST of the binomial(3n, n) series at a special value")
add("5F4-arctan-sine-cubed",
    "5F4(1/2, 2/3, 1, 1, 4/3; 5/6, 7/6, 3/2, 3/2; -1)",
    "3*pi^2/32 + 3/4*log(sqrt(2)+1)^2 - 3/8*log(2-sqrt(3))^2",
    tol=-20, tags=["level-12"], note="integral of arctan(sin(x)^3) over a quarter period")
add("6F5-elliptic-K-squared",
    "6F5(1/8, 1/4, 3/8, 5/8, 3/4, 7/8; 1/2, 1/2, 1/2, 1, 1; 1)",
    "(32*pi*sqrt(2*sqrt(2)-2)*K(1/2-sqrt(1/sqrt(2)-1/2))^2 + gamma(1/8)^2*gamma(3/8)^2)/(16*pi^3)",
    tags=["elliptic"], note="DIST(2,0,1,{1/4,1/2,3/4},{1,1})")
_K7 = "K(1/2-sqrt(65)/16)"
add("6F5-elliptic-at-1/4096",
    "6F5(3/4, 3/4, 3/4, 5/4, 5/4, 5/4; 1/2, 1, 1, 3/2, 3/2; 1/4096)",
    f"512*{_K7}^2/pi^2 + 4096*{_K7}^2/(sqrt(65)*pi^2) - 8192*{_K7}*E(1/2-sqrt(65)/16)/(sqrt(65)*pi^2)"
    " + 2048/(21*pi) - 160*gamma(1/7)^2*gamma(2/7)^2*gamma(4/7)^2/(21*sqrt(7)*pi^4)",
    tags=["elliptic", "inside-disk"], note="DIST(2,0,1/4096,{3/2,3/2,3/2},{2,2}) with K at k_7")
add("4F3-K-product",
    "4F3(1/4, 1/4, 3/4, 3/4; 1/2, 1, 1; z)",
    "4/pi^2*K(1/2-1/(2*sqrt(-2*z-2*sqrt(z^2-z)+1)))*K(1/2-1/2*sqrt(-2*z-2*sqrt(z^2-z)+1))",
    symbols="z", where=DISK, tol=-15, tags=["elliptic"],
    note="4F3 as a product of two complete elliptic integrals")
add("8F7-K-products",
    "8F7(1/8, 1/8, 3/8, 3/8, 5/8, 5/8, 7/8, 7/8; 1/4, 1/2, 1/2, 1/2, 3/4, 1, 1; 1)",
    "2*(K(1-1/sqrt(2))*K(-1/sqrt(2)) + K(1/2+I/2)*K(1/2-I/2))/pi^2",
    tags=["elliptic"], note="DIST(2,0,1,{1/4,1/4,3/4,3/4},{1/2,1,1}) of the K product formula")
add("2F1-PQ|O-elementary", "2F1(5/4, 7/4; 3/2; z)",
    "((1-sqrt(z))^(-3/2) - (sqrt(z)+1)^(-3/2))/(3*sqrt(z))",
    symbols="z", where=DISK, tol=-20, tags=["elementary", "PQ|O"], note="class PQ|O 2F1")
add("2F1-quarter-three-quarter-half", "2F1(1/4, 3/4; 1/2; z)",
    "sqrt(sqrt(1-z)+1)/sqrt(2-2*z)",
    symbols="z", where=DISK, tol=-20, tags=["elementary", "PQ|O"], note="class PQ|O 2F1")
add("2F1-pfaff-arctan", "2F1(3/4, 3/4; 7/4; z)",
    "-3*(atan((z/(z-1))^(1/4)) - atanh((z/(z-1))^(1/4)))/(2*(-z)^(3/4))",
    symbols="z", where=DISK, tol=-20, tags=["elementary"],
    note="Pfaff transform to arctangent and hyperbolic arctangent")
add("5F4-beta-kernel",
    "5F4(1, 1, 1, 5/4, 7/4; 3/2, 3/2, 2, 2; 1)",
    f"-8/3*Li2(3-2*sqrt(2)) + 2*pi^2/9 - 8/3*log(2)^2 - 8/3*{L2}^2 + 16/3*{L2}*log(2)",
    tol=-18, tags=["polylog", "level-8"], note="beta-kernel integral of a 4F3")
add("7F6-pfd-quarters",
    "7F6(1/4, 1/4, 3/4, 3/4, 1, 1, 1; 1/2, 5/4, 7/4, 2, 2, 2; 1)",
    f"-8/3*Li2((2-sqrt(2))/4) + 8/3*Li2((2+sqrt(2))/4) + 32*Li2(1/sqrt(2))/3 - 2*pi^2"
    f" - 664*sqrt(2)/9 - 100*pi/9 + 1280/9 + 68*log(2)^2/3 - 8*{L2}*log(2) - 832*log(2)/9"
    f" + 72*{L2}",
    tol=-18, tags=["polylog", "level-8"], note="PFD with 4F3 and 5F4 values at 1")
_L16 = "log(sqrt(2)+sqrt(sqrt(2)+1))"
add("7F6-level-16",
    "7F6(5/8, 7/8, 1, 1, 1, 9/8, 11/8; 3/4, 5/4, 3/2, 2, 2, 2; 1)",
    f"-256/9*Li2(1/4*(2-sqrt(2))) + 256/9*Li2(1/4*(sqrt(2)+2)) - 256/9*Li2(1/4*(2-sqrt(2*sqrt(2)+2)))"
    f" + 1024*Li2(1/sqrt(2))/9 + 512/9*Li2(-sqrt(2*sqrt(2)-2)) - 512/9*Li2(sqrt(2*sqrt(2)-2))"
    f" - 256/9*Li2(4/(sqrt(2*sqrt(2)+2)+2)) - 13312/81*sqrt(2*(sqrt(2)+1)) - 64*pi^2/27"
    f" - 13312*sqrt(2)/81 - 2048*sqrt(sqrt(2)+1)/81 + 57344/81 + 1312*log(2)^2/3"
    f" - 128/9*{L2}^2 - 128/9*{_L16}^2 - 128*{L2}*log(2) - 128/3*{_L16}*log(2)"
    f" - 20480*log(2)/27 + 2560/9*{L2} + 5120/27*{_L16} - 256/9*{L2}*{_L16}",
    tol=-18, tags=["polylog", "level-16"], note="DIST(2,1,1,{1/4,3/4,1,1,1},{1/2,2,2,2})")
add("3F2-three-quarters-at-half",
    "2^(3/4)*3F2(3/4, 3/4, 3/4; 7/4, 7/4; 1/2)",
    f"(9/2+9*I/2)*Li2(-I*(sqrt(2)-1)) + (9/2-9*I/2)*Li2(I*(sqrt(2)-1)) - 9/8*Li2(3-2*sqrt(2))"
    f" - 3*pi^2/4 + 9/8*{L2}^2 - 9/2*log(2)*{L2} + 9/8*pi*{L2} + 9/4*pi*log(2)",
    tol=-20, tags=["polylog", "level-8", "inside-disk"], note="Pfaff transform and integration")

# ------------------------------------------------------------ entries found to disagree
# name -> measured discrepancy; filled in after running the corpus.
DISPUTED_ENTRIES: dict = {}


# -------------------------------------------------------------------- build

def _convergence_constraints(lhs, rhs) -> list:
    out = []
    for side in (lhs, rhs):
        for node in hyp_nodes(side):
            s = node.series
            if s.is_concrete or s.p != s.q + 1:
                continue
            z = rational_value(canonical(s.z))
            excess = s.excess()
            if not isinstance(excess, Affine):
                continue
            if z == 1:
                out.append(ConstraintPredicate(excess, ">", MARGIN_AT_ONE))
            elif z == -1:
                out.append(ConstraintPredicate(excess, ">", MARGIN_AT_MINUS_ONE))
    seen, unique = set(), []
    for c in out:
        if c not in seen:
            seen.add(c)
            unique.append(c)
    return unique


def build() -> list:
    entries = []
    for d in ENTRIES:
        lhs, rhs = parse_expr(d["lhs"]), parse_expr(d["rhs"])
        syms = tuple(d["symbols"])
        constraints = [ConstraintPredicate(parse_affine(f), rel, parse_affine(b))
                       for f, rel, b in d["where"]]
        if syms:
            constraints += [c for c in _convergence_constraints(lhs, rhs) if c not in constraints]
        ident = Identity(d["name"], lhs, rhs, syms, tuple(constraints), d["note"])
        disputed = DISPUTED_ENTRIES.get(d["name"], "")
        entries.append(CorpusEntry(
            ident, tuple(d["tags"]), PARAMETRIC if syms else FIXED, d["samples"] if syms else 0,
            d["tol"], DISPUTED if disputed else ACTIVE, disputed))
    for e in entries:
        e.validate()
    return entries


def render() -> str:
    return dump_corpus(build())


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=OUT)
    args = ap.parse_args()
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text(render())
    print(f"wrote {len(ENTRIES)} entries to {args.out}")


if __name__ == "__main__":
    main()
