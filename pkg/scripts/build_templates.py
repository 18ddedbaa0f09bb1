"""Generate src/hyperdist/data/templates.json from the text table below.

Each template is a series in the parser's text syntax, a closed form, and
side conditions ``(form, relation, bound)``. Lower parameters automatically
get a non-pole condition when the file is loaded, so they are not listed.

Run ``python3 scripts/build_templates.py`` after editing; the test suite
checks that the shipped file matches this table.
"""

from __future__ import annotations

import argparse
import json
from pathlib import Path

from hyperdist.expr import series_to_json, to_json
from hyperdist.identity import ConstraintPredicate
from hyperdist.parse import parse_affine, parse_expr, parse_series

OUT = Path(__file__).resolve().parents[1] / "src" / "hyperdist" / "data" / "templates.json"

# (id, variant, symbols, series, closed form, side conditions, source)
TEMPLATES = [
    ("Gauss1", "", "a b c", "2F1(a, b; c; 1)",
     "gamma(c)*gamma(c-a-b)/(gamma(c-a)*gamma(c-b))",
     [("c-a-b", ">", "0")], "Gauss"),
    ("KummerMinus1", "", "a b", "2F1(a, b; 1+a-b; -1)",
     "gamma(1+a-b)*gamma(1+a/2)/(gamma(1+a)*gamma(1+a/2-b))",
     [("1-b", ">", "0")], "Kummer"),
    ("KummerHalf", "gauss2", "a b", "2F1(a, b; (a+b+1)/2; 1/2)",
     "sqrt(pi)*gamma((a+b+1)/2)/(gamma((a+1)/2)*gamma((b+1)/2))",
     [], "Gauss second summation"),
    ("KummerHalf", "bailey", "a c", "2F1(a, 1-a; c; 1/2)",
     "gamma(c/2)*gamma((c+1)/2)/(gamma((c+a)/2)*gamma((1+c-a)/2))",
     [], "Bailey"),
    ("Dixon", "", "a b c", "3F2(a, b, c; 1+a-b, 1+a-c; 1)",
     "gamma(1+a/2)*gamma(1+a-b)*gamma(1+a-c)*gamma(1+a/2-b-c)"
     "/(gamma(1+a)*gamma(1+a/2-b)*gamma(1+a/2-c)*gamma(1+a-b-c))",
     [("a/2-b-c", ">", "-1")], "Dixon"),
    ("Watson", "", "a b c", "3F2(a, b, c; (a+b+1)/2, 2*c; 1)",
     "sqrt(pi)*gamma(c+1/2)*gamma((a+b+1)/2)*gamma(c-(a+b-1)/2)"
     "/(gamma((a+1)/2)*gamma((b+1)/2)*gamma(c-(a-1)/2)*gamma(c-(b-1)/2))",
     [("2*c-a-b", ">", "-1")], "Watson"),
    ("Whipple", "", "a c e", "3F2(a, 1-a, c; e, 1+2*c-e; 1)",
     "pi*2^(1-2*c)*gamma(e)*gamma(1+2*c-e)"
     "/(gamma((a+e)/2)*gamma((a+1+2*c-e)/2)*gamma((1-a+e)/2)*gamma((2-a+2*c-e)/2))",
     [("c", ">", "0")], "Whipple"),
    ("ClausenSquare", "", "a b", "3F2(2*a, 2*b, a+b; 2*a+2*b, a+b+1/2; 1)",
     "(sqrt(pi)*gamma(a+b+1/2)/(gamma(a+1/2)*gamma(b+1/2)))^2",
     [], "Clausen product at z = 1 with the Gauss value of the square root"),
    ("DougallL1", "", "a b c", "4F3(a, a/2+1, b, c; a/2, a-b+1, a-c+1; 1)",
     "gamma((a+1)/2)*gamma(a-b+1)*gamma(a-c+1)*gamma((a+1)/2-b-c)"
     "/(gamma(a+1)*gamma((a+1)/2-b)*gamma((a+1)/2-c)*gamma(a-b-c+1))",
     [("a-2*b-2*c+1", ">", "0")], "L1"),
    ("DougallL2", "", "a b c", "4F3(a, a/2+1, b, c; a/2, a-b+1, a-c+1; -1)",
     "gamma(a-b+1)*gamma(a-c+1)/(gamma(a+1)*gamma(a-b-c+1))",
     [("a-2*b-2*c+2", ">", "0")], "L2"),
    ("DougallL3", "", "a b c d", "5F4(a/2+1, a, b, c, d; a/2, a-b+1, a-c+1, a-d+1; 1)",
     "gamma(a-b+1)*gamma(a-c+1)*gamma(a-d+1)*gamma(a-b-c-d+1)"
     "/(gamma(a+1)*gamma(a-b-c+1)*gamma(a-b-d+1)*gamma(a-c-d+1))",
     [("a-b-c-d+1", ">", "0")], "L3"),
    ("DougallL4", "", "a b c d e",
     "6F5(a/2+1, a, b, c, d, e; a/2, a-b+1, a-c+1, a-d+1, a-e+1; -1)",
     "gamma(a-d+1)*gamma(a-e+1)/(gamma(a+1)*gamma(a-d-e+1))"
     "*3F2(a-b-c+1, d, e; a-b+1, a-c+1; 1)",
     [("3*a-2*b-2*c-2*d-2*e+4", ">", "0"), ("a-d-e+1", ">", "0")], "L4"),
    ("K1", "+", "a", "2F1(a, (a+1)/3; 2*(a+1)/3; root(6, 1))",
     "3^(a/2-1)*exp(I*pi*a/6)*gamma(a/3)*gamma(2*(a+1)/3)/(gamma(2/3)*gamma(a))",
     [("a", ">", "0"), ("1/2-a", ">", "0")], "K1"),
    ("K1", "-", "a", "2F1(a, (a+1)/3; 2*(a+1)/3; root(6, 5))",
     "3^(a/2-1)*exp(-I*pi*a/6)*gamma(a/3)*gamma(2*(a+1)/3)/(gamma(2/3)*gamma(a))",
     [("a", ">", "0"), ("1/2-a", ">", "0")], "K1"),
    ("K2", "", "a", "2F1(a+1/2, 1/2-a; 1-a; (1-sqrt(2))/2)",
     "sqrt(pi)*2^(2*a-1/4)*(sqrt(2)-1)^a*gamma(1-a)/(gamma(5/8-a/2)*gamma(7/8-a/2))",
     [("a", ">", "0"), ("1/2-a", ">", "0")], "K2"),
    ("K3", "", "a", "3F2(1/2, 1/2-a, a+1/2; 1-a, a+1; 1)",
     "pi^2*a*csc(pi*a)/(gamma(3/4)^2*gamma(3/4-a)*gamma(a+3/4))",
     [("a", ">", "0"), ("1/2-a", ">", "0")], "K3"),
    ("K4", "", "a", "3F2(1/2, 1/2-a, a+1/2; 1-a, a+1; -1)",
     "pi^2*a*csc(pi*a)/(sqrt(2)*gamma(5/8-a/2)*gamma(7/8-a/2)*gamma(a/2+5/8)*gamma(a/2+7/8))",
     [("a", ">", "0"), ("1/2-a", ">", "0")], "K4"),
    # outside the closed theorem set: the arcsin-squared series, symbolic in z
    ("ArcSinSquare", "", "z", "3F2(1, 1, 1; 3/2, 2; z)", "asin(sqrt(z))^2/z", [],
     "Taylor series of arcsin squared"),
]


def build() -> list:
    out = []
    for tid, variant, symbols, series, rhs, conds, source in TEMPLATES:
        out.append({
            "id": tid,
            "variant": variant,
            "symbols": symbols.split(),
            "series": series_to_json(parse_series(series)),
            "rhs": to_json(parse_expr(rhs)),
            "side_conditions": [
                ConstraintPredicate(parse_affine(f), rel, parse_affine(b)).to_json()
                for f, rel, b in conds],
            "source": source,
        })
    return out


def render() -> str:
    return json.dumps({"schema": 1, "templates": build()}, indent=1) + "\n"


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=OUT)
    args = ap.parse_args()
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text(render())
    print(f"wrote {len(TEMPLATES)} templates to {args.out}")


if __name__ == "__main__":
    main()
