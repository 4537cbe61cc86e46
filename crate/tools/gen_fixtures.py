#!/usr/bin/env python3
"""Generate OEIS-format b-file fixtures used by `seqkit verify-oeis`.

Values are computed with sympy, independently of the Rust code under test:
reversion coefficients come from the Lagrange inversion formula
b_n = (1/n) [x^{n-1}] (x/F(x))^n, binomial series from sympy expansion,
and super Catalan numbers from the closed form
S(m,n) = (2m)! (2n)! / (m! n! (m+n)!).

Run from the repository root:  python3 tools/gen_fixtures.py
"""

import os
from sympy import symbols, series, Rational, factorial, binomial, sqrt, Poly

x = symbols("x")
OUT = os.path.join(os.path.dirname(__file__), "..", "fixtures")

# Table of (OEIS id, polynomial whose reversion gives the sequence).
REVERSIONS = {
    "A000108": x - x**2,
    "A001002": x - x**2 - x**3,
    "A192945": x - 2 * x**2 - x**3,
    "A250886": x - x**2 - 2 * x**3,
    "A120590": x - 3 * x**2 - x**3,
    "A276310": x - 2 * x**2 - 2 * x**3,
    "A276314": x - x**2 - 3 * x**3,
    "A276315": x - 3 * x**2 - 2 * x**3,
    "A250887": x - 2 * x**2 - 3 * x**3,
    "A006013": x - 2 * x**2 + x**3,
    "A005159": x - 3 * x**2 + x**3,
    "A085614": x - 2 * x**2 + 2 * x**3,
    "A276316": x - 4 * x**2 + x**3,
}

N_TERMS = 30


def lagrange_revert_terms(f, n_terms):
    """Coefficients h_0..h_{n_terms-1} where revert(f) = sum h_n x^{n+1}."""
    terms = []
    ratio = x / f  # unit power series
    for n in range(1, n_terms + 1):
        expr = series(ratio**n, x, 0, n).removeO()
        coeff = Poly(expr, x).coeff_monomial(x ** (n - 1)) if n > 1 else expr.subs(x, 0)
        terms.append(Rational(coeff, n))
    return terms


def write_bfile(oeis_id, terms, offset=0, comment=None):
    path = os.path.join(OUT, f"b{oeis_id[1:]}.txt")
    with open(path, "w") as fh:
        if comment:
            fh.write(f"# {comment}\n")
        for i, t in enumerate(terms):
            assert t == int(t), f"{oeis_id}: non-integer term {t}"
            fh.write(f"{offset + i} {int(t)}\n")
    print(f"wrote {path} ({len(terms)} terms)")


def binomial_series_terms(alpha, c, n_terms):
    return [binomial(alpha, n) * Rational(c) ** n for n in range(n_terms)]


def main():
    os.makedirs(OUT, exist_ok=True)

    for oeis_id, f in REVERSIONS.items():
        terms = lagrange_revert_terms(f, N_TERMS)
        write_bfile(oeis_id, terms, comment=f"reversion of {f}, leading zero dropped")

    # A283150 / A283151: column 0 of R((1-9x)^(-1/3), -x/(1-9x)) and its dual.
    write_bfile("A283150", binomial_series_terms(Rational(-1, 3), -9, 15),
                comment="expansion of (1-9x)^(-1/3)")
    write_bfile("A283151", binomial_series_terms(Rational(-2, 3), -9, 15),
                comment="expansion of (1-9x)^(-2/3)")

    # A046521: triangle [x^n] g f^k with g = 1/sqrt(1-4x), f = x/(1-4x),
    # read by rows.
    rows = 15
    g = 1 / sqrt(1 - 4 * x)
    f = x / (1 - 4 * x)
    entries = []
    for n in range(rows):
        gf = series(g, x, 0, rows).removeO()
        fk = Rational(1)
        for k in range(n + 1):
            expr = series(g * f**k, x, 0, n + 1 + 1).removeO()
            p = Poly(expr, x)
            entries.append(p.coeff_monomial(x**n) if n > 0 else expr.subs(x, 0))
    write_bfile("A046521", entries,
                comment="triangle [x^n](g f^k), g=1/sqrt(1-4x), f=x/(1-4x), read by rows")

    # A068555: super Catalan square array S(m,n), read by antidiagonals
    # (S(0,0), S(0,1), S(1,0), S(0,2), S(1,1), S(2,0), ...).
    def S(m, n):
        return Rational(factorial(2 * m) * factorial(2 * n),
                        factorial(m) * factorial(n) * factorial(m + n))

    entries = []
    for d in range(11):
        for m in range(d + 1):
            entries.append(S(m, d - m))
    write_bfile("A068555", entries,
                comment="super Catalan S(m,n)=(2m)!(2n)!/(m!n!(m+n)!), antidiagonals")


if __name__ == "__main__":
    main()
