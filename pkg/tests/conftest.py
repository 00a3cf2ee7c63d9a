import random
from fractions import Fraction

import pytest
import sympy

from apolar.forms import Form, monomials

X, Y, Z = sympy.symbols("x y z")
SYMBOLS = {3: (X, Y, Z), 2: (Y, Z)}


def random_form(rng, nvars, degree, max_terms=None, box=5, rational=False):
    monos = monomials(nvars, degree)
    count = rng.randint(1, max_terms or len(monos))
    terms = {}
    for mono in rng.sample(monos, min(count, len(monos))):
        c = rng.choice([i for i in range(-box, box + 1) if i])
        if rational:
            c = Fraction(c, rng.randint(1, box))
        terms[mono] = c
    return Form(nvars, degree, terms)


def to_sympy(f):
    syms = SYMBOLS[f.nvars]
    expr = sympy.Integer(0)
    for mono, c in f.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for s, e in zip(syms, mono):
            term *= s**e
        expr += term
    return sympy.expand(expr)


def naive_rank(rows):
    """Plain Gaussian elimination over Fraction, written independently of apolar.linalg."""
    m = [[Fraction(v) for v in r] for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(rank + 1, len(m)):
            f = m[i][c] / m[rank][c]
            m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def brute_force_hf(f, n):
    """Enumerate every order-n partial derivative with sympy and row-reduce."""
    if not f:
        return 0
    syms = SYMBOLS[f.nvars]
    expr = to_sympy(f)
    derivs = []
    for op in monomials(f.nvars, n):
        d = expr
        for s, e in zip(syms, op):
            if e:
                d = sympy.diff(d, s, e)
        derivs.append(sympy.expand(d))
    cols = monomials(f.nvars, f.degree - n)
    rows = []
    for d in derivs:
        poly = sympy.Poly(d, *syms) if d != 0 else None
        rows.append([poly.coeff_monomial(tuple(c)) if poly else 0 for c in cols])
    return sympy.Matrix(rows).rank() if rows else 0


@pytest.fixture
def rng():
    return random.Random(20241016)
