"""Apolar action, catalecticants and Hilbert functions of apolar algebras.

A dual monomial a^i b^j c^k acts on S as the differential operator
d^(i+j+k) / dx^i dy^j dz^k, with no normalizing factorials.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ApolarError, ArityError, ZeroFormError
from .forms import DUAL, PRIMAL, Form, clear_denominators, falling_factorial, monomials
from .linalg import QMatrix, matrix_rank, nullspace, rref


@dataclass(frozen=True)
class ApolarProfile:
    degree: int
    hf: tuple[int, ...]
    apolar_length: int

    def __post_init__(self):
        if len(self.hf) != self.degree + 1:
            raise ApolarError("Hilbert function must have degree + 1 values")
        if sum(self.hf) != self.apolar_length:
            raise ApolarError("apolar length must equal the sum of the Hilbert function")

    def __str__(self):
        return " ".join(map(str, self.hf)) + f" (al={self.apolar_length})"


def _derivative_coeff(op: tuple, mono: tuple) -> int:
    c = 1
    for i, e in zip(op, mono):
        if i > e:
            return 0
        c *= falling_factorial(e, i)
    return c


def apolar_action(theta: Form, f: Form) -> Form:
    """The derivative of ``f`` by the dual form ``theta``.

    When ``theta`` has larger degree than ``f`` the result is the zero form
    of nominal degree 0.
    """
    if theta.nvars != f.nvars:
        raise ArityError(f"variable counts differ: {theta.nvars} vs {f.nvars}")
    if f.ring != PRIMAL:
        raise ArityError("apolar action needs a primal form to act on")
    out_degree = f.degree - theta.degree
    if out_degree < 0:
        return Form.zero(f.nvars, 0)
    terms: dict[tuple, Fraction] = {}
    for op, a in theta.items():
        for mono, c in f.items():
            k = _derivative_coeff(op, mono)
            if k:
                m = tuple(e - i for e, i in zip(mono, op))
                terms[m] = terms.get(m, 0) + a * c * k
    return Form(f.nvars, out_degree, terms)


def _check_order(f: Form, n: int) -> None:
    if not 0 <= n <= f.degree:
        raise ApolarError(f"order {n} outside 0..{f.degree}")


def _rows(nvars, degree, terms, n, zero):
    cols = monomials(nvars, degree - n)
    index = {m: j for j, m in enumerate(cols)}
    rows = []
    for op in monomials(nvars, n):
        row = [zero] * len(cols)
        for mono, c in terms:
            k = _derivative_coeff(op, mono)
            if k:
                row[index[tuple(e - i for e, i in zip(mono, op))]] = c * k
        rows.append(row)
    return rows


def catalecticant_rows(f: Form, n: int) -> list[list[Fraction]]:
    """Rows of the n-th catalecticant: row per monomial of T_n, column per monomial of S_(d-n)."""
    return _rows(f.nvars, f.degree, f.items(), n, Fraction(0))


def catalecticant(f: Form, n: int) -> QMatrix:
    """Matrix of the map T_n -> S_(d-n), theta -> d_theta f."""
    _check_order(f, n)
    ncols = len(monomials(f.nvars, f.degree - n))
    return QMatrix.from_rows(catalecticant_rows(f, n), ncols)


def hilbert_value(f: Form, n: int) -> int:
    """Dimension of the degree-n part of the apolar algebra of ``f`` (0 outside 0..d)."""
    if not 0 <= n <= f.degree or not f:
        return 0
    # an integer multiple of f has the same catalecticant ranks
    terms = clear_denominators(f).items()
    return matrix_rank(_rows(f.nvars, f.degree, terms, n, 0))


def apolar_profile(f: Form) -> ApolarProfile:
    if not f:
        raise ZeroFormError("apolar profile of the zero form is undefined")
    hf = tuple(hilbert_value(f, n) for n in range(f.degree + 1))
    return ApolarProfile(f.degree, hf, sum(hf))


def apolar_length(f: Form) -> int:
    """Total dimension of the apolar algebra; 0 for the zero form."""
    if not f:
        return 0
    return apolar_profile(f).apolar_length


def derivative_space_basis(f: Form, n: int) -> list[Form]:
    """Reduced-row-echelon basis of {d_theta f : theta in T_n}."""
    _check_order(f, n)
    cols = monomials(f.nvars, f.degree - n)
    reduced, _ = rref(catalecticant_rows(f, n))
    return [Form(f.nvars, f.degree - n, zip(cols, row)) for row in reduced]


def apolar_ideal_component(f: Form, n: int) -> list[Form]:
    """Basis of the degree-n part of the annihilator of ``f`` in the dual ring."""
    if n < 0:
        raise ApolarError("order must be nonnegative")
    ops = monomials(f.nvars, n)
    if n > f.degree or not f:
        return [Form.monomial(op, 1, DUAL) for op in ops]
    # kernel of v -> v^T C, i.e. nullspace of the transpose
    rows = catalecticant_rows(f, n)
    ncols = len(monomials(f.nvars, f.degree - n))
    transposed = [[rows[i][j] for i in range(len(ops))] for j in range(ncols)]
    basis = nullspace(transposed, len(ops))
    return [Form(f.nvars, n, zip(ops, v), DUAL) for v in basis]
