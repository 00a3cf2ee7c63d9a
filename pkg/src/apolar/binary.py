"""Binary forms: exact Waring rank, squarefreeness, z-divisibility.

Also hosts the monomial rank formula used as the comparison point for the
ternary family.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .apolarity import apolar_ideal_component
from .errors import ApolarError, ArityError, ZeroFormError
from .forms import Form, add, as_rational, linear_power, monomials, scale


@dataclass(frozen=True)
class BinaryRankCertificate:
    rank: int
    min_generator_degree: int
    witness_generator: Form
    squarefree_witness_found: bool

    def to_dict(self) -> dict:
        return {
            "rank": self.rank,
            "min_generator_degree": self.min_generator_degree,
            "witness_generator": str(self.witness_generator),
            "squarefree_witness_found": self.squarefree_witness_found,
        }


def _require_binary(f: Form) -> None:
    if f.nvars != 2:
        raise ArityError(f"expected a binary form, got {f.nvars} variables")
    if not f:
        raise ZeroFormError("operation undefined for the zero form")


# univariate helpers; coefficient lists are low degree first


def _trim(p: list[Fraction]) -> list[Fraction]:
    while p and not p[-1]:
        p.pop()
    return p


def _poly_rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = list(a)
    lead = b[-1]
    while len(a) >= len(b):
        q = a[-1] / lead
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] -= q * c
        a.pop()
        _trim(a)
    return a


def _poly_gcd_degree(a: list[Fraction], b: list[Fraction]) -> int:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_rem(a, b)
    return len(a) - 1


def squarefree(f: Form) -> bool:
    """True iff the binary form has no repeated linear factor."""
    _require_binary(f)
    m = min(mono[1] for mono, _ in f.items())
    if m >= 2:
        return False
    # dehomogenize the cofactor f / z^m at z = 1; its degree is deg f - m
    p = [Fraction(0)] * (f.degree - m + 1)
    for (i, j), c in f.items():
        p[i] = c
    _trim(p)
    if len(p) <= 2:
        return True
    dp = [i * c for i, c in enumerate(p)][1:]
    return _poly_gcd_degree(p, dp) == 0


def z_divisibility(f: Form) -> int:
    """Largest r with f in z^r R_(d-r)."""
    _require_binary(f)
    return min(mono[-1] for mono, _ in f.items())


def binary_rank(f: Form) -> BinaryRankCertificate:
    """Waring rank of a binary form by Sylvester's apolarity algorithm."""
    _require_binary(f)
    d = f.degree
    if d < 1:
        raise ApolarError("binary rank needs degree >= 1")
    e = 1
    while True:
        component = apolar_ideal_component(f, e)
        if component:
            break
        e += 1
    if len(component) == 1:
        g = component[0]
        if squarefree(g):
            return BinaryRankCertificate(e, e, g, True)
        return BinaryRankCertificate(d + 2 - e, e, g, False)
    # Pencil of two generators (2e = d + 2).  The discriminant of the pencil
    # member has degree <= 2(e-1), so if it is not identically zero it is
    # nonzero at one of 2(e-1)+2 distinct members.
    g1, g2 = component[0], component[1]
    members = [g2] + [add(g1, scale(t, g2)) for t in range(2 * (e - 1) + 1)]
    for g in members:
        if squarefree(g):
            return BinaryRankCertificate(e, e, g, True)
    return BinaryRankCertificate(d + 2 - e, e, g1, False)


def pairwise_independent(bases: Sequence[Sequence]) -> bool:
    """No two binary linear forms are proportional (2x2 determinants)."""
    for (a, b), (c, d) in combinations(bases, 2):
        if as_rational(a) * as_rational(d) - as_rational(b) * as_rational(c) == 0:
            return False
    return all(any(as_rational(v) for v in base) for base in bases)


@dataclass(frozen=True)
class PreVerdict:
    form: Form
    divisible: bool
    proportional_to_power: bool
    nonzero_summands: int


def prop_pre_check(r: int, coeffs: Sequence, base_forms: Sequence[Sequence], d: int) -> PreVerdict:
    """Evaluate F = sum c_i l_i^d and report the quantities compared by the
    z-power divisibility proposition for binary power sums.

    ``base_forms`` are coefficient pairs (for y and z).  Zero coefficients
    are allowed.
    """
    if not 0 <= r <= d:
        raise ApolarError(f"need 0 <= r <= d, got r={r}, d={d}")
    if len(coeffs) != r or len(base_forms) != r:
        raise ArityError(f"expected {r} coefficients and base forms")
    if any(len(b) != 2 for b in base_forms):
        raise ArityError("base forms must be binary linear forms")
    f = Form.zero(2, d)
    for c, base in zip(coeffs, base_forms):
        f = add(f, scale(c, linear_power(base, d)))
    nonzero = sum(1 for c in coeffs if as_rational(c))
    if not f:
        return PreVerdict(f, True, True, nonzero)
    proportional = len(f) == 1 and f.coefficient((0, d)) != 0
    return PreVerdict(f, z_divisibility(f) >= r, proportional, nonzero)


def monomial_rank(a: int, b: int, c: int) -> int:
    """Waring rank of x^a y^b z^c (external formula used as an oracle)."""
    if min(a, b, c) < 0:
        raise ApolarError("exponents must be nonnegative")
    if a + b + c < 1:
        raise ApolarError("monomial rank needs positive degree")
    lo, mid, hi = sorted((a, b, c))
    if lo >= 1:
        return (mid + 1) * (hi + 1)
    if mid >= 1:
        return hi + 1
    return 1


def max_monomial_witness(d: int) -> tuple[int, int, int]:
    """Exponents (a <= b <= c) of a degree-d monomial of maximal rank."""
    if d < 1:
        raise ApolarError("need d >= 1")
    candidates = [m for m in monomials(3, d) if m[0] <= m[1] <= m[2]]
    return max(candidates, key=lambda m: monomial_rank(*m))


def max_monomial_rank(d: int) -> int:
    """Largest Waring rank among monomials of degree d, by enumeration."""
    if d < 1:
        raise ApolarError("need d >= 1")
    return max(monomial_rank(*m) for m in monomials(3, d))
