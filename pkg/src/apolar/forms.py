"""Sparse homogeneous forms with exact rational coefficients.

Coefficients are :class:`fractions.Fraction`.  Monomials are exponent
tuples; the canonical order is graded lexicographic with x > y > z, which
for monomials of one fixed degree is plain descending lexicographic order
of the exponent tuples.

Binary forms live in K[y, z] (dual ring K[b, c]); ternary forms in
K[x, y, z] (dual ring K[a, b, c]).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial, lcm
from typing import Iterable, Mapping, Sequence

from .errors import ArityError, ApolarError

PRIMAL = "primal"
DUAL = "dual"

VARIABLE_NAMES = {
    (2, PRIMAL): ("y", "z"),
    (3, PRIMAL): ("x", "y", "z"),
    (2, DUAL): ("b", "c"),
    (3, DUAL): ("a", "b", "c"),
}

Monomial = tuple  # tuple[int, ...]


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


@lru_cache(maxsize=None)
def monomials(nvars: int, degree: int) -> tuple[Monomial, ...]:
    """All exponent tuples of the given degree, in canonical order."""
    if degree < 0:
        return ()
    if nvars == 1:
        return ((degree,),)
    out = []
    for first in range(degree, -1, -1):
        for rest in monomials(nvars - 1, degree - first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def multinomial(exps: Monomial) -> int:
    result = factorial(sum(exps))
    for e in exps:
        result //= factorial(e)
    return result


def falling_factorial(n: int, k: int) -> int:
    """n (n-1) ... (n-k+1); zero when k > n."""
    if k > n:
        return 0
    result = 1
    for i in range(n - k + 1, n + 1):
        result *= i
    return result


class Form:
    """An immutable homogeneous polynomial.

    ``terms`` maps exponent tuples to nonzero :class:`Fraction` values.
    The zero form keeps an explicit nominal ``degree``.
    """

    __slots__ = ("nvars", "degree", "ring", "_terms", "_hash")

    def __init__(
        self,
        nvars: int,
        degree: int,
        terms: Mapping[Monomial, object] | Iterable[tuple[Monomial, object]] = (),
        ring: str = PRIMAL,
    ):
        if nvars not in (2, 3):
            raise ApolarError(f"variable count must be 2 or 3, got {nvars}")
        if degree < 0:
            raise ApolarError(f"degree must be nonnegative, got {degree}")
        if ring not in (PRIMAL, DUAL):
            raise ApolarError(f"unknown ring tag {ring!r}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Monomial, Fraction] = {}
        for mono, coeff in items:
            mono = tuple(int(e) for e in mono)
            if len(mono) != nvars or any(e < 0 for e in mono):
                raise ApolarError(f"bad monomial {mono} for {nvars} variables")
            if sum(mono) != degree:
                raise ApolarError(f"monomial {mono} is not of degree {degree}")
            c = clean.get(mono, Fraction(0)) + as_rational(coeff)
            if c:
                clean[mono] = c
            else:
                clean.pop(mono, None)
        self.nvars = nvars
        self.degree = degree
        self.ring = ring
        self._terms = dict(sorted(clean.items(), reverse=True))
        self._hash = None

    @classmethod
    def zero(cls, nvars: int, degree: int = 0, ring: str = PRIMAL) -> "Form":
        return cls(nvars, degree, (), ring)

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff=1, ring: str = PRIMAL) -> "Form":
        exps = tuple(exps)
        return cls(len(exps), sum(exps), {exps: coeff}, ring)

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        """A copy of the term map in canonical order."""
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, mono: Monomial) -> Fraction:
        return self._terms.get(tuple(mono), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, Form):
            return NotImplemented
        if self.nvars != other.nvars or self.ring != other.ring:
            return False
        if not self._terms and not other._terms:
            return True
        return self.degree == other.degree and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            key = (self.degree, tuple(self._terms.items())) if self._terms else ()
            self._hash = hash((self.nvars, self.ring, key))
        return self._hash

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, scale(-1, other))

    def __neg__(self):
        return scale(-1, self)

    def __mul__(self, other):
        if isinstance(other, Form):
            return multiply(self, other)
        return scale(other, self)

    __rmul__ = __mul__

    def variable_names(self) -> tuple[str, ...]:
        return VARIABLE_NAMES[(self.nvars, self.ring)]

    def __str__(self):
        return format_form(self)

    def __repr__(self):
        return f"Form({self.nvars}, {self.degree}, {format_form(self)!r}, ring={self.ring!r})"


def format_form(f: Form) -> str:
    """Canonical text: terms in grlex order, explicit signs, ``*`` and ``^``."""
    if f.is_zero():
        return "0"
    names = f.variable_names()
    parts = []
    for mono, coeff in f.items():
        factors = []
        for name, e in zip(names, mono):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        mag = abs(coeff)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = f"{mag}*" + "*".join(factors)
        sign = "-" if coeff < 0 else "+"
        if not parts:
            parts.append(body if sign == "+" else "-" + body)
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


def _check_compatible(f: Form, g: Form) -> None:
    if f.nvars != g.nvars:
        raise ArityError(f"variable counts differ: {f.nvars} vs {g.nvars}")
    if f.ring != g.ring:
        raise ArityError(f"rings differ: {f.ring} vs {g.ring}")
    if f.degree != g.degree and f and g:
        raise ArityError(f"degrees differ: {f.degree} vs {g.degree}")


def add(f: Form, g: Form) -> Form:
    _check_compatible(f, g)
    if not f:
        return g
    if not g:
        return f
    terms = dict(f._terms)
    for mono, c in g._terms.items():
        terms[mono] = terms.get(mono, 0) + c
    return Form(f.nvars, f.degree, terms, f.ring)


def scale(c, f: Form) -> Form:
    c = as_rational(c)
    if not c:
        return Form.zero(f.nvars, f.degree, f.ring)
    return Form(f.nvars, f.degree, {m: c * v for m, v in f._terms.items()}, f.ring)


def equal(f: Form, g: Form) -> bool:
    """Exact equality; raises on arity mismatch, zero forms of any degree agree."""
    _check_compatible(f, g)
    return f == g


def multiply(f: Form, g: Form) -> Form:
    if f.nvars != g.nvars or f.ring != g.ring:
        raise ArityError("cannot multiply forms from different rings")
    terms: dict[Monomial, Fraction] = {}
    for m1, c1 in f._terms.items():
        for m2, c2 in g._terms.items():
            m = tuple(a + b for a, b in zip(m1, m2))
            terms[m] = terms.get(m, 0) + c1 * c2
    return Form(f.nvars, f.degree + g.degree, terms, f.ring)


def differentiate(f: Form, var_index: int, times: int = 1) -> Form:
    """Partial derivative with respect to variable ``var_index``."""
    if not 0 <= var_index < f.nvars:
        raise ApolarError(f"variable index {var_index} out of range for {f.nvars} variables")
    if times < 0:
        raise ApolarError("derivative order must be nonnegative")
    new_degree = max(f.degree - times, 0)
    terms = {}
    for mono, c in f._terms.items():
        e = mono[var_index]
        if e < times:
            continue
        m = list(mono)
        m[var_index] = e - times
        terms[tuple(m)] = c * falling_factorial(e, times)
    return Form(f.nvars, new_degree, terms, f.ring)


def linear_power(coeffs: Sequence, d: int, ring: str = PRIMAL) -> Form:
    """(c1 x + c2 y + c3 z)^d expanded with multinomial coefficients."""
    if d < 0:
        raise ApolarError("power must be nonnegative")
    cs = [as_rational(c) for c in coeffs]
    n = len(cs)
    terms = {}
    for mono in monomials(n, d):
        value = Fraction(multinomial(mono))
        for c, e in zip(cs, mono):
            if e:
                value *= c**e
        if value:
            terms[mono] = value
    return Form(n, d, terms, ring)


def power_sum(coeffs: Sequence, bases: Sequence[Sequence], d: int) -> Form:
    """sum_i coeffs[i] * (bases[i] . vars)^d."""
    if len(coeffs) != len(bases):
        raise ArityError("coefficient and base-form counts differ")
    if not bases:
        raise ApolarError("power_sum needs the variable count; pass at least one base")
    total = Form.zero(len(bases[0]), d)
    for c, base in zip(coeffs, bases):
        total = total + scale(c, linear_power(base, d))
    return total


def variable(nvars: int, index: int, ring: str = PRIMAL) -> Form:
    exps = [0] * nvars
    exps[index] = 1
    return Form.monomial(exps, 1, ring)


def clear_denominators(f: Form) -> dict[Monomial, int]:
    """Integer multiple of ``f``'s coefficients (same projective point)."""
    den = 1
    for c in f._terms.values():
        den = lcm(den, c.denominator)
    return {m: int(c * den) for m, c in f._terms.items()}
