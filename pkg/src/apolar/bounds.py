"""Reference Hilbert functions and Waring rank lower bounds."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from math import comb

from .apolarity import apolar_length, apolar_profile
from .errors import ApolarError, ZeroFormError
from .forms import Form, differentiate

log = logging.getLogger(__name__)

DIRECTIONS = ("a", "b", "c")
_ALIASES = {"a": 0, "b": 1, "c": 2, "alpha": 0, "beta": 1, "gamma": 2,
            "α": 0, "β": 1, "γ": 2}


@dataclass(frozen=True)
class ReferenceProfile:
    """min(dim R_i, dim R_(d-i), s) for R a polynomial ring in n variables."""

    n: int
    d: int
    s: int
    values: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.values)


def ring_dimension(n: int, i: int) -> int:
    if i < 0:
        return 0
    return comb(i + n - 1, n - 1)


def reference_profile(n: int, d: int, s: int) -> ReferenceProfile:
    if n < 1 or d < 0 or s < 0:
        raise ApolarError(f"need n >= 1, d >= 0, s >= 0; got ({n}, {d}, {s})")
    values = tuple(min(ring_dimension(n, i), ring_dimension(n, d - i), s) for i in range(d + 1))
    return ReferenceProfile(n, d, s, values)


def direction_index(f: Form, direction) -> int:
    """Variable index for a coordinate dual variable given as a name or index.

    For binary forms the names b, c refer to y, z.
    """
    if isinstance(direction, int):
        idx = direction
    else:
        idx = _ALIASES.get(str(direction).lower())
        if idx is None:
            raise ApolarError(f"unknown direction {direction!r}")
        if f.nvars == 2:
            idx -= 1
    if not 0 <= idx < f.nvars:
        raise ApolarError(f"direction {direction!r} not available for {f.nvars} variables")
    return idx


def catalecticant_lower_bound(f: Form) -> int:
    if not f:
        raise ZeroFormError("rank bounds are undefined for the zero form")
    return max(apolar_profile(f).hf)


def _clamped(value: int, what: str) -> int:
    if value < 0:
        log.warning("%s is negative (%d); clamping to 0", what, value)
        return 0
    return value


def prop3_bound(f: Form, direction="a") -> int:
    """al(F) - al(dF), dF the derivative along ``direction``.

    Lower-bounds the length of any power sum decomposition whose base linear
    forms are all outside the kernel of that derivative.  The caller owns
    that hypothesis.
    """
    if not f:
        raise ZeroFormError("rank bounds are undefined for the zero form")
    idx = direction_index(f, direction)
    return _clamped(apolar_length(f) - apolar_length(differentiate(f, idx)), "prop3 bound")


def prop4_count(f: Form, direction="a") -> int:
    """al(dF) - al(d^2 F): in every decomposition at least this many base
    linear forms are not killed by the derivative along ``direction``."""
    if not f:
        raise ZeroFormError("rank bounds are undefined for the zero form")
    idx = direction_index(f, direction)
    first = differentiate(f, idx)
    second = differentiate(first, idx)
    return _clamped(apolar_length(first) - apolar_length(second), "prop4 count")


def max_rank_lower_bound(d: int) -> int:
    """floor((d^2 + 2d + 5) / 4), the lower bound on the maximum rank of ternary d-ics."""
    if d < 2:
        raise ApolarError(f"the bound needs d >= 2, got {d}")
    return (d * d + 2 * d + 5) // 4


@dataclass
class BoundReport:
    form: str
    degree: int
    catalecticant_bound: int
    prop3: dict[str, int]
    prop4: dict[str, int]
    notes: list[str] = field(default_factory=list)

    @property
    def best(self) -> int:
        """Largest unconditional bound (prop3 needs a hypothesis, so it is excluded)."""
        return max([self.catalecticant_bound, *self.prop4.values()])

    def to_dict(self) -> dict:
        return {
            "form": self.form,
            "degree": self.degree,
            "catalecticant_bound": self.catalecticant_bound,
            "prop3_bound": dict(self.prop3),
            "prop4_count": dict(self.prop4),
            "notes": list(self.notes),
        }


def bound_report(f: Form) -> BoundReport:
    if not f:
        raise ZeroFormError("rank bounds are undefined for the zero form")
    names = DIRECTIONS[3 - f.nvars:]
    prop3 = {name: prop3_bound(f, i) for i, name in enumerate(names)}
    prop4 = {name: prop4_count(f, i) for i, name in enumerate(names)}
    notes = [
        "catalecticant_bound: max of the Hilbert function of the apolar algebra",
        "prop3_bound[v]: al(F) - al(d_v F); valid only for decompositions with no base form killed by d_v",
        "prop4_count[v]: al(d_v F) - al(d_v^2 F) base forms of every decomposition are not killed by d_v",
    ]
    return BoundReport(str(f), f.degree, catalecticant_lower_bound(f), prop3, prop4, notes)
