"""Text syntax for forms.

    form     := [sign] term (sign term)*
    term     := rational ['*' factor ('*' factor)*] | factor ('*' factor)*
    factor   := var ['^' int]
    rational := int ['/' posint]

Juxtaposition (``2x``, ``xy``) is rejected.  Variables are x, y, z for the
ternary ring and y, z for the binary ring; the dual names a, b, c (or
alpha, beta, gamma as Greek letters) may be used instead, but the two
naming schemes cannot be mixed in one expression.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import FormParseError
from .forms import PRIMAL, Form

_PRIMAL_NAMES = {3: ("x", "y", "z"), 2: ("y", "z")}
_DUAL_NAMES = {3: (("a", "α"), ("b", "β"), ("c", "γ")), 2: (("b", "β"), ("c", "γ"))}

_TOKEN = re.compile(r"(\d+)|([A-Za-zα-ω]\w*)|(\S)")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        m = _TOKEN.match(text, pos)
        kind = ("num", "var", "op")[m.lastindex - 1]
        tokens.append((kind, m.group(0), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, nvars: int):
        self.tokens = _tokenize(text)
        self.i = 0
        self.nvars = nvars
        self.scheme = None  # "primal" or "dual" once a variable is seen

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def integer(self):
        kind, value, pos = self.take()
        if kind != "num":
            raise FormParseError(f"expected an integer, found {value or 'end of input'!r}", pos)
        return int(value)

    def variable_index(self, name, pos):
        primal = _PRIMAL_NAMES[self.nvars]
        if name in primal:
            scheme, index = "primal", primal.index(name)
        else:
            for index, aliases in enumerate(_DUAL_NAMES[self.nvars]):
                if name in aliases:
                    scheme = "dual"
                    break
            else:
                raise FormParseError(f"unknown variable {name!r} for {self.nvars} variables", pos)
        if self.scheme is None:
            self.scheme = scheme
        elif self.scheme != scheme:
            raise FormParseError("primal and dual variable names are mixed", pos)
        return index

    def factor(self, exps):
        kind, name, pos = self.take()
        if kind != "var":
            raise FormParseError(f"expected a variable, found {name or 'end of input'!r}", pos)
        index = self.variable_index(name, pos)
        power = 1
        if self.peek()[:2] == ("op", "^"):
            self.take()
            power = self.integer()
        exps[index] += power

    def term(self):
        exps = [0] * self.nvars
        coeff = Fraction(1)
        kind, value, pos = self.peek()
        if kind == "num":
            self.take()
            coeff = Fraction(int(value))
            if self.peek()[:2] == ("op", "/"):
                self.take()
                den_pos = self.peek()[2]
                den = self.integer()
                if den == 0:
                    raise FormParseError("zero denominator", den_pos)
                coeff /= den
            if self.peek()[:2] != ("op", "*"):
                return coeff, tuple(exps), pos
            self.take()
        self.factor(exps)
        while self.peek()[:2] == ("op", "*"):
            self.take()
            self.factor(exps)
        return coeff, tuple(exps), pos

    def form(self):
        terms = []
        sign = 1
        if self.peek()[:2] in (("op", "+"), ("op", "-")):
            sign = -1 if self.take()[1] == "-" else 1
        while True:
            coeff, exps, pos = self.term()
            terms.append((sign * coeff, exps, pos))
            kind, value, pos = self.peek()
            if kind == "end":
                return terms
            if kind == "op" and value in "+-":
                self.take()
                sign = -1 if value == "-" else 1
                continue
            raise FormParseError(f"unexpected {value!r}", pos)


def parse_form(text: str, expected_vars: int = 3, ring: str = PRIMAL) -> Form:
    """Parse ``text`` into a homogeneous :class:`Form`; the degree is inferred."""
    if expected_vars not in (2, 3):
        raise FormParseError(f"variable count must be 2 or 3, got {expected_vars}")
    if not text.strip():
        raise FormParseError("empty input", 0)
    terms = _Parser(text, expected_vars).form()
    degree = sum(terms[0][1])
    for _, exps, pos in terms:
        if sum(exps) != degree:
            raise FormParseError(
                f"inhomogeneous input: term of degree {sum(exps)} in a form of degree {degree}", pos)
    return Form(expected_vars, degree, [(exps, c) for c, exps, _ in terms], ring)
