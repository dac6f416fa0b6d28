"""Exact multivariate polynomials over the rationals and their text parser.

Exponent vectors are plain tuples of non-negative ints, positional with
respect to ``Poly.variables``. Coefficients are :class:`fractions.Fraction`.

>>> f = parse_polynomial("x^2*y^2 + x^5 + y^5")
>>> f.variables
('x', 'y')
>>> str(f)
'x^5 + y^5 + x^2*y^2'
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import NegativeExponent, PolynomialSyntaxError, UnknownVariable

ExpVec = tuple


def _coerce(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, str)):
        return Fraction(c)
    raise TypeError(f"coefficient must be int, str or Fraction, not {type(c).__name__}")


class Poly:
    """Immutable polynomial: ordered variable names plus a map ExpVec -> nonzero Fraction."""

    __slots__ = ("_variables", "_terms", "_hash")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple, object] | None = None):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variable names in {variables}")
        n = len(variables)
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != n:
                raise ValueError(f"exponent {exp} does not match {n} variables")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            c = _coerce(c)
            if c:
                clean[exp] = clean.get(exp, 0) + c
                if not clean[exp]:
                    del clean[exp]
        self._variables = variables
        self._terms = clean
        self._hash = None

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls, variables: Sequence[str]) -> Poly:
        return cls(variables)

    @classmethod
    def constant(cls, variables: Sequence[str], c) -> Poly:
        return cls(variables, {(0,) * len(tuple(variables)): c})

    @classmethod
    def monomial(cls, variables: Sequence[str], exp: Iterable[int], c=1) -> Poly:
        return cls(variables, {tuple(exp): c})

    # -- accessors -----------------------------------------------------

    @property
    def variables(self) -> tuple:
        return self._variables

    @property
    def nvars(self) -> int:
        return len(self._variables)

    @property
    def terms(self) -> dict:
        """A copy of the term map."""
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, exp) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def order(self) -> int:
        """Lowest total degree of a term; -1 for the zero polynomial."""
        return min((sum(e) for e in self._terms), default=-1)

    # -- arithmetic ----------------------------------------------------

    def _check(self, other: Poly):
        if self._variables != other._variables:
            raise ValueError(f"variable mismatch: {self._variables} vs {other._variables}")

    def _lift(self, other) -> Poly:
        if isinstance(other, Poly):
            self._check(other)
            return other
        return Poly.constant(self._variables, other)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return Poly(self._variables, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self._variables, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = _coerce(other)
            return Poly(self._variables, {e: c * v for e, v in self._terms.items()})
        self._check(other)
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly(self._variables, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Poly.constant(self._variables, 1)
        for _ in range(k):
            result = result * self
        return result

    def diff(self, i: int) -> Poly:
        out = {}
        for e, c in self._terms.items():
            if e[i]:
                d = list(e)
                d[i] -= 1
                out[tuple(d)] = c * e[i]
        return Poly(self._variables, out)

    def permute(self, perm: Sequence[int]) -> Poly:
        """Reorder variables: new variable j is old variable ``perm[j]``."""
        variables = tuple(self._variables[p] for p in perm)
        return Poly(variables, {tuple(e[p] for p in perm): c for e, c in self._terms.items()})

    # -- comparison / printing ---------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self._variables == other._variables and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._variables, frozenset(self._terms.items())))
        return self._hash

    def sorted_terms(self) -> list:
        """Terms in graded-lexicographic order, highest first."""
        return sorted(self._terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Poly({format_polynomial(self)!r}, variables={self._variables!r})"


def _format_monomial(variables, exp) -> str:
    parts = []
    for name, e in zip(variables, exp):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_polynomial(p: Poly) -> str:
    """Canonical text: grlex order, explicit ``*`` and ``^``, coefficients as ``p/q``."""
    if p.is_zero():
        return "0"
    out = []
    for k, (exp, c) in enumerate(p.sorted_terms()):
        sign = "-" if c < 0 else "+"
        c = abs(c)
        mono = _format_monomial(p.variables, exp)
        if not mono:
            body = str(c)
        elif c == 1:
            body = mono
        else:
            body = f"{c}*{mono}"
        if k == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


# -- parser -----------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<ident>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*/^]))")


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise PolynomialSyntaxError(f"unexpected character {text[pos]!r}", text, pos, "token")
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, variables: Sequence[str] | None):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.fixed = variables is not None
        self.variables = list(variables) if variables is not None else []
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, expected: str, tok=None):
        kind, value, pos = tok or self.peek()
        found = "end of input" if kind == "eof" else repr(value)
        raise PolynomialSyntaxError(f"expected {expected}, found {found}", self.text, pos, expected)

    def is_op(self, op: str) -> bool:
        kind, value, _ = self.peek()
        return kind == "op" and value == op

    def positive_int(self, what: str) -> int:
        kind, value, pos = self.peek()
        if kind == "op" and value == "-" and what == "exponent":
            raise NegativeExponent("negative exponent", self.text, pos, "positive integer")
        if kind != "int" or int(value) == 0:
            self.fail(f"positive integer ({what})")
        self.advance()
        return int(value)

    def var_index(self, name: str, pos: int) -> int:
        if name in self.variables:
            return self.variables.index(name)
        if self.fixed:
            raise UnknownVariable(name, self.variables)
        self.variables.append(name)
        return len(self.variables) - 1

    def factor(self, exps: dict):
        kind, name, pos = self.peek()
        if kind != "ident":
            self.fail("variable")
        self.advance()
        e = 1
        if self.is_op("^"):
            self.advance()
            e = self.positive_int("exponent")
        idx = self.var_index(name, pos)
        exps[idx] = exps.get(idx, 0) + e

    def term(self):
        kind, value, _ = self.peek()
        coeff = Fraction(1)
        exps: dict = {}
        if kind == "int":
            self.advance()
            if self.is_op("/"):
                self.advance()
                coeff = Fraction(int(value), self.positive_int("denominator"))
            else:
                coeff = Fraction(int(value))
        elif kind == "ident":
            self.factor(exps)
        else:
            self.fail("coefficient or variable")
        while self.is_op("*"):
            self.advance()
            self.factor(exps)
        return coeff, exps

    def parse(self):
        raw = []
        sign = 1
        # a sign before the first term is accepted so negative leading
        # coefficients round-trip through the printer
        if self.is_op("-") or self.is_op("+"):
            sign = -1 if self.advance()[1] == "-" else 1
        while True:
            coeff, exps = self.term()
            raw.append((sign * coeff, exps))
            kind, value, _ = self.peek()
            if kind == "eof":
                break
            if kind == "op" and value in "+-":
                self.advance()
                sign = -1 if value == "-" else 1
                continue
            self.fail("'+', '-', '*' or end of input")
        n = len(self.variables)
        terms: dict = {}
        for c, exps in raw:
            exp = tuple(exps.get(k, 0) for k in range(n))
            terms[exp] = terms.get(exp, 0) + c
        return Poly(self.variables, terms)


def parse_polynomial(text: str, variables: Sequence[str] | None = None) -> Poly:
    """Parse ``text`` into a canonical :class:`Poly`.

    Without ``variables`` the names are taken in order of first appearance.
    Raises :class:`PolynomialSyntaxError`, :class:`NegativeExponent` or
    :class:`UnknownVariable`.
    """
    return _Parser(text, variables).parse()


def partials(f: Poly) -> list:
    """Partial derivatives in variable order; they generate the Jacobian ideal."""
    return [f.diff(i) for i in range(f.nvars)]


def support(f: Poly) -> set:
    """Exponent vectors carrying a nonzero coefficient."""
    return set(e for e, _ in f.items())
