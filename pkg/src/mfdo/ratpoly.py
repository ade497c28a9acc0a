"""Exact multivariate polynomial arithmetic over the rationals.

RatPoly is the coefficient carrier for the whole package: Bernstein-Sato
polynomials, torus elements, Smith algebra coefficients and the brute
force differential operator oracle all store their data as RatPoly
values.  Coefficients are fractions.Fraction, so every computation is
bit exact and identity testing is fully reliable.

A polynomial is a mapping from exponent tuples to nonzero rational
coefficients, together with an ordered tuple of variable names.  Two
polynomials over different variable universes compare and combine by
aligning variables by name, so values produced by different modules
compose safely.

Text syntax, accepted by parse() and produced by str():

    3/4*X0^2*X1 - 2*X1 + 1

The parser additionally accepts parentheses and products of grouped
factors such as ``X0*(X0+X1+1)``, which the command line interface uses
for factored display.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

Rational = Fraction

Scalar = Union[Fraction, int]

Exponent = tuple  # one int per variable, that variable's degree


def _coerce(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an integer or Fraction, got {type(value).__name__}")


class RatPoly:
    """A multivariate polynomial with exact rational coefficients.

    Immutable in practice: every operation returns a new value.  The
    term mapping never stores zero coefficients, so the zero polynomial
    is the empty mapping and equality is equality of term mappings
    after aligning variables by name.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[Exponent, Scalar] = ()):
        self.vars = tuple(variables)
        if len(set(self.vars)) != len(self.vars):
            raise ValueError(f"duplicate variable names in {self.vars}")
        clean = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exps, coeff in items:
            exps = tuple(exps)
            if len(exps) != len(self.vars):
                raise ValueError(f"exponent {exps} does not match variables {self.vars}")
            coeff = _coerce(coeff)
            if coeff != 0:
                clean[exps] = clean.get(exps, Fraction(0)) + coeff
                if clean[exps] == 0:
                    del clean[exps]
        self.terms = clean

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, variables: Sequence[str] = ()) -> "RatPoly":
        return cls(variables)

    @classmethod
    def const(cls, value: Scalar, variables: Sequence[str] = ()) -> "RatPoly":
        variables = tuple(variables)
        value = _coerce(value)
        if value == 0:
            return cls(variables)
        return cls(variables, {(0,) * len(variables): value})

    @classmethod
    def var(cls, name: str, variables: Sequence[str] | None = None) -> "RatPoly":
        """The polynomial consisting of the single variable ``name``."""
        variables = (name,) if variables is None else tuple(variables)
        if name not in variables:
            raise ValueError(f"{name!r} is not among {variables}")
        exps = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, {exps: Fraction(1)})

    # ------------------------------------------------------------------
    # basic queries

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def as_constant(self) -> Fraction:
        """The value of a constant polynomial, as an exact rational."""
        if self.is_zero:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return next(iter(self.terms.values()))

    def degree(self, name: str | None = None) -> int:
        """Total degree, or the degree in one variable.  Zero has degree -1."""
        if self.is_zero:
            return -1
        if name is None:
            return max(sum(e) for e in self.terms)
        if name not in self.vars:
            return 0
        i = self.vars.index(name)
        return max(e[i] for e in self.terms)

    def depends_on(self, name: str) -> bool:
        if name not in self.vars:
            return False
        i = self.vars.index(name)
        return any(e[i] for e in self.terms)

    def coefficient(self, name: str, power: int) -> "RatPoly":
        """The coefficient of name**power, as a polynomial in the
        remaining variables."""
        i = self.vars.index(name)
        rest = self.vars[:i] + self.vars[i + 1 :]
        terms = {}
        for exps, coeff in self.terms.items():
            if exps[i] == power:
                key = exps[:i] + exps[i + 1 :]
                terms[key] = terms.get(key, Fraction(0)) + coeff
        return RatPoly(rest, terms)

    def __bool__(self) -> bool:
        return not self.is_zero

    def __iter__(self) -> Iterator[tuple[Exponent, Fraction]]:
        return iter(self.terms.items())

    # ------------------------------------------------------------------
    # canonical key: independent of variable order and of padding
    # variables that never occur, so equality aligns by name

    def _key(self):
        out = []
        for exps, coeff in self.terms.items():
            mono = tuple(sorted((v, e) for v, e in zip(self.vars, exps) if e))
            out.append((mono, coeff))
        return tuple(sorted(out))

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RatPoly.const(other)
        if not isinstance(other, RatPoly):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    # ------------------------------------------------------------------
    # arithmetic

    def _aligned(self, other: "RatPoly"):
        """Common variable universe and both term maps re-keyed to it."""
        if self.vars == other.vars:
            return self.vars, self.terms, other.terms
        union = list(self.vars)
        for v in other.vars:
            if v not in self.vars:
                union.append(v)
        union = tuple(union)

        def rekey(poly: RatPoly):
            pos = [union.index(v) for v in poly.vars]
            out = {}
            for exps, coeff in poly.terms.items():
                key = [0] * len(union)
                for p, e in zip(pos, exps):
                    key[p] = e
                out[tuple(key)] = coeff
            return out

        return union, rekey(self), rekey(other)

    def _coerce_operand(self, other) -> "RatPoly | None":
        if isinstance(other, RatPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return RatPoly.const(other, self.vars)
        return None

    def __add__(self, other) -> "RatPoly":
        other = self._coerce_operand(other)
        if other is None:
            return NotImplemented
        union, a, b = self._aligned(other)
        out = dict(a)
        for exps, coeff in b.items():
            out[exps] = out.get(exps, Fraction(0)) + coeff
        return RatPoly(union, out)

    __radd__ = __add__

    def __neg__(self) -> "RatPoly":
        return RatPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "RatPoly":
        other = self._coerce_operand(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RatPoly":
        return (-self) + other

    def __mul__(self, other) -> "RatPoly":
        if isinstance(other, (int, Fraction)):
            c = _coerce(other)
            return RatPoly(self.vars, {e: k * c for e, k in self.terms.items()})
        if not isinstance(other, RatPoly):
            return NotImplemented
        union, a, b = self._aligned(other)
        out = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                key = tuple(x + y for x, y in zip(e1, e2))
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return RatPoly(union, out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatPoly":
        if isinstance(other, RatPoly):
            other = other.as_constant()
        c = _coerce(other)
        if c == 0:
            raise ZeroDivisionError("division of a polynomial by zero")
        return self * (Fraction(1) / c)

    def __pow__(self, power: int) -> "RatPoly":
        if not isinstance(power, int) or power < 0:
            raise ValueError("only nonnegative integer powers are defined")
        result = RatPoly.const(1, self.vars)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base if power > 1 else base
            power >>= 1
        return result

    def scale(self, value: Scalar) -> "RatPoly":
        return self * _coerce(value)

    # ------------------------------------------------------------------
    # substitution and change of coordinates

    def substitute(self, name: str, value: "RatPoly | Scalar") -> "RatPoly":
        """Exact polynomial composition: replace ``name`` by ``value``."""
        if name not in self.vars:
            raise ValueError(f"{name!r} is not among {self.vars}")
        if not isinstance(value, RatPoly):
            value = RatPoly.const(value)
        i = self.vars.index(name)
        rest = self.vars[:i] + self.vars[i + 1 :]
        powers = {0: RatPoly.const(1, rest)}
        result = RatPoly.zero(rest)
        for exps, coeff in sorted(self.terms.items()):
            e = exps[i]
            if e not in powers:
                p = max(k for k in powers if k <= e)
                acc = powers[p]
                for k in range(p, e):
                    acc = acc * value
                    powers[k + 1] = acc
            mono = RatPoly(rest, {exps[:i] + exps[i + 1 :]: coeff})
            result = result + mono * powers[e]
        # keep a stable, deterministic variable order: original order first
        # (retaining the substituted name only if it reappears), then any
        # new variables introduced by the replacement
        keep_name = value.depends_on(name)
        desired = [v for v in self.vars if v != name or keep_name]
        for w in value.vars:
            if w not in desired and result.depends_on(w):
                desired.append(w)
        return result.restrict(desired)

    def shift(self, name: str, amount: Scalar) -> "RatPoly":
        """Replace ``name`` by ``name + amount``."""
        return self.substitute(name, RatPoly.var(name) + _coerce(amount))

    def rename(self, mapping: Mapping[str, str]) -> "RatPoly":
        new_vars = tuple(mapping.get(v, v) for v in self.vars)
        return RatPoly(new_vars, self.terms)

    def restrict(self, variables: Sequence[str]) -> "RatPoly":
        """Re-express over exactly ``variables``; unused variables may be
        dropped, variables the polynomial depends on must be kept."""
        variables = tuple(variables)
        pos = []
        for v in self.vars:
            if v in variables:
                pos.append(variables.index(v))
            elif self.depends_on(v):
                raise ValueError(f"cannot drop variable {v!r}, polynomial depends on it")
            else:
                pos.append(None)
        out = {}
        for exps, coeff in self.terms.items():
            key = [0] * len(variables)
            for p, e in zip(pos, exps):
                if p is not None:
                    key[p] = e
            out[tuple(key)] = out.get(tuple(key), Fraction(0)) + coeff
        return RatPoly(variables, out)

    def evaluate(self, assignment: Mapping[str, Scalar]) -> Fraction:
        """Evaluate with every variable assigned a rational value."""
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            value = coeff
            for v, e in zip(self.vars, exps):
                if e:
                    value *= _coerce(assignment[v]) ** e
            total += value
        return total

    # ------------------------------------------------------------------
    # printing

    def _sorted_terms(self):
        return sorted(
            self.terms.items(),
            key=lambda item: (-sum(item[0]), tuple(-e for e in item[0])),
        )

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        pieces = []
        for exps, coeff in self._sorted_terms():
            factors = []
            for v, e in zip(self.vars, exps):
                if e == 1:
                    factors.append(v)
                elif e > 1:
                    factors.append(f"{v}^{e}")
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not pieces:
                pieces.append(body if coeff > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"RatPoly({self})"


# ----------------------------------------------------------------------
# parsing


class _Parser:
    """Recursive descent parser for the textual polynomial syntax."""

    def __init__(self, text: str):
        self.tokens = self._tokenize(text)
        self.pos = 0

    @staticmethod
    def _tokenize(text: str):
        tokens = []
        i = 0
        while i < len(text):
            ch = text[i]
            if ch.isspace():
                i += 1
            elif ch.isdigit():
                j = i
                while j < len(text) and text[j].isdigit():
                    j += 1
                tokens.append(("num", text[i:j]))
                i = j
            elif ch.isalpha() or ch == "_":
                j = i
                while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                    j += 1
                tokens.append(("name", text[i:j]))
                i = j
            elif ch in "+-*/^()":
                tokens.append((ch, ch))
                i += 1
            else:
                raise ValueError(f"unexpected character {ch!r} in polynomial text")
        tokens.append(("end", ""))
        return tokens

    def peek(self) -> str:
        return self.tokens[self.pos][0]

    def take(self, kind: str) -> str:
        tk, value = self.tokens[self.pos]
        if tk != kind:
            raise ValueError(f"expected {kind}, found {value!r}")
        self.pos += 1
        return value

    def expr(self) -> RatPoly:
        sign = 1
        while self.peek() in "+-":
            if self.take(self.peek()) == "-":
                sign = -sign
        result = self.term() * sign
        while self.peek() in "+-":
            sign = 1
            while self.peek() in "+-":
                if self.take(self.peek()) == "-":
                    sign = -sign
            result = result + self.term() * sign
        return result

    def term(self) -> RatPoly:
        result = self.factor()
        while self.peek() in "*/":
            op = self.take(self.peek())
            rhs = self.factor()
            if op == "*":
                result = result * rhs
            else:
                result = result / rhs.as_constant()
        return result

    def factor(self) -> RatPoly:
        sign = 1
        while self.peek() == "-":
            self.take("-")
            sign = -sign
        base = self.atom()
        if self.peek() == "^":
            self.take("^")
            neg = False
            if self.peek() == "-":
                self.take("-")
                neg = True
            power = int(self.take("num"))
            if neg:
                raise ValueError("negative exponents are not polynomials")
            base = base ** power
        return base * sign

    def atom(self) -> RatPoly:
        kind = self.peek()
        if kind == "num":
            return RatPoly.const(int(self.take("num")))
        if kind == "name":
            return RatPoly.var(self.take("name"))
        if kind == "(":
            self.take("(")
            inner = self.expr()
            self.take(")")
            return inner
        raise ValueError(f"unexpected token {self.tokens[self.pos][1]!r}")


def parse(text: str, variables: Sequence[str] | None = None) -> RatPoly:
    """Parse the textual syntax back into a RatPoly.

    With ``variables`` given, the result is re-expressed over exactly
    that universe (raising if the text uses a variable outside it).
    """
    parser = _Parser(text)
    poly = parser.expr()
    if parser.peek() != "end":
        raise ValueError(f"trailing input in polynomial text {text!r}")
    if variables is not None:
        poly = poly.restrict(variables)
    return poly


# ----------------------------------------------------------------------
# the change of coordinates used by the center decomposition


def degree_form_expand(poly: RatPoly, weights: Sequence[int]) -> list[RatPoly]:
    """Expand ``poly`` along the degree form s = d0*v0 + ... + dr*vr.

    ``weights`` pairs with poly.vars positionally: weights[i] is the
    weight of poly.vars[i].  Returns coefficients (alpha_0 .. alpha_p),
    each free of the first variable v0, with

        poly == sum(alpha_i * s**i).

    Computed by substituting v0 = (S - sum_{i>=1} d_i v_i) / d0 for a
    fresh variable S and collecting powers of S.
    """
    weights = [int(w) for w in weights]
    if len(weights) != len(poly.vars):
        raise ValueError("one weight per variable is required")
    if not weights or weights[0] < 1:
        raise ValueError("the leading weight must be a positive integer")
    v0 = poly.vars[0]
    rest = poly.vars[1:]
    s_name = "_S"
    while s_name in poly.vars:
        s_name = "_" + s_name
    universe = (s_name,) + rest
    s_poly = RatPoly.var(s_name, universe)
    for v, w in zip(rest, weights[1:]):
        s_poly = s_poly - RatPoly.var(v, universe) * w
    replacement = s_poly * Fraction(1, weights[0])
    expanded = poly.substitute(v0, replacement)
    top = max(expanded.degree(s_name), 0)
    return [expanded.coefficient(s_name, i).restrict(rest) for i in range(top + 1)]


def degree_form_reconstruct(
    coefficients: Iterable[RatPoly], weights: Sequence[int], variables: Sequence[str]
) -> RatPoly:
    """Inverse of degree_form_expand: sum alpha_i * s**i over the full
    variable universe ``variables``."""
    variables = tuple(variables)
    s = RatPoly.zero(variables)
    for v, w in zip(variables, weights):
        s = s + RatPoly.var(v, variables) * int(w)
    total = RatPoly.zero(variables)
    power = RatPoly.const(1, variables)
    for i, alpha in enumerate(coefficients):
        if i:
            power = power * s
        total = total + alpha * power
    return total
