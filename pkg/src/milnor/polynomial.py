"""Exact multivariate polynomials over the rationals.

Polynomials are immutable. Terms are kept sorted (descending) in a
degree-reverse-lexicographic order whose variable sequence can be permuted;
changing the order is always an explicit :meth:`Polynomial.reorder` call.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

__all__ = [
    "Ring",
    "Monomial",
    "MonomialOrder",
    "Polynomial",
    "ParseError",
    "NotHomogeneousError",
    "parse_polynomial",
    "partial_derivative",
    "euler_check",
    "compare",
]


class ParseError(ValueError):
    """Raised for malformed polynomial text; ``position`` is a 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class NotHomogeneousError(ValueError):
    pass


@dataclass(frozen=True)
class Ring:
    """Polynomial ring Q[x_0, ..., x_n] identified by its variable names."""

    variables: tuple[str, ...]

    def __post_init__(self):
        if len(self.variables) == 0:
            raise ValueError("ring needs at least one variable")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"duplicate variable names: {self.variables}")

    @classmethod
    def of(cls, names: str | Iterable[str]) -> "Ring":
        if isinstance(names, str):
            names = [v.strip() for v in names.split(",") if v.strip()]
        return cls(tuple(names))

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def gens(self) -> list["Polynomial"]:
        return [Polynomial.variable(self, i) for i in range(self.nvars)]

    def default_order(self) -> "MonomialOrder":
        return MonomialOrder(tuple(range(self.nvars)))


@dataclass(frozen=True)
class Monomial:
    exponents: tuple[int, ...]
    degree: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if any(e < 0 for e in self.exponents):
            raise ValueError(f"negative exponent in {self.exponents}")
        object.__setattr__(self, "degree", sum(self.exponents))

    def __mul__(self, other: "Monomial") -> "Monomial":
        _same_length(self, other)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def divides(self, other: "Monomial") -> bool:
        _same_length(self, other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: "Monomial") -> "Monomial":
        _same_length(self, other)
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))


def _same_length(u: Monomial, v: Monomial) -> None:
    if len(u.exponents) != len(v.exponents):
        raise ValueError("monomials live in rings with different variable counts")


@dataclass(frozen=True)
class MonomialOrder:
    """Degree-reverse-lexicographic order on a permuted variable sequence.

    ``permutation[0]`` is the most significant variable, ``permutation[-1]``
    the last one (the one whose exponent is inspected first on ties).
    """

    permutation: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.permutation) != list(range(len(self.permutation))):
            raise ValueError(f"not a permutation: {self.permutation}")

    @classmethod
    def with_last(cls, nvars: int, last: int) -> "MonomialOrder":
        if not 0 <= last < nvars:
            raise IndexError(f"variable index {last} out of range")
        return cls(tuple(i for i in range(nvars) if i != last) + (last,))

    @property
    def nvars(self) -> int:
        return len(self.permutation)

    def sort_key(self, exponents: Sequence[int]) -> tuple[int, ...]:
        """Key that increases with the order."""
        return (sum(exponents),) + tuple(-exponents[v] for v in reversed(self.permutation))


def compare(u: Monomial, v: Monomial, order: MonomialOrder) -> int:
    """Return -1, 0 or 1 as ``u`` is less than, equal to or greater than ``v``."""
    if len(u.exponents) != order.nvars or len(v.exponents) != order.nvars:
        raise ValueError("monomials and order belong to different rings")
    ku, kv = order.sort_key(u.exponents), order.sort_key(v.exponents)
    return (ku > kv) - (ku < kv)


class Polynomial:
    """An immutable polynomial with exact rational coefficients.

    ``terms`` is a tuple of ``(Monomial, Fraction)`` pairs, strictly
    descending in ``order``, with no zero coefficients.
    """

    __slots__ = ("ring", "order", "terms", "_hash")

    def __init__(
        self,
        ring: Ring,
        coefficients: Mapping[tuple[int, ...], Fraction | int] | None = None,
        order: MonomialOrder | None = None,
    ):
        self.ring = ring
        self.order = order if order is not None else ring.default_order()
        if self.order.nvars != ring.nvars:
            raise ValueError("order and ring have different variable counts")
        items = []
        for exps, c in (coefficients or {}).items():
            if len(exps) != ring.nvars:
                raise ValueError(f"exponent vector {exps} does not match ring {ring.variables}")
            c = Fraction(c)
            if c:
                items.append((tuple(exps), c))
        key = self.order.sort_key
        items.sort(key=lambda t: key(t[0]), reverse=True)
        self.terms = tuple((Monomial(e), c) for e, c in items)
        self._hash = None

    # construction helpers

    @classmethod
    def zero(cls, ring: Ring, order: MonomialOrder | None = None) -> "Polynomial":
        return cls(ring, {}, order)

    @classmethod
    def constant(cls, ring: Ring, c, order: MonomialOrder | None = None) -> "Polynomial":
        return cls(ring, {(0,) * ring.nvars: c}, order)

    @classmethod
    def variable(cls, ring: Ring, i: int, order: MonomialOrder | None = None) -> "Polynomial":
        exps = [0] * ring.nvars
        exps[i] = 1
        return cls(ring, {tuple(exps): 1}, order)

    @classmethod
    def monomial(cls, ring: Ring, exponents: Sequence[int], c=1, order=None) -> "Polynomial":
        return cls(ring, {tuple(exponents): c}, order)

    def as_dict(self) -> dict[tuple[int, ...], Fraction]:
        return {m.exponents: c for m, c in self.terms}

    def _new(self, coefficients) -> "Polynomial":
        return Polynomial(self.ring, coefficients, self.order)

    def reorder(self, order: MonomialOrder) -> "Polynomial":
        return Polynomial(self.ring, self.as_dict(), order)

    # queries

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def degree(self) -> int | None:
        """Total degree, or ``None`` for the zero polynomial."""
        if not self.terms:
            return None
        return max(m.degree for m, _ in self.terms)

    def is_homogeneous(self) -> bool:
        return len({m.degree for m, _ in self.terms}) <= 1

    def lead_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no lead monomial")
        return self.terms[0][0]

    def lead_coefficient(self) -> Fraction:
        if not self.terms:
            raise ValueError("zero polynomial has no lead coefficient")
        return self.terms[0][1]

    def monic(self) -> "Polynomial":
        lc = self.lead_coefficient()
        return self._new({m.exponents: c / lc for m, c in self.terms})

    def involves(self, i: int) -> bool:
        return any(m.exponents[i] for m, _ in self.terms)

    # arithmetic

    def _check(self, other: "Polynomial") -> None:
        if other.ring != self.ring:
            raise ValueError("polynomials belong to different rings")
        if other.order != self.order:
            raise ValueError("polynomials use different monomial orders; reorder explicitly")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.ring, other, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = self.as_dict()
        for m, c in other.terms:
            acc[m.exponents] = acc.get(m.exponents, 0) + c
        return self._new(acc)

    __radd__ = __add__

    def __neg__(self):
        return self._new({m.exponents: -c for m, c in self.terms})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[tuple[int, ...], Fraction] = {}
        for m1, c1 in self.terms:
            e1 = m1.exponents
            for m2, c2 in other.terms:
                e = tuple(a + b for a, b in zip(e1, m2.exponents))
                acc[e] = acc.get(e, 0) + c1 * c2
        return self._new(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = Polynomial.constant(self.ring, 1, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.ring, other, self.order)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.as_dict() == other.as_dict()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.as_dict().items())))
        return self._hash

    # printing

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        names = self.ring.variables
        out = []
        for i, (m, c) in enumerate(self.terms):
            factors = []
            for name, e in zip(names, m.exponents):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if i == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r}, ring={','.join(self.ring.variables)})"


def partial_derivative(f: Polynomial, i: int) -> Polynomial:
    if not 0 <= i < f.ring.nvars:
        raise IndexError(f"variable index {i} out of range for {f.ring.nvars} variables")
    acc = {}
    for m, c in f.terms:
        e = m.exponents[i]
        if e:
            exps = list(m.exponents)
            exps[i] -= 1
            acc[tuple(exps)] = c * e
    return Polynomial(f.ring, acc, f.order)


def euler_check(f: Polynomial) -> bool:
    """Check the Euler identity sum_i x_i * df/dx_i == deg(f) * f."""
    if f.is_zero() or not f.is_homogeneous():
        raise NotHomogeneousError("Euler identity needs a nonzero homogeneous polynomial")
    d = f.degree
    if d < 1:
        raise NotHomogeneousError("Euler identity needs degree at least 1")
    lhs = Polynomial.zero(f.ring, f.order)
    for i in range(f.ring.nvars):
        lhs = lhs + Polynomial.variable(f.ring, i, f.order) * partial_derivative(f, i)
    return lhs == f * d


# parsing

_TOKEN_CHARS = set("+-*^()")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], i))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
        elif ch in _TOKEN_CHARS:
            tokens.append((ch, ch, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: Ring):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.ring = ring

    def peek(self):
        return self.tokens[self.pos]

    def take(self, kind: str):
        tok = self.tokens[self.pos]
        if tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {kind!r}, found {what}", tok[2])
        self.pos += 1
        return tok

    def expr(self) -> Polynomial:
        negate = False
        if self.peek()[0] == "-":
            self.pos += 1
            negate = True
        result = self.term()
        if negate:
            result = -result
        while self.peek()[0] in "+-":
            op = self.take(self.peek()[0])[0]
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> Polynomial:
        result = self.power()
        while self.peek()[0] == "*":
            self.pos += 1
            result = result * self.power()
        return result

    def power(self) -> Polynomial:
        base = self.atom()
        if self.peek()[0] == "^":
            self.pos += 1
            exponent = int(self.take("int")[1])
            return base**exponent
        return base

    def atom(self) -> Polynomial:
        kind, value, where = self.peek()
        if kind == "int":
            self.pos += 1
            return Polynomial.constant(self.ring, int(value))
        if kind == "name":
            self.pos += 1
            if value not in self.ring.variables:
                raise ParseError(f"unknown variable {value!r}", where)
            return Polynomial.variable(self.ring, self.ring.index(value))
        if kind == "(":
            self.pos += 1
            inner = self.expr()
            self.take(")")
            return inner
        what = "end of input" if kind == "end" else repr(value)
        raise ParseError(f"unexpected {what}", where)


def parse_polynomial(text: str, variables: Ring | Sequence[str] | str) -> Polynomial:
    """Parse integer-coefficient polynomial text with explicit ``*`` and ``^``.

    >>> str(parse_polynomial("(x+y)^2", "x,y"))
    'x^2 + 2*x*y + y^2'
    """
    ring = variables if isinstance(variables, Ring) else Ring.of(variables)
    parser = _Parser(text, ring)
    result = parser.expr()
    tok = parser.peek()
    if tok[0] != "end":
        raise ParseError(f"unexpected {tok[1]!r}", tok[2])
    return result
