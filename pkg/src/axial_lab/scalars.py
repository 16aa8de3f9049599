"""Exact scalar fields: the rationals, prime fields GF(p), and rational
function fields Q(x1, ..., xn).

Elements are plain Python objects with arithmetic operators:

* ``QQ`` uses :class:`fractions.Fraction`;
* ``PrimeField(p)`` uses :class:`PrimeFieldElement`;
* ``FunctionField(vars)`` uses sympy's sparse ``FracElement`` (numerator and
  denominator are ``PolyElement`` objects, i.e. dicts from exponent tuples
  to rational coefficients).

A field object converts, parses and prints its elements and knows its
characteristic. Field objects compare equal by value.
"""

from __future__ import annotations

import ast
import operator
from fractions import Fraction
from functools import lru_cache
from typing import Any, Iterable

from sympy.polys.domains import QQ as _SYMPY_QQ
from sympy.polys.fields import FracElement, FracField
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement

Polynomial = PolyElement
RationalFunction = FracElement

MAX_PRIME = 2**31
DEFAULT_VARIABLES = ("eta", "alpha", "beta", "gamma", "psi")


class ScalarError(Exception):
    pass


class DivisionByZero(ScalarError, ZeroDivisionError):
    pass


class MixedFields(ScalarError, TypeError):
    pass


class ParseError(ScalarError, ValueError):
    pass


class UnknownVariable(ParseError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class PrimeFieldElement:
    """Residue class modulo an odd prime ``p``."""

    __slots__ = ("residue", "p")

    def __init__(self, residue: int, p: int):
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "residue", residue % p)

    def __setattr__(self, name, value):
        raise AttributeError("PrimeFieldElement is immutable")

    def _coerce(self, other) -> int | None:
        if isinstance(other, PrimeFieldElement):
            if other.p != self.p:
                raise MixedFields(f"GF({self.p}) and GF({other.p})")
            return other.residue
        if isinstance(other, int) and not isinstance(other, bool):
            return other % self.p
        if isinstance(other, (Fraction, FracElement)):
            raise MixedFields(f"GF({self.p}) and {type(other).__name__}")
        return None

    def _new(self, r: int) -> PrimeFieldElement:
        return PrimeFieldElement(r, self.p)

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else self._new(self.residue + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else self._new(self.residue - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else self._new(o - self.residue)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else self._new(self.residue * o)

    __rmul__ = __mul__

    def inverse(self) -> PrimeFieldElement:
        if self.residue == 0:
            raise DivisionByZero(f"inverse of 0 in GF({self.p})")
        return self._new(pow(self.residue, -1, self.p))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o == 0:
            raise DivisionByZero(f"division by 0 in GF({self.p})")
        return self._new(self.residue * pow(o, -1, self.p))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else self._new(o) / self

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return self._new(pow(self.residue, k, self.p))

    def __neg__(self):
        return self._new(-self.residue)

    def __pos__(self):
        return self

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElement):
            return self.p == other.p and self.residue == other.residue
        if isinstance(other, int):
            return self.residue == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.residue, self.p))

    def __bool__(self):
        return self.residue != 0

    def __repr__(self):
        return f"GF{self.p}({self.residue})"

    def __str__(self):
        return str(self.residue)


class Field:
    """Common interface of the three supported kinds of field."""

    kind: str
    characteristic: int
    variables: tuple[str, ...] = ()

    def __call__(self, value: Any):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def contains(self, x) -> bool:
        raise NotImplementedError

    def is_zero(self, x) -> bool:
        return x == 0

    def format(self, x) -> str:
        return str(x)

    def to_json(self) -> dict:
        raise NotImplementedError

    def parse(self, text: str):
        return scalar_parse(text, self)

    def _key(self):
        return (self.kind, self.characteristic, self.variables)

    def __eq__(self, other):
        return isinstance(other, Field) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())


class RationalField(Field):
    kind = "q"
    characteristic = 0

    def __call__(self, value: Any) -> Fraction:
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, (PrimeFieldElement, FracElement)):
            raise MixedFields(f"cannot convert {value!r} to Q")
        if isinstance(value, float):
            raise TypeError("floats are not exact scalars")
        return Fraction(value)

    def contains(self, x) -> bool:
        return isinstance(x, (Fraction, int)) and not isinstance(x, bool)

    def to_json(self) -> dict:
        return {"kind": "q"}

    def __repr__(self):
        return "QQ"


class PrimeField(Field):
    kind = "gf"

    def __init__(self, p: int):
        if p == 2:
            raise ValueError("characteristic 2 is not supported")
        if not (2 < p < MAX_PRIME) or not is_prime(p):
            raise ValueError(f"{p} is not an odd prime below 2^31")
        self.p = p
        self.characteristic = p

    def __call__(self, value: Any) -> PrimeFieldElement:
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, PrimeFieldElement):
            if value.p != self.p:
                raise MixedFields(f"GF({value.p}) element in GF({self.p})")
            return value
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise DivisionByZero(f"{value} has no image in GF({self.p})")
            return PrimeFieldElement(value.numerator, self.p) / value.denominator
        if isinstance(value, int):
            return PrimeFieldElement(value, self.p)
        raise MixedFields(f"cannot convert {value!r} to GF({self.p})")

    def contains(self, x) -> bool:
        return isinstance(x, PrimeFieldElement) and x.p == self.p

    def to_json(self) -> dict:
        return {"kind": "gf", "p": self.p}

    def __repr__(self):
        return f"GF({self.p})"


class FunctionField(Field):
    """Q(v1, ..., vn) with graded lexicographic monomial order."""

    kind = "func"
    characteristic = 0

    def __init__(self, variables: Iterable[str] = DEFAULT_VARIABLES):
        self.variables = tuple(variables)
        if not self.variables:
            raise ValueError("a function field needs at least one variable")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")
        self.sympy_field = FracField(",".join(self.variables), _SYMPY_QQ, grlex)
        self.ring = self.sympy_field.ring
        self.gens = dict(zip(self.variables, self.sympy_field.gens))

    def gen(self, name: str) -> FracElement:
        try:
            return self.gens[name]
        except KeyError:
            raise UnknownVariable(name) from None

    def __call__(self, value: Any) -> FracElement:
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, FracElement):
            if value.field != self.sympy_field:
                raise MixedFields(f"element of {value.field} in {self!r}")
            return value
        if isinstance(value, PrimeFieldElement):
            raise MixedFields(f"cannot convert {value!r} to {self!r}")
        if isinstance(value, Fraction):
            return self.sympy_field(_SYMPY_QQ(value.numerator, value.denominator))
        if isinstance(value, PolyElement):
            return self.sympy_field.new(value.set_ring(self.ring))
        return self.sympy_field(value)

    def from_polynomials(self, numer: PolyElement, denom: PolyElement) -> FracElement:
        if not denom:
            raise DivisionByZero("zero denominator")
        return self.sympy_field.new(numer, denom)

    def contains(self, x) -> bool:
        return isinstance(x, FracElement) and x.field == self.sympy_field

    def format(self, x) -> str:
        return str(x).replace("**", "^")

    def evaluate(self, x: FracElement, values: dict[str, Any], target: Field):
        """Substitute ``values`` (already elements of ``target``) for the variables."""
        num = _eval_poly(x.numer, self.variables, values, target)
        den = _eval_poly(x.denom, self.variables, values, target)
        if den == 0:
            raise DivisionByZero(f"denominator of {self.format(x)} vanishes")
        return num / den

    def to_json(self) -> dict:
        return {"kind": "func", "vars": list(self.variables)}

    def __repr__(self):
        return f"FunctionField({', '.join(self.variables)})"


def _eval_poly(p: PolyElement, names, values, target: Field):
    total = target.zero
    for monom, coeff in p.terms():
        term = target(Fraction(int(coeff.numerator), int(coeff.denominator)))
        for name, e in zip(names, monom):
            if e:
                term = term * values[name] ** e
        total = total + term
    return total


QQ = RationalField()


@lru_cache(maxsize=None)
def prime_field(p: int) -> PrimeField:
    return PrimeField(p)


@lru_cache(maxsize=None)
def function_field(variables: tuple[str, ...] = DEFAULT_VARIABLES) -> FunctionField:
    return FunctionField(variables)


def field_from_json(data: dict) -> Field:
    kind = data.get("kind")
    if kind == "q":
        return QQ
    if kind == "gf":
        return prime_field(int(data["p"]))
    if kind == "func":
        return function_field(tuple(data["vars"]))
    raise ValueError(f"unknown field kind {kind!r}")


def field_of(x) -> Field:
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, (Fraction, int)):
        return QQ
    if isinstance(x, PrimeFieldElement):
        return prime_field(x.p)
    if isinstance(x, FracElement):
        return function_field(tuple(str(s) for s in x.field.symbols))
    raise TypeError(f"{x!r} is not a supported scalar")


_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def field_arith(x, y, op: str):
    fx, fy = field_of(x), field_of(y)
    if fx != fy:
        raise MixedFields(f"{fx!r} and {fy!r}")
    if op not in _OPS:
        raise ValueError(f"unknown operation {op!r}")
    if op == "div" and y == 0:
        raise DivisionByZero(f"{x} / 0")
    try:
        return fx(_OPS[op](x, y))
    except ZeroDivisionError as exc:
        raise DivisionByZero(str(exc)) from exc


def scalar_parse(text: str, field: Field):
    """Parse integers, ``p/q`` and polynomial or rational expressions.

    Accepts ``+ - * / ^`` (``**`` too), parentheses, integer literals and the
    variable names of a function field.
    """
    if not isinstance(text, str) or not text.strip():
        raise ParseError(f"empty scalar text {text!r}")
    try:
        tree = ast.parse(text.strip().replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise ParseError(f"cannot parse {text!r}: {exc.msg}") from None
    try:
        return field(_eval_node(tree.body, field))
    except ZeroDivisionError as exc:
        raise DivisionByZero(f"{text!r}: {exc}") from None


def _eval_node(node: ast.AST, field: Field):
    if isinstance(node, ast.Constant):
        if isinstance(node.value, int) and not isinstance(node.value, bool):
            return field(node.value)
        raise ParseError(f"unsupported literal {node.value!r}")
    if isinstance(node, ast.Name):
        if isinstance(field, FunctionField):
            return field.gen(node.id)
        raise UnknownVariable(f"{node.id!r} in {field!r}")
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval_node(node.operand, field)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp):
        if isinstance(node.op, ast.Pow):
            base = _eval_node(node.left, field)
            return base ** _int_exponent(node.right)
        ops = {ast.Add: operator.add, ast.Sub: operator.sub,
               ast.Mult: operator.mul, ast.Div: operator.truediv}
        fn = ops.get(type(node.op))
        if fn is None:
            raise ParseError(f"unsupported operator {type(node.op).__name__}")
        left, right = _eval_node(node.left, field), _eval_node(node.right, field)
        if fn is operator.truediv and right == 0:
            raise DivisionByZero("division by zero")
        return fn(left, right)
    raise ParseError(f"unsupported syntax {type(node).__name__}")


def _int_exponent(node: ast.AST) -> int:
    sign = 1
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
        sign, node = -1, node.operand
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return sign * node.value
    raise ParseError("exponents must be integer literals")


def scalar_format(x, field: Field | None = None) -> str:
    return (field or field_of(x)).format(x)


def is_admissible_eta(eta, field: Field) -> bool:
    if field.characteristic == 2:
        return False
    one = field.one
    if eta == one or eta == one / 2:
        return False
    if field.characteristic == 3 and eta == -one:
        return False
    return True
