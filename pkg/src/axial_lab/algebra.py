"""Finite-dimensional commutative algebras given by structure constants."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .linalg import Matrix, Span
from .scalars import Field, field_from_json

DEFAULT_CLOSURE_CAP = 64


class AlgebraError(Exception):
    pass


class AlgebraMismatch(AlgebraError, TypeError):
    pass


class InvalidExponent(AlgebraError, ValueError):
    pass


class CapExceeded(AlgebraError):
    pass


class LoadError(AlgebraError, ValueError):
    pass


class Algebra:
    """Commutative algebra on a labelled basis.

    ``structure[i][j]`` is the coordinate tuple of ``e_i * e_j``. The tensor
    must be symmetric in ``i, j``. ``eta`` records the fusion parameter the
    algebra was built for (None if unknown).
    """

    def __init__(self, field: Field, basis: Sequence[str], structure, eta=None):
        self.field = field
        self.basis = tuple(basis)
        self.dim = len(self.basis)
        if len(set(self.basis)) != self.dim:
            raise AlgebraError("duplicate basis labels")
        self._index = {label: i for i, label in enumerate(self.basis)}
        self.structure = tuple(tuple(tuple(field(v) for v in structure[i][j])
                                     for j in range(self.dim)) for i in range(self.dim))
        for i in range(self.dim):
            for j in range(self.dim):
                if len(self.structure[i][j]) != self.dim:
                    raise AlgebraError(f"product e_{i}e_{j} has wrong length")
                if self.structure[i][j] != self.structure[j][i]:
                    raise AlgebraError(
                        f"not commutative: {self.basis[i]}*{self.basis[j]} != "
                        f"{self.basis[j]}*{self.basis[i]}")
        self.eta = None if eta is None else field(eta)
        self._sparse = tuple(tuple(tuple((k, v) for k, v in enumerate(self.structure[i][j]) if v != 0)
                                   for j in range(self.dim)) for i in range(self.dim))

    @classmethod
    def from_products(cls, field: Field, basis: Sequence[str],
                      products: Mapping[tuple[str, str], Mapping[str, object]], eta=None) -> Algebra:
        """Build from a table ``{(x, y): {label: coeff}}`` listing each unordered pair once."""
        n = len(basis)
        index = {label: i for i, label in enumerate(basis)}
        zero = field.zero
        table: list[list[list | None]] = [[None] * n for _ in range(n)]
        def idx(label):
            if label not in index:
                raise AlgebraError(f"unknown basis label {label!r}")
            return index[label]

        for (x, y), row in products.items():
            i, j = idx(x), idx(y)
            vec = [zero] * n
            for label, coeff in row.items():
                k = idx(label)
                vec[k] = vec[k] + field(coeff)
            for p, q in ((i, j), (j, i)):
                if table[p][q] is not None and table[p][q] != vec:
                    raise AlgebraError(f"conflicting entries for {x}*{y}")
                table[p][q] = vec
        missing = [(basis[i], basis[j]) for i in range(n) for j in range(i, n) if table[i][j] is None]
        if missing:
            raise AlgebraError(f"products not specified: {missing}")
        return cls(field, basis, table, eta)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"no basis element {label!r}") from None

    def element(self, coeffs: Iterable) -> Element:
        coeffs = tuple(self.field(c) for c in coeffs)
        if len(coeffs) != self.dim:
            raise AlgebraError(f"expected {self.dim} coordinates, got {len(coeffs)}")
        return Element(self, coeffs)

    def basis_element(self, key: int | str) -> Element:
        i = self.index(key) if isinstance(key, str) else key
        zero, one = self.field.zero, self.field.one
        return Element(self, tuple(one if k == i else zero for k in range(self.dim)))

    def __getitem__(self, label: str) -> Element:
        return self.basis_element(label)

    def gens(self) -> list[Element]:
        return [self.basis_element(i) for i in range(self.dim)]

    def zero(self) -> Element:
        return Element(self, (self.field.zero,) * self.dim)

    def combination(self, coeffs: Mapping[str, object]) -> Element:
        vec = [self.field.zero] * self.dim
        for label, c in coeffs.items():
            vec[self.index(label)] = vec[self.index(label)] + self.field(c)
        return Element(self, tuple(vec))

    def product_vector(self, x: Sequence, y: Sequence) -> tuple:
        out = [self.field.zero] * self.dim
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            row = self._sparse[i]
            for j, yj in enumerate(y):
                if yj == 0 or not row[j]:
                    continue
                s = xi * yj
                for k, v in row[j]:
                    out[k] = out[k] + s * v
        return tuple(out)

    def substitute(self, values: Mapping[str, object], field: Field, eta=None) -> Algebra:
        """Specialise a function-field algebra by substituting variable values."""
        vals = {k: field(v) for k, v in values.items()}
        conv = lambda x: self.field.evaluate(x, vals, field)  # noqa: E731
        structure = [[[conv(v) for v in self.structure[i][j]] for j in range(self.dim)]
                     for i in range(self.dim)]
        if eta is None and self.eta is not None:
            eta = conv(self.eta)
        return Algebra(field, self.basis, structure, eta)

    def restrict(self, labels: Sequence[str]) -> Algebra:
        """Subalgebra on a subset of basis labels that is closed under products."""
        idx = [self.index(lbl) for lbl in labels]
        rest = set(range(self.dim)) - set(idx)
        structure = []
        for i in idx:
            row = []
            for j in idx:
                vec = self.structure[i][j]
                if any(vec[k] != 0 for k in rest):
                    raise AlgebraError(f"{self.basis[i]}*{self.basis[j]} leaves the span")
                row.append([vec[k] for k in idx])
            structure.append(row)
        return Algebra(self.field, labels, structure, self.eta)

    def __eq__(self, other):
        return (isinstance(other, Algebra) and self.field == other.field
                and self.basis == other.basis and self.structure == other.structure
                and self.eta == other.eta)

    def __hash__(self):
        return hash((self.basis, self.dim))

    def __repr__(self):
        return f"Algebra(dim={self.dim}, basis={list(self.basis)}, field={self.field!r})"

    def to_json(self) -> dict:
        fmt = self.field.format
        entries = [{"i": i, "j": j, "k": k, "v": fmt(v)}
                   for i in range(self.dim) for j in range(i, self.dim)
                   for k, v in enumerate(self.structure[i][j]) if v != 0]
        return {
            "field": self.field.to_json(),
            "eta": None if self.eta is None else fmt(self.eta),
            "basis": list(self.basis),
            "structure": entries,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"

    def save(self, path: str | Path) -> None:
        Path(path).write_text(self.dumps())

    @classmethod
    def from_json(cls, data: Mapping) -> Algebra:
        try:
            field = field_from_json(data["field"])
            basis = list(data["basis"])
            entries = data["structure"]
            eta_text = data.get("eta")
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise LoadError(f"malformed algebra file: {exc}") from exc
        n = len(basis)
        coords: dict[tuple[int, int, int], object] = {}
        for e in entries:
            try:
                i, j, k = int(e["i"]), int(e["j"]), int(e["k"])
                v = field.parse(str(e["v"]))
            except (KeyError, ValueError, TypeError, ZeroDivisionError) as exc:
                raise LoadError(f"bad structure entry {e!r}: {exc}") from exc
            if not all(0 <= t < n for t in (i, j, k)):
                raise LoadError(f"index out of range in {e!r}")
            key = (min(i, j), max(i, j), k)
            if key in coords and coords[key] != v:
                raise LoadError(f"entry {e!r} violates commutativity")
            coords[key] = v
        zero = field.zero
        structure = [[[zero] * n for _ in range(n)] for _ in range(n)]
        for (i, j, k), v in coords.items():
            structure[i][j][k] = v
            structure[j][i][k] = v
        try:
            eta = None if eta_text is None else field.parse(str(eta_text))
            return cls(field, basis, structure, eta)
        except (AlgebraError, ValueError, ZeroDivisionError) as exc:
            raise LoadError(str(exc)) from exc

    @classmethod
    def loads(cls, text: str) -> Algebra:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise LoadError(f"invalid JSON: {exc}") from exc
        return cls.from_json(data)

    @classmethod
    def load(cls, path: str | Path) -> Algebra:
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise LoadError(str(exc)) from exc
        return cls.loads(text)


@dataclass(frozen=True, eq=False)
class Element:
    algebra: Algebra
    coeffs: tuple

    def _check(self, other: Element):
        if not isinstance(other, Element):
            raise TypeError(f"expected an algebra element, got {type(other).__name__}")
        if other.algebra is not self.algebra and other.algebra != self.algebra:
            raise AlgebraMismatch("elements of different algebras")

    def __add__(self, other: Element) -> Element:
        self._check(other)
        return Element(self.algebra, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: Element) -> Element:
        self._check(other)
        return Element(self.algebra, tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> Element:
        return Element(self.algebra, tuple(-x for x in self.coeffs))

    def scale(self, s) -> Element:
        s = self.algebra.field(s)
        return Element(self.algebra, tuple(s * x for x in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, Element):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, s):
        return self.scale(s)

    def __truediv__(self, s):
        return self.scale(self.algebra.field.one / self.algebra.field(s))

    def __eq__(self, other):
        return (isinstance(other, Element) and other.algebra == self.algebra
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash(self.coeffs)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __getitem__(self, label: str):
        return self.coeffs[self.algebra.index(label)]

    def __repr__(self):
        fmt = self.algebra.field.format
        terms = [f"({fmt(c)})*{lbl}" for c, lbl in zip(self.coeffs, self.algebra.basis) if c != 0]
        return " + ".join(terms) if terms else "0"

    def to_json(self) -> list[str]:
        return [self.algebra.field.format(c) for c in self.coeffs]


def multiply(x: Element, y: Element) -> Element:
    x._check(y)
    return Element(x.algebra, x.algebra.product_vector(x.coeffs, y.coeffs))


def adjoint_matrix(a: Element) -> Matrix:
    """Matrix of ``u -> a u`` acting on coordinate columns."""
    alg = a.algebra
    cols = [alg.product_vector(a.coeffs, e.coeffs) for e in alg.gens()]
    return Matrix.from_columns(cols, alg.field, alg.dim)


def is_idempotent(x: Element) -> bool:
    return multiply(x, x) == x


def principal_power(x: Element, k: int) -> Element:
    """``x^1 = x`` and ``x^k = x^(k-1) x``."""
    if not isinstance(k, int) or k < 1:
        raise InvalidExponent(f"principal powers need k >= 1, got {k!r}")
    p = x
    for _ in range(k - 1):
        p = multiply(p, x)
    return p


@dataclass(frozen=True)
class ClosureResult:
    basis: list[Element]
    dim: int
    iterations: int


def subalgebra_closure(generators: Sequence[Element], cap: int = DEFAULT_CLOSURE_CAP) -> ClosureResult:
    """Span of all products of the generators.

    Each pass multiplies every pair ``(i <= j)`` of the basis found before the
    pass, in lexicographic order, appending products outside the current span
    as they appear. Passes repeat until one adds nothing.
    """
    if not generators:
        raise AlgebraError("closure needs at least one generator")
    alg = generators[0].algebra
    for g in generators:
        generators[0]._check(g)
    span = Span(alg.dim, alg.field)
    basis = [g for g in generators if span.add(g.coeffs)]
    if len(basis) > cap:
        raise CapExceeded(f"{len(basis)} independent generators exceed cap {cap}")
    iterations = 0
    done: set[tuple[int, int]] = set()
    while True:
        iterations += 1
        snapshot = len(basis)
        grew = False
        for i in range(snapshot):
            for j in range(i, snapshot):
                if (i, j) in done:
                    continue
                done.add((i, j))
                p = multiply(basis[i], basis[j])
                if span.add(p.coeffs):
                    if len(basis) + 1 > cap:
                        raise CapExceeded(f"closure dimension exceeds cap {cap}")
                    basis.append(p)
                    grew = True
        if not grew:
            return ClosureResult(basis, len(basis), iterations)
