"""Axial-algebra machinery for the PC(eta) fusion law."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .algebra import Algebra, AlgebraError, Element, adjoint_matrix, multiply
from .linalg import LinAlgError, Matrix, Span, inverse, kernel_basis
from .scalars import Field, FunctionField, is_admissible_eta

# eigenvalue labels, in the order eigenspaces are listed everywhere
ONE, ETA, HALF = "1", "eta", "1/2"
EIGEN_KEYS = (ONE, ETA, HALF)


class AxialError(AlgebraError):
    pass


class InadmissibleEta(AxialError, ValueError):
    pass


class NotIdempotent(AxialError):
    pass


class NotDiagonalizable(AxialError):
    pass


class NotPrimitive(AxialError):
    pass


class NotAutomorphism(AxialError):
    pass


class SpanIncomplete(AxialError):
    pass


class NotSymmetric(AxialError):
    pass


class NotFrobenius(AxialError):
    pass


def eigenvalue(key: str, eta, field: Field):
    return {ONE: field.one, ETA: field(eta), HALF: field.one / 2}[key]


def _resolve_eta(algebra: Algebra, eta):
    if eta is None:
        eta = algebra.eta
    if eta is None:
        raise InadmissibleEta("no eta given and the algebra does not record one")
    eta = algebra.field(eta)
    if not is_admissible_eta(eta, algebra.field):
        raise InadmissibleEta(f"eta = {algebra.field.format(eta)} is not admissible")
    return eta


@dataclass(frozen=True)
class FusionLaw:
    """Symmetric table ``(lambda, mu) -> allowed eigenvalue labels``."""

    table: Mapping[tuple[str, str], frozenset]
    name: str = "custom"

    @classmethod
    def pc(cls) -> FusionLaw:
        rules = {
            (ONE, ONE): {ONE},
            (ONE, ETA): {ETA},
            (ONE, HALF): {HALF},
            (ETA, ETA): {ONE},
            (ETA, HALF): {HALF},
            (HALF, HALF): {ETA, ONE},
        }
        return cls.from_rules(rules, "PC(eta)")

    @classmethod
    def from_rules(cls, rules: Mapping[tuple[str, str], Iterable[str]], name: str = "custom") -> FusionLaw:
        table = {}
        for (lam, mu), allowed in rules.items():
            table[(lam, mu)] = table[(mu, lam)] = frozenset(allowed)
        return cls(table, name)

    def __call__(self, lam: str, mu: str) -> frozenset:
        return self.table.get((lam, mu), frozenset())

    def is_symmetric(self) -> bool:
        return all(self.table.get((m, l)) == v for (l, m), v in self.table.items())


@dataclass(frozen=True)
class PeirceDecomposition:
    axis: Element
    eta: object
    eigen_1: list
    eigen_eta: list
    eigen_half: list

    @property
    def algebra(self) -> Algebra:
        return self.axis.algebra

    def spaces(self) -> dict[str, list]:
        return {ONE: self.eigen_1, ETA: self.eigen_eta, HALF: self.eigen_half}

    @property
    def dims(self) -> tuple[int, int, int]:
        return len(self.eigen_1), len(self.eigen_eta), len(self.eigen_half)

    def labelled_basis(self) -> list[tuple[str, int, tuple]]:
        return [(key, i, v) for key, vs in self.spaces().items() for i, v in enumerate(vs)]

    @cached_property
    def basis_matrix(self) -> Matrix:
        cols = [v for _, _, v in self.labelled_basis()]
        return Matrix.from_columns(cols, self.algebra.field, self.algebra.dim)

    @cached_property
    def _inverse(self) -> Matrix:
        return inverse(self.basis_matrix)

    def coordinates(self, x) -> tuple:
        """Coordinates of ``x`` (element or vector) in the eigenbasis."""
        v = x.coeffs if isinstance(x, Element) else tuple(x)
        return self._inverse.apply(v)

    def components(self, x) -> dict[str, tuple]:
        """Projections of ``x`` onto the three eigenspaces, as vectors."""
        coords = self.coordinates(x)
        alg = self.algebra
        out, pos = {}, 0
        for key, vs in self.spaces().items():
            acc = [alg.field.zero] * alg.dim
            for v in vs:
                c = coords[pos]
                pos += 1
                if c != 0:
                    acc = [a + c * b for a, b in zip(acc, v)]
            out[key] = tuple(acc)
        return out

    def to_json(self) -> dict:
        fmt = self.algebra.field.format
        return {
            "axis": self.axis.to_json(),
            "eta": fmt(self.eta),
            "dims": list(self.dims),
            "eigenspaces": {key: [[fmt(c) for c in v] for v in vs]
                            for key, vs in self.spaces().items()},
        }


def peirce_decompose(axis: Element, eta=None) -> PeirceDecomposition:
    """Eigenspaces of ``ad_axis`` for the eigenvalues 1, eta, 1/2."""
    alg = axis.algebra
    eta = _resolve_eta(alg, eta)
    if multiply(axis, axis) != axis:
        raise NotIdempotent(f"{axis!r} is not idempotent")
    ad = adjoint_matrix(axis)
    eye = Matrix.identity(alg.dim, alg.field)
    spaces = {key: kernel_basis(ad - eye.scale(eigenvalue(key, eta, alg.field)))
              for key in EIGEN_KEYS}
    total = sum(len(v) for v in spaces.values())
    if total != alg.dim:
        raise NotDiagonalizable(
            f"eigenspace dimensions {[len(v) for v in spaces.values()]} do not sum to {alg.dim}")
    return PeirceDecomposition(axis, eta, spaces[ONE], spaces[ETA], spaces[HALF])


def is_primitive(decomp: PeirceDecomposition) -> bool:
    if len(decomp.eigen_1) != 1:
        return False
    span = Span(decomp.algebra.dim, decomp.algebra.field)
    span.add(decomp.axis.coeffs)
    return span.contains(decomp.eigen_1[0]) and not decomp.axis.is_zero()


@dataclass
class FusionReport:
    axis: list[str]
    law: str
    violations: list[dict] = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"axis": self.axis, "law": self.law, "pass": self.passed,
                "violations": self.violations}


def check_fusion(decomp: PeirceDecomposition, law: FusionLaw | None = None) -> FusionReport:
    """Check ``A_lam A_mu`` against the law on all pairs of eigenbasis vectors."""
    law = law or FusionLaw.pc()
    alg = decomp.algebra
    fmt = alg.field.format
    labelled = decomp.labelled_basis()
    report = FusionReport(decomp.axis.to_json(), law.name)
    for p, (lam, i, u) in enumerate(labelled):
        for mu, j, v in labelled[p:]:
            coords = decomp.coordinates(alg.product_vector(u, v))
            allowed = law(lam, mu)
            for (nu, t, _), c in zip(labelled, coords):
                if nu not in allowed and c != 0:
                    report.violations.append({
                        "lambda": lam, "mu": mu, "u": i, "v": j,
                        "component": nu, "index": t, "coefficient": fmt(c),
                    })
    return report


def projection_coefficient(axis: Element, x, decomp: PeirceDecomposition | None = None):
    """The scalar ``phi`` with ``phi * axis`` the projection of ``x`` onto A_1(axis)."""
    decomp = decomp or peirce_decompose(axis)
    if not is_primitive(decomp):
        raise NotPrimitive(f"{axis!r} is not a primitive axis")
    c0 = decomp.coordinates(x)[0]
    v1 = decomp.eigen_1[0]
    k = next(i for i, c in enumerate(axis.coeffs) if c != 0)
    return c0 * v1[k] / axis.coeffs[k]


def miyamoto(decomp: PeirceDecomposition, check: bool = True) -> Matrix:
    """Matrix (acting on coordinate columns) of the involution that fixes
    A_1 + A_eta and negates A_1/2.
    """
    alg = decomp.algebra
    field = alg.field
    signs = [field.one] * (len(decomp.eigen_1) + len(decomp.eigen_eta)) + [-field.one] * len(decomp.eigen_half)
    P = decomp.basis_matrix
    m = P @ Matrix.diagonal(signs, field) @ decomp._inverse
    if check:
        images = m.columns()
        for i in range(alg.dim):
            for j in range(i, alg.dim):
                lhs = m.apply(alg.structure[i][j])
                rhs = alg.product_vector(images[i], images[j])
                if lhs != rhs:
                    raise NotAutomorphism(
                        f"involution does not preserve {alg.basis[i]}*{alg.basis[j]}")
    return m


def apply_matrix(m: Matrix, x: Element) -> Element:
    return Element(x.algebra, m.apply(x.coeffs))


@dataclass
class AxisOrbit:
    """Independent axes found by the orbit search.

    Axis ``i`` equals ``g_i(generators[source[i]])`` for an automorphism
    ``g_i`` (None meaning the identity).  Miyamoto involutions and
    projection coefficients of images are transported from the generators
    instead of being recomputed from scratch.
    """

    generators: list[Element]
    decomps: list[PeirceDecomposition]
    taus: list[Matrix]
    axes: list[Element] = dc_field(default_factory=list)
    source: list[int] = dc_field(default_factory=list)
    maps: list[tuple[Matrix, Matrix] | None] = dc_field(default_factory=list)
    examined: int = 0

    def tau(self, i: int) -> Matrix:
        """Miyamoto involution of axis ``i``: ``g tau_s g^-1``."""
        t = self.taus[self.source[i]]
        if self.maps[i] is None:
            return t
        g, ginv = self.maps[i]
        return g @ t @ ginv

    def projection(self, i: int, x) -> object:
        """``phi_{axis_i}(x)``, using ``phi_{g(a)}(x) = phi_a(g^-1 x)``."""
        s = self.source[i]
        v = x.coeffs if isinstance(x, Element) else tuple(x)
        if self.maps[i] is not None:
            v = self.maps[i][1].apply(v)
        return projection_coefficient(self.generators[s], v, self.decomps[s])


def _axis_orbit(axes: Sequence[Element], eta=None, max_examined: int | None = None) -> AxisOrbit:
    if not axes:
        raise AxialError("need at least one axis")
    alg = axes[0].algebra
    eta = _resolve_eta(alg, eta)
    cap = 4 * alg.dim if max_examined is None else max_examined
    decomps = []
    for x in axes:
        d = peirce_decompose(x, eta)
        if not is_primitive(d):
            raise NotPrimitive(f"{x!r} is not a primitive axis")
        decomps.append(d)
    orbit = AxisOrbit(list(axes), decomps, [miyamoto(d) for d in decomps])
    span = Span(alg.dim, alg.field)
    for s, x in enumerate(axes):
        if span.add(x.coeffs):
            orbit.axes.append(x)
            orbit.source.append(s)
            orbit.maps.append(None)
    taus: dict[int, Matrix] = {}
    done: set[tuple[int, int]] = set()
    while len(orbit.axes) < alg.dim:
        pending = [(t, s) for t in range(len(orbit.axes)) for s in range(len(orbit.axes))
                   if t != s and (t, s) not in done]
        if not pending:
            break
        for t, s in pending:
            if len(orbit.axes) == alg.dim:
                break
            if orbit.examined >= cap:
                raise SpanIncomplete(f"examined {orbit.examined} axes; span has dimension "
                                     f"{len(orbit.axes)} of {alg.dim}")
            done.add((t, s))
            orbit.examined += 1
            if t not in taus:
                taus[t] = orbit.tau(t)
            tau = taus[t]
            image = tau.apply(orbit.axes[s].coeffs)
            if not span.add(image):
                continue
            # image = tau_t g_s (generator); tau_t is an involution
            prev = orbit.maps[s]
            g, ginv = (tau, tau) if prev is None else (tau @ prev[0], prev[1] @ tau)
            orbit.axes.append(Element(alg, image))
            orbit.source.append(orbit.source[s])
            orbit.maps.append((g, ginv))
    if len(orbit.axes) < alg.dim:
        raise SpanIncomplete(f"Miyamoto orbit spans dimension {len(orbit.axes)} of {alg.dim}")
    return orbit


def axis_orbit(axes: Sequence[Element], eta=None, max_examined: int | None = None) -> AxisOrbit:
    """Close ``axes`` under the Miyamoto involutions of axes already found
    until an independent spanning set of primitive axes is reached.
    """
    return _axis_orbit(axes, eta, max_examined)


def axis_spanning_set(axes: Sequence[Element], eta=None, max_examined: int | None = None) -> list[Element]:
    return _axis_orbit(axes, eta, max_examined).axes


@dataclass(frozen=True)
class BilinearForm:
    algebra: Algebra
    gram: Matrix

    def __call__(self, x, y):
        u = x.coeffs if isinstance(x, Element) else tuple(x)
        v = y.coeffs if isinstance(y, Element) else tuple(y)
        zero = self.algebra.field.zero
        gv = self.gram.apply(v)
        acc = zero
        for a, b in zip(u, gv):
            if a != 0 and b != 0:
                acc = acc + a * b
        return acc

    def frobenius_violations(self) -> list[tuple[int, int, int]]:
        """Basis triples (i, j, k) with (e_i e_j, e_k) != (e_i, e_j e_k)."""
        alg = self.algebra
        n = alg.dim
        gt = self.gram.transpose()
        # pair[i][j][k] = (e_i e_j, e_k)
        pair = [[gt.apply(alg.structure[i][j]) for j in range(n)] for i in range(n)]
        bad = []
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if pair[i][j][k] != pair[j][k][i]:
                        bad.append((i, j, k))
        return bad

    def is_frobenius(self) -> bool:
        return self.gram.is_symmetric() and not self.frobenius_violations()

    def to_json(self) -> dict:
        return {"basis": list(self.algebra.basis), "gram": self.gram.to_json()}


def _form_from_phi(axis_basis: Sequence[Element], phi: Matrix) -> BilinearForm:
    alg = axis_basis[0].algebra
    n, field = alg.dim, alg.field
    if len(axis_basis) != n:
        raise SpanIncomplete(f"{len(axis_basis)} axes for an algebra of dimension {n}")
    if not phi.is_symmetric():
        raise NotSymmetric("phi_a(b) != phi_b(a) for some axes")
    P = Matrix.from_columns([a.coeffs for a in axis_basis], field, n)
    try:
        Pinv = inverse(P)
    except LinAlgError as exc:
        raise SpanIncomplete("axes are not linearly independent") from exc
    form = BilinearForm(alg, Pinv.transpose() @ phi @ Pinv)
    bad = form.frobenius_violations()
    if bad:
        i, j, k = bad[0]
        b = alg.basis
        raise NotFrobenius(f"({b[i]}{b[j]}, {b[k]}) != ({b[i]}, {b[j]}{b[k]}) and {len(bad) - 1} more")
    for a in axis_basis:
        if form(a, a) != field.one:
            raise NotFrobenius(f"(a, a) != 1 for axis {a!r}")
    return form


def frobenius_from_axes(axis_basis: Sequence[Element], decomps: Sequence[PeirceDecomposition] | None = None,
                        eta=None) -> BilinearForm:
    """Form with ``(a_i, a_j) = phi_{a_i}(a_j)`` on a basis of primitive axes."""
    if decomps is None:
        decomps = [peirce_decompose(a, eta) for a in axis_basis]
    n = len(axis_basis)
    phi = Matrix([[projection_coefficient(axis_basis[i], axis_basis[j], decomps[i]) for j in range(n)]
                  for i in range(n)], axis_basis[0].algebra.field)
    return _form_from_phi(axis_basis, phi)


def frobenius_from_orbit(orbit: AxisOrbit) -> BilinearForm:
    """Same form as :func:`frobenius_from_axes`, with projections transported."""
    axes = orbit.axes
    n = len(axes)
    phi = Matrix([[orbit.projection(i, axes[j]) for j in range(n)] for i in range(n)],
                 axes[0].algebra.field)
    return _form_from_phi(axes, phi)


def frobenius_form(generators: Sequence[Element], eta=None) -> BilinearForm:
    """The Frobenius form of the algebra generated by ``generators``."""
    return frobenius_from_orbit(_axis_orbit(generators, eta))


def weight_of(form: BilinearForm, axis: Element, x: Element):
    """``w_axis(x) = (axis, x)``; a ring homomorphism when eta != -1."""
    return form(axis, x)


def weight_violations(form: BilinearForm, axes: Sequence[Element]) -> list[str]:
    """Failures of ``w(xy) = w(x) w(y)`` on basis pairs and of ``w_a = w_b``."""
    alg = form.algebra
    a0 = axes[0]
    w = [weight_of(form, a0, e) for e in alg.gens()]
    bad = []
    for i in range(alg.dim):
        for j in range(i, alg.dim):
            wij = form(a0.coeffs, alg.structure[i][j])
            if wij != w[i] * w[j]:
                bad.append(f"w({alg.basis[i]}*{alg.basis[j]}) != w({alg.basis[i]})w({alg.basis[j]})")
    for b in axes[1:]:
        for i, e in enumerate(alg.gens()):
            if weight_of(form, b, e) != w[i]:
                bad.append(f"w_a({alg.basis[i]}) depends on the axis")
    return bad


@dataclass(frozen=True)
class FormValues:
    """The four form parameters of a 3-generated algebra."""

    alpha: object
    beta: object
    gamma: object
    psi: object

    @classmethod
    def symbolic(cls, field: FunctionField) -> FormValues:
        return cls(*(field.gen(n) for n in ("alpha", "beta", "gamma", "psi")))

    @classmethod
    def generic(cls, field: Field) -> FormValues:
        return cls(field(2), field(3), field(5), field(7))

    @classmethod
    def ones(cls, field: Field) -> FormValues:
        return cls(field.one, field.one, field.one, field.one)

    def astuple(self) -> tuple:
        return (self.alpha, self.beta, self.gamma, self.psi)

    def convert(self, field: Field) -> FormValues:
        return FormValues(*(field(v) for v in self.astuple()))
