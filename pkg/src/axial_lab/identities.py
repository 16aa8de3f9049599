"""Exact checks of the identities satisfied by PC(eta)-axial algebras.

Every check returns an :class:`IdentityReport`; a violation records the
inputs and the exact residual ``lhs - rhs``. Basis checks are exhaustive;
sampled checks draw integer coefficients from -9..9 with a reproducible seed.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field as dc_field
from itertools import product
from typing import Sequence

from .algebra import Algebra, Element, principal_power
from .axial import (AxialError, BilinearForm, ETA, HALF, PeirceDecomposition, _resolve_eta,
                    peirce_decompose)
from .linalg import Span

DEFAULT_SEED = 1729
SEED_ENV = "AXIAL_LAB_SEED"
COEFF_RANGE = range(-9, 10)


class PreconditionError(AxialError, ValueError):
    pass


def default_seed() -> int:
    """Seed from ``$AXIAL_LAB_SEED`` when set, else a fixed constant."""
    raw = os.environ.get(SEED_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_SEED
    try:
        return int(raw)
    except ValueError as exc:
        raise ValueError(f"{SEED_ENV} must be an integer, got {raw!r}") from exc


@dataclass
class IdentityReport:
    name: str
    universe: str
    violations: list[dict] = dc_field(default_factory=list)
    seed: int | None = None

    @property
    def passed(self) -> bool:
        return not self.violations

    def record(self, inputs, residual: Element) -> None:
        if not residual.is_zero():
            self.violations.append({"inputs": inputs, "residual": residual.to_json()})

    def to_json(self) -> dict:
        return {"name": self.name, "pass": self.passed, "universe": self.universe,
                "violations": self.violations, "seed": self.seed}


@dataclass(frozen=True)
class TrainCoefficients:
    """``x^3 + lambda1 w(x) x^2 + lambda2 w(x)^2 x = 0``."""

    lambda1: object
    lambda2: object
    rank: int = 3


def train_coefficients(eta, field) -> TrainCoefficients:
    eta = field(eta)
    return TrainCoefficients(-(eta + 1), eta)


def random_element(algebra: Algebra, rng: random.Random) -> Element:
    return algebra.element([rng.choice(COEFF_RANGE) for _ in range(algebra.dim)])


def _describe(x: Element):
    """Label for a basis element, coefficient list otherwise."""
    nz = [i for i, c in enumerate(x.coeffs) if c != 0]
    if len(nz) == 1 and x.coeffs[nz[0]] == 1:
        return x.algebra.basis[nz[0]]
    return x.to_json()


def _samples(algebra: Algebra, seed: int | None, count: int) -> tuple[int, list[Element]]:
    seed = default_seed() if seed is None else seed
    rng = random.Random(seed)
    return seed, [random_element(algebra, rng) for _ in range(count)]


def check_a_ax(algebra: Algebra, axis: Element, form: BilinearForm, eta=None,
               seed: int | None = None, samples: int = 20) -> IdentityReport:
    """``a(ax) = (a,x)(1-eta)/2 a - eta/2 x + (1+2eta)/2 ax``."""
    eta = _resolve_eta(algebra, eta)
    one = algebra.field.one
    seed, rand = _samples(algebra, seed, samples)
    report = IdentityReport("a(ax)", f"basis elements and {samples} random elements", seed=seed)
    for x in algebra.gens() + rand:
        ax = axis * x
        rhs = (axis.scale(form(axis, x) * (one - eta) / 2) - x.scale(eta / 2)
               + ax.scale((one + 2 * eta) / 2))
        report.record([_describe(x)], axis * ax - rhs)
    return report


def check_eigencomponent_pairings(algebra: Algebra, axis: Element, form: BilinearForm, eta=None,
                                  x: Element | None = None, y: Element | None = None,
                                  decomp: PeirceDecomposition | None = None) -> IdentityReport:
    """Pairings of the eta- and 1/2-components of ``x`` and ``y`` with respect to ``axis``.

    With ``x`` and ``y`` omitted every unordered pair of basis elements is checked.
    """
    eta = _resolve_eta(algebra, eta)
    decomp = decomp or peirce_decompose(axis, eta)
    one = algebra.field.one
    if x is None or y is None:
        gens = algebra.gens()
        pairs = [(gens[i], gens[j]) for i in range(len(gens)) for j in range(i, len(gens))]
        universe = "basis pairs"
    else:
        pairs = [(x, y)]
        universe = "given pair"
    report = IdentityReport("eigencomponent pairings", universe)
    comps = {}
    for u, v in pairs:
        for w in (u, v):
            if w.coeffs not in comps:
                comps[w.coeffs] = decomp.components(w)
        cu, cv = comps[u.coeffs], comps[v.coeffs]
        al, ga, be, ps = form(axis, u), form(axis, v), form(u, v), form(axis, u * v)
        expected = {
            ETA: (al * ga + be - 2 * ps) / (one - 2 * eta),
            HALF: 2 * ((eta - 1) * al * ga - eta * be + ps) / (one - 2 * eta),
        }
        for key, want in expected.items():
            got = form(cu[key], cv[key])
            if got != want:
                report.violations.append({
                    "inputs": [_describe(u), _describe(v)], "component": key,
                    "residual": algebra.field.format(got - want)})
    return report


def check_triple_product(algebra: Algebra, axis: Element, form: BilinearForm, eta=None) -> IdentityReport:
    """``a(xy) + x(ay) + y(ax)`` in closed form, plus its specialisation.

    The specialisation for eta = -1 is ``(x,y)a + (a,y)x + (a,x)y``; for
    eta != -1 it is written with the weight ``w(u) = (a, u)``.
    """
    eta = _resolve_eta(algebra, eta)
    one = algebra.field.one
    a = axis
    report = IdentityReport("triple product", "basis pairs")
    gens = algebra.gens()
    for i, j in ((i, j) for i in range(len(gens)) for j in range(i, len(gens))):
        x, y = gens[i], gens[j]
        xy, ax, ay = x * y, a * x, a * y
        lhs = a * xy + x * ay + y * ax
        al, ga, be, ps = form(a, x), form(a, y), form(x, y), form(a, xy)
        general = (a.scale((one + eta) * (ps - al * ga) - eta * be) - x.scale(ga * eta)
                   - y.scale(al * eta) + (xy + ax.scale(ga) + ay.scale(al)).scale(one + eta))
        if eta == -one:
            special = a.scale(be) + x.scale(ga) + y.scale(al)
        else:
            special = ((ay.scale(al) + ax.scale(ga) + xy).scale(one + eta)
                       - (a.scale(ps) + x.scale(ga) + y.scale(al)).scale(eta))
        report.record([x.algebra.basis[i], x.algebra.basis[j], "general"], lhs - general)
        report.record([x.algebra.basis[i], x.algebra.basis[j], "specialised"], lhs - special)
    return report


def check_pseudo_composition(algebra: Algebra, form: BilinearForm, seed: int | None = None,
                             samples: int = 100) -> IdentityReport:
    """Linearised ``x(yz) + y(zx) + z(xy) = (y,z)x + (x,z)y + (x,y)z`` on ordered
    basis triples, then ``x^3 = (x,x)x`` on random elements."""
    field = algebra.field
    if field.characteristic == 3:
        raise PreconditionError("the pseudo-composition identity needs characteristic other than 3")
    seed, rand = _samples(algebra, seed, samples)
    universe = "ordered basis triples" + (f" and {samples} random cubes" if samples else "")
    report = IdentityReport("pseudo-composition", universe, seed=seed)
    gens = algebra.gens()
    prods = [[gens[i] * gens[j] for j in range(len(gens))] for i in range(len(gens))]
    g = form.gram
    for i, j, k in product(range(len(gens)), repeat=3):
        x, y, z = gens[i], gens[j], gens[k]
        lhs = x * prods[j][k] + y * prods[k][i] + z * prods[i][j]
        rhs = x.scale(g[j, k]) + y.scale(g[i, k]) + z.scale(g[i, j])
        report.record([algebra.basis[i], algebra.basis[j], algebra.basis[k]], lhs - rhs)
    for x in rand:
        report.record([x.to_json()], principal_power(x, 3) - x.scale(form(x, x)))
    return report


def check_train(algebra: Algebra, form: BilinearForm, eta=None, axis: Element | None = None,
                seed: int | None = None, samples: int = 100) -> IdentityReport:
    """Rank-3 train identity ``x^3 = (eta+1) w(x) x^2 - eta w(x)^2 x``.

    The three-variable form is symmetric, so basis triples are taken up to
    order. The cubic itself is checked only when 3 is invertible.
    """
    eta = _resolve_eta(algebra, eta)
    field = algebra.field
    one = field.one
    if eta == -one:
        raise PreconditionError("the train identity is for eta != -1")
    a = algebra.gens()[0] if axis is None else axis
    gens = algebra.gens()
    n = len(gens)
    w = [form(a, e) for e in gens]
    prods = [[gens[i] * gens[j] for j in range(n)] for i in range(n)]
    wp = [[form(a, prods[i][j]) for j in range(n)] for i in range(n)]
    cubic = field.characteristic != 3
    seed, rand = _samples(algebra, seed, samples if cubic else 0)
    if not cubic:
        universe = "basis triples (linearised only)"
    else:
        universe = "basis triples" + (f" and {samples} random cubes" if samples else "")
    report = IdentityReport("train", universe, seed=seed if cubic else None)
    for i, j, k in ((i, j, k) for i in range(n) for j in range(i, n) for k in range(j, n)):
        x, y, z = gens[i], gens[j], gens[k]
        lhs = x * prods[j][k] + y * prods[i][k] + z * prods[j][i]
        rhs = ((prods[i][j].scale(w[k]) + prods[j][k].scale(w[i]) + prods[i][k].scale(w[j]))
               .scale(eta + one)
               - (x.scale(wp[j][k]) + y.scale(wp[k][i]) + z.scale(wp[i][j])).scale(eta))
        report.record([algebra.basis[i], algebra.basis[j], algebra.basis[k]], lhs - rhs)
    coeffs = train_coefficients(eta, field)
    for x in rand:
        wx = form(a, x)
        x2 = x * x
        residual = x2 * x + x2.scale(coeffs.lambda1 * wx) + x.scale(coeffs.lambda2 * wx * wx)
        report.record([x.to_json()], residual)
    return report


def check_axay(algebra: Algebra, axis: Element, form: BilinearForm, eta=None) -> IdentityReport:
    """Closed form of ``(ax)(ay)`` on all basis pairs."""
    eta = _resolve_eta(algebra, eta)
    one = algebra.field.one
    a = axis
    quarter = one / 4
    report = IdentityReport("(ax)(ay)", "basis pairs")
    gens = algebra.gens()
    for i, j in ((i, j) for i in range(len(gens)) for j in range(i, len(gens))):
        x, y = gens[i], gens[j]
        xy, ax, ay = x * y, a * x, a * y
        tail = (x * ay).scale(2) + (y * ax).scale(2) - xy
        if eta == -one:
            rhs = (a.scale(6 * form(a, xy) - 3 * form(x, y)) + x.scale(form(a, y))
                   + y.scale(form(a, x)) - ax.scale(2 * form(a, y)) - ay.scale(2 * form(a, x)) + tail)
        else:
            wx, wy = form(a, x), form(a, y)
            rhs = (a.scale((one - 2 * eta) * form(a, xy)) - x.scale(eta * wy) - y.scale(eta * wx)
                   + ax.scale(2 * eta * wy) + ay.scale(2 * eta * wx) + tail)
        report.record([algebra.basis[i], algebra.basis[j]], ax * ay - rhs.scale(quarter))
    return report


def check_fusion_restriction(algebra: Algebra, axis: Element, eta=None,
                             decomp: PeirceDecomposition | None = None) -> IdentityReport:
    """``A_eta(a)^2 = 0`` and ``A_1/2(a)^2`` inside ``A_eta(a)``, for eta != -1."""
    eta = _resolve_eta(algebra, eta)
    if eta == -algebra.field.one:
        raise PreconditionError("the fusion restriction is for eta != -1")
    decomp = decomp or peirce_decompose(axis, eta)
    report = IdentityReport("fusion restriction", "eigenbasis pairs")
    ev, hv = decomp.eigen_eta, decomp.eigen_half
    for p in range(len(ev)):
        for q in range(p, len(ev)):
            report.record([f"eta[{p}]", f"eta[{q}]"], algebra.element(algebra.product_vector(ev[p], ev[q])))
    span = Span(algebra.dim, algebra.field)
    for v in ev:
        span.add(v)
    for p in range(len(hv)):
        for q in range(p, len(hv)):
            # residual: what is left of the product after reducing by A_eta
            rest = span.reduce(algebra.product_vector(hv[p], hv[q]))
            report.record([f"half[{p}]", f"half[{q}]"], algebra.element(rest))
    return report


def applicable_checks(algebra: Algebra, axis: Element, form: BilinearForm, eta=None,
                      seed: int | None = None, samples: int = 100,
                      decomp: PeirceDecomposition | None = None) -> list[IdentityReport]:
    """Every identity that applies to ``algebra``, sorted by name."""
    eta = _resolve_eta(algebra, eta)
    decomp = decomp or peirce_decompose(axis, eta)
    minus_one = eta == -algebra.field.one
    reports = [
        check_a_ax(algebra, axis, form, eta, seed=seed),
        check_eigencomponent_pairings(algebra, axis, form, eta, decomp=decomp),
        check_triple_product(algebra, axis, form, eta),
        check_axay(algebra, axis, form, eta),
    ]
    if minus_one:
        reports.append(check_pseudo_composition(algebra, form, seed=seed, samples=samples))
    else:
        reports.append(check_train(algebra, form, eta, axis=axis, seed=seed, samples=samples))
        reports.append(check_fusion_restriction(algebra, axis, eta, decomp=decomp))
    return sorted(reports, key=lambda r: r.name)


__all__: Sequence[str] = [
    "DEFAULT_SEED", "SEED_ENV", "IdentityReport", "PreconditionError", "TrainCoefficients",
    "applicable_checks", "check_a_ax", "check_axay", "check_eigencomponent_pairings",
    "check_fusion_restriction", "check_pseudo_composition", "check_train", "check_triple_product",
    "default_seed", "random_element", "train_coefficients",
]
