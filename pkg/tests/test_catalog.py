from fractions import Fraction

import pytest

from axial_lab import catalog
from axial_lab.algebra import Algebra
from axial_lab.axial import (FormValues, InadmissibleEta, is_primitive, peirce_decompose)
from axial_lab.algebra import is_idempotent
from axial_lab.linalg import determinant
from axial_lab.scalars import QQ, prime_field

H, Q = Fraction(1, 2), Fraction(1, 4)


def ab_squared_oracle(alg, eta, alpha):
    """The displayed (ab)^2 rule of the two-generated algebra, evaluated directly."""
    outer = (1 - eta) * (1 - 2 * eta) * alpha - eta * (1 + 2 * eta)
    inner = 2 * alpha * (1 - eta) * (1 + 2 * eta) + 6 * eta + 4 * eta**2
    return (alg["a"] + alg["b"]).scale(outer / 4) + alg["ab"].scale(inner / 4)


def test_two_generated_at_minus_one_alpha_zero():
    alg = catalog.build_two_generated(-1, 0, QQ)
    assert alg["a"] * alg["ab"] == alg.combination({"b": H, "ab": -H})
    assert alg["ab"] * alg["ab"] == alg.combination({"a": -Q, "b": -Q, "ab": -H})
    assert alg["ab"] * alg["ab"] == ab_squared_oracle(alg, QQ(-1), QQ(0))


@pytest.mark.parametrize("eta,alpha", [(-1, 3), (0, 2), (Fraction(1, 3), Fraction(-5, 2)), (4, 1)])
def test_two_generated_ab_squared(eta, alpha):
    alg = catalog.build_two_generated(eta, alpha, QQ)
    assert alg["ab"] * alg["ab"] == ab_squared_oracle(alg, QQ(eta), QQ(alpha))


def test_two_generated_symbolic(sym_two):
    f = sym_two.field
    eta, alpha = f.gen("eta"), f.gen("alpha")
    assert sym_two["ab"] * sym_two["ab"] == ab_squared_oracle(sym_two, eta, alpha)
    # swapping a and b swaps the rules
    assert (sym_two["b"] * sym_two["ab"]).coeffs == tuple(
        (sym_two["a"] * sym_two["ab"]).coeffs[i] for i in (1, 0, 2))
    for g in "ab":
        x = sym_two[g]
        assert is_idempotent(x) and is_primitive(peirce_decompose(x))


def test_two_generated_default_is_symbolic(sym_two):
    assert catalog.build_two_generated() == sym_two


@pytest.mark.parametrize("eta,field", [
    (Fraction(1, 2), QQ), (1, QQ), (3, prime_field(5)), (1, prime_field(7)), (2, prime_field(3)),
])
def test_two_generated_rejects(eta, field):
    with pytest.raises(InadmissibleEta):
        catalog.build_two_generated(eta, 0, field)


def test_two_dim_half():
    alg = catalog.build_two_dim_degenerate("half")
    assert alg["a"] * alg["b"] == (alg["a"] + alg["b"]) / 2
    assert alg["a"] * (alg["a"] * alg["b"]) == (alg["a"].scale(3) + alg["b"]) / 4
    assert alg.eta == -1


def test_two_dim_negsum():
    alg = catalog.build_two_dim_degenerate("negsum")
    assert alg["a"] * alg["b"] == -alg["a"] - alg["b"]
    assert is_idempotent(alg["a"]) and is_idempotent(alg["b"])


def test_two_dim_rejects_small_characteristic():
    with pytest.raises(InadmissibleEta):
        catalog.build_two_dim_degenerate("half", prime_field(3))
    with pytest.raises(ValueError):
        catalog.build_two_dim_degenerate("other")


def test_three_minus_one_products(sym_minus_one, f4):
    alg = sym_minus_one
    al, be, ga, ps = FormValues.symbolic(f4).astuple()
    assert alg["c"] * alg["ab"] == alg.combination(
        {"a": be, "b": ga, "c": al, "a(bc)": -1, "b(ac)": -1})
    assert alg["a"] * alg["a(bc)"] == alg.combination({"a": ps, "bc": H, "a(bc)": -H})
    zero = catalog.build_three_minus_one(FormValues(0, 0, 0, 0), QQ)
    assert zero["ab"] * zero["ab"] == zero.combination({"a": -Q, "b": -Q, "ab": -H})


def test_three_minus_one_default_is_symbolic(sym_minus_one):
    assert catalog.build_three_minus_one() == sym_minus_one


def test_three_generic_products(sym_generic, f_eta):
    alg = sym_generic
    eta = f_eta.gen("eta")
    expected = (alg["ab"] + alg["bc"] + alg["ac"]).scale(eta + 1) \
        - (alg["a"] + alg["b"] + alg["c"]).scale(eta) - alg["a(bc)"] - alg["b(ac)"]
    assert alg["c"] * alg["ab"] == expected
    zero = catalog.build_three_generic(0, QQ)
    assert zero["a"] * zero["ab"] == zero.combination({"a": H, "ab": H})


def test_three_generic_restricts_to_two_generated(sym_generic, f_eta):
    eta = f_eta.gen("eta")
    sub = sym_generic.restrict(["a", "b", "ab"])
    assert sub == catalog.build_two_generated(eta, 1, f_eta)
    for e, p in ((0, 5), (3, 7), (7, 11)):
        f = prime_field(p)
        sub = catalog.build_three_generic(e, f).restrict(["a", "b", "ab"])
        assert sub == catalog.build_two_generated(e, 1, f)


@pytest.mark.parametrize("eta,field", [(-1, QQ), (Fraction(1, 2), QQ), (4, prime_field(5)), (1, prime_field(11))])
def test_three_generic_rejects(eta, field):
    with pytest.raises(InadmissibleEta):
        catalog.build_three_generic(eta, field)


def test_gram_entries(sym_minus_one_gram, sym_minus_one, f4):
    al, be, ga, ps = FormValues.symbolic(f4).astuple()
    g, alg = sym_minus_one_gram, sym_minus_one
    assert g(alg["a"], alg["bc"]) == ps
    assert g(alg["ab"], alg["ab"]) == (2 * al**2 - al + 1) / 2
    assert g(alg["b"], alg["a(bc)"]) == al * be + (ga - ps) / 2
    assert g.gram.is_symmetric()


def test_expected_determinant_values():
    for vals, want in (((0, 0, 0, 0), Fraction(3, 512)), ((1, 1, 1, 1), Fraction(0))):
        fv = FormValues(*(QQ(v) for v in vals))
        assert catalog.expected_gram_determinant(fv, QQ) == want
        assert determinant(catalog.gram_three_minus_one(fv, QQ).gram) == want


def test_expected_determinant_symbolic(sym_gram_det, f4):
    assert sym_gram_det == catalog.expected_gram_determinant(FormValues.symbolic(f4), f4)


def test_expected_determinant_generic():
    fv = FormValues.generic(QQ)
    assert determinant(catalog.gram_three_minus_one(fv, QQ).gram) == catalog.expected_gram_determinant(fv)


def test_eigenbasis_minus_one():
    alg = catalog.build_three_minus_one(FormValues(0, 0, 0, 0), QQ)
    v = alg["b"] - alg["ab"].scale(2)
    assert alg["a"] * v == -v
    eta_vecs, half_vecs = catalog.eigenbasis_vectors(alg, FormValues(0, 0, 0, 0))
    assert eta_vecs[0] == v.coeffs
    assert len(half_vecs) == 4


def test_eigenbasis_symbolic_generic(sym_generic, f_eta):
    eta = f_eta.gen("eta")
    alg = sym_generic
    v = alg["a"].scale(eta - 1) - alg["bc"].scale(eta) + alg["a(bc)"]
    assert alg["a"] * v == v / 2
    assert catalog.eigenbasis_determinant(alg) == 16 * (eta - f_eta.one / 2) ** 3


def test_eigenbasis_determinant_minus_one(sym_minus_one):
    assert catalog.eigenbasis_determinant(sym_minus_one) == 16 * Fraction(-3, 2) ** 3


def test_eigenbasis_detects_bad_algebra():
    good = catalog.build_three_generic(0, QQ)
    structure = [[list(v) for v in row] for row in good.structure]
    i, j = good.index("a"), good.index("ab")
    structure[i][j][good.index("b")] += 1
    structure[j][i][good.index("b")] += 1
    bad = Algebra(QQ, good.basis, structure, good.eta)
    with pytest.raises(catalog.NotEigenvector):
        catalog.eigenbasis_vectors(bad)


def test_build_dispatch():
    assert catalog.build("two-dim-half") == catalog.build_two_dim_degenerate("half")
    assert catalog.build("three-generic", QQ, eta=0) == catalog.build_three_generic(0, QQ)
    with pytest.raises(ValueError):
        catalog.build("nope")
    assert len(catalog.THREE_GEN_BASIS) == 8
