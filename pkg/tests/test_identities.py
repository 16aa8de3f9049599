import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from axial_lab import catalog
from axial_lab.algebra import Algebra, principal_power
from axial_lab.axial import ETA, HALF, FormValues, frobenius_form, peirce_decompose
from axial_lab.identities import (DEFAULT_SEED, SEED_ENV, PreconditionError, applicable_checks,
                                  check_a_ax, check_axay, check_eigencomponent_pairings,
                                  check_fusion_restriction, check_pseudo_composition, check_train,
                                  check_triple_product, default_seed, random_element,
                                  train_coefficients)
from axial_lab.scalars import QQ, prime_field

H = Fraction(1, 2)


@pytest.fixture(scope="module")
def generic_form(generic_q):
    return catalog.gram_three_minus_one(FormValues.generic(QQ), QQ, algebra=generic_q)


@pytest.fixture(scope="module")
def third():
    """A(1/3) over Q with its form."""
    alg = catalog.build_three_generic(Fraction(1, 3), QQ)
    return alg, frobenius_form([alg[g] for g in "abc"])


# -- a(ax) --------------------------------------------------------------------

def test_a_ax_on_axis(generic_q, generic_form):
    a = generic_q["a"]
    assert a * (a * a) == a and generic_form(a, a) == 1


def test_a_ax_matches_table_row(sym_minus_one, sym_minus_one_gram, f4):
    alg = sym_minus_one
    al = f4.gen("alpha")
    assert alg["a"] * alg["ab"] == alg.combination({"a": al, "b": H, "ab": -H})
    assert check_a_ax(alg, alg["a"], sym_minus_one_gram).passed


def test_a_ax_generic_symbolic(sym_generic, sym_generic_form, f_eta):
    alg = sym_generic
    eta = f_eta.gen("eta")
    want = (alg["a"].scale(1 - eta) - alg["bc"].scale(eta) + alg["a(bc)"].scale(1 + 2 * eta)) / 2
    assert alg["a"] * alg["a(bc)"] == want
    assert check_a_ax(alg, alg["a"], sym_generic_form).passed


# -- eigencomponent pairings -----------------------------------------------------

def test_pairings_axis_has_no_eta_part(generic_q, generic_form):
    d = peirce_decompose(generic_q["a"])
    comp = d.components(generic_q["a"])
    assert generic_form(comp[ETA], comp[ETA]) == 0
    rep = check_eigencomponent_pairings(generic_q, generic_q["a"], generic_form,
                                        x=generic_q["a"], y=generic_q["a"])
    assert rep.passed and rep.universe == "given pair"


def test_pairings_b_c_minus_one(sym_minus_one, sym_minus_one_gram, f4):
    al, be, ga, ps = FormValues.symbolic(f4).astuple()
    alg, form = sym_minus_one, sym_minus_one_gram
    d = peirce_decompose(alg["a"])
    cb, cc = d.components(alg["b"]), d.components(alg["c"])
    assert form(cb[ETA], cc[ETA]) == (al * ga + be - 2 * ps) / 3
    assert check_eigencomponent_pairings(alg, alg["a"], form, x=alg["b"], y=alg["c"], decomp=d).passed


def test_pairings_all_basis_pairs(generic_q, generic_form, third):
    assert check_eigencomponent_pairings(generic_q, generic_q["a"], generic_form).passed
    alg, form = third
    assert check_eigencomponent_pairings(alg, alg["a"], form).passed


def test_pairings_half_vanish_generic(sym_generic, sym_generic_form):
    alg, form = sym_generic, sym_generic_form
    d = peirce_decompose(alg["a"])
    cb, cc = d.components(alg["b"]), d.components(alg["c"])
    assert form(cb[HALF], cc[HALF]) == 0


# -- triple product --------------------------------------------------------------

def test_triple_product_axis(generic_q):
    a = generic_q["a"]
    assert a * (a * a) + a * (a * a) + a * (a * a) == a.scale(3)


def test_triple_product_symbolic(sym_minus_one, sym_minus_one_gram, sym_generic, sym_generic_form):
    assert check_triple_product(sym_minus_one, sym_minus_one["a"], sym_minus_one_gram).passed
    assert check_triple_product(sym_generic, sym_generic["a"], sym_generic_form).passed


# -- pseudo-composition ------------------------------------------------------------

def test_pseudo_composition_concrete(generic_q, generic_form):
    rep = check_pseudo_composition(generic_q, generic_form)
    assert rep.passed and rep.seed == DEFAULT_SEED


def test_pseudo_composition_sample_point(generic_q, generic_form):
    alg = generic_q
    x = alg["a"] + alg["b"].scale(2) - alg["c"]
    assert principal_power(x, 3) == x.scale(generic_form(x, x))


def test_pseudo_composition_char_three():
    f = prime_field(3)
    alg = catalog.build_three_generic(0, f)
    with pytest.raises(PreconditionError):
        check_pseudo_composition(alg, frobenius_form([alg[g] for g in "abc"]))


# -- train -----------------------------------------------------------------------

def test_train_coefficients():
    c = train_coefficients(2, QQ)
    assert (c.lambda1, c.lambda2, c.rank) == (-3, 2, 3)


def test_train_axis_trivial(third):
    alg, _ = third
    a, eta = alg["a"], alg.eta
    assert principal_power(a, 3) == a.scale(eta + 1) - a.scale(eta)


@pytest.mark.parametrize("eta", [0, 2, -2, Fraction(1, 3)])
def test_train_concrete(eta):
    alg = catalog.build_three_generic(eta, QQ)
    form = frobenius_form([alg[g] for g in "abc"])
    rep = check_train(alg, form)
    assert rep.passed and "random cubes" in rep.universe


def test_train_char_three_linearised_only():
    alg = catalog.build_three_generic(0, prime_field(3))
    form = frobenius_form([alg[g] for g in "abc"])
    rep = check_train(alg, form)
    assert rep.passed and rep.universe.endswith("(linearised only)") and rep.seed is None


def test_train_refuses_minus_one(generic_q, generic_form):
    with pytest.raises(PreconditionError):
        check_train(generic_q, generic_form)


# -- (ax)(ay) ----------------------------------------------------------------------

def test_axay_axis(generic_q):
    a = generic_q["a"]
    assert (a * a) * (a * a) == a


def test_axay_table_rows(sym_minus_one, sym_minus_one_gram, f4, sym_generic, sym_generic_form, f_eta):
    al, be, ga, ps = FormValues.symbolic(f4).astuple()
    s = sym_minus_one
    want = s.combination({"a": 6 * ps - be, "b": 3 * ga, "c": 3 * al, "ab": -2 * ga, "bc": -1,
                          "ac": -2 * al, "a(bc)": -2}) / 4
    assert (s["a"] * s["b"]) * (s["a"] * s["c"]) == want
    assert check_axay(s, s["a"], sym_minus_one_gram).passed
    eta = f_eta.gen("eta")
    g = sym_generic
    want = (g["a"].scale(1 - 4 * eta) - (g["b"] + g["c"]).scale(3 * eta)
            + (g["ab"].scale(2) + g["bc"] + g["ac"].scale(2)).scale(2 * eta + 1) - g["a(bc)"].scale(2)) / 4
    assert (g["a"] * g["b"]) * (g["a"] * g["c"]) == want
    assert check_axay(g, g["a"], sym_generic_form).passed


# -- fusion restriction --------------------------------------------------------------

def test_fusion_restriction_symbolic(sym_generic):
    assert check_fusion_restriction(sym_generic, sym_generic["a"]).passed


def test_fusion_restriction_eta_zero():
    alg = catalog.build_three_generic(0, QQ)
    assert check_fusion_restriction(alg, alg["a"]).passed
    eta_vecs, half_vecs = catalog.eigenbasis_vectors(alg)
    for u in eta_vecs:
        for v in eta_vecs:
            assert all(c == 0 for c in alg.product_vector(u, v))
    # each product of 1/2-vectors is a combination of the eta-vectors: a(uv) = 0 * uv
    for u in half_vecs:
        for v in half_vecs:
            uv = alg.element(alg.product_vector(u, v))
            assert (alg["a"] * uv).is_zero()


def test_fusion_restriction_refuses_minus_one(generic_q):
    with pytest.raises(PreconditionError):
        check_fusion_restriction(generic_q, generic_q["a"])


# -- reports, seeds, chains -------------------------------------------------------------

def test_applicable_checks_minus_one(generic_q, generic_form):
    reps = applicable_checks(generic_q, generic_q["a"], generic_form, samples=10)
    names = [r.name for r in reps]
    assert names == sorted(names) and "pseudo-composition" in names and "train" not in names
    assert all(r.passed for r in reps)


def test_applicable_checks_generic(third):
    alg, form = third
    reps = applicable_checks(alg, alg["b"], form, samples=10)
    names = {r.name for r in reps}
    assert {"train", "fusion restriction"} <= names and all(r.passed for r in reps)


def test_report_json(generic_q, generic_form):
    data = check_a_ax(generic_q, generic_q["a"], generic_form).to_json()
    assert set(data) == {"name", "pass", "universe", "violations", "seed"}
    json.dumps(data)


def test_seed_env(monkeypatch, generic_q, generic_form):
    monkeypatch.delenv(SEED_ENV, raising=False)
    assert default_seed() == DEFAULT_SEED
    monkeypatch.setenv(SEED_ENV, "99")
    assert default_seed() == 99
    assert check_a_ax(generic_q, generic_q["a"], generic_form).seed == 99
    monkeypatch.setenv(SEED_ENV, "nope")
    with pytest.raises(ValueError):
        default_seed()


def test_sampling_is_reproducible(generic_q):
    a = [random_element(generic_q, random.Random(3)) for _ in range(2)]
    assert a[0] == a[1]
    assert all(-9 <= c <= 9 for c in a[0].coeffs)


def _perturbed_generic(eta=Fraction(1, 3)):
    good = catalog.build_three_generic(eta, QQ)
    structure = [[list(v) for v in row] for row in good.structure]
    i, j, k = good.index("a"), good.index("ab"), good.index("c")
    structure[i][j][k] += 1
    structure[j][i][k] += 1
    return good, Algebra(QQ, good.basis, structure, good.eta)


def test_consistency_chain():
    # two-generated rules, the eta != -1 table at alpha = 1, and the a(ax) closed form agree
    for eta in (0, 2, Fraction(1, 3)):
        two = catalog.build_two_generated(eta, 1, QQ)
        three = catalog.build_three_generic(eta, QQ)
        assert three.restrict(["a", "b", "ab"]) == two
        n = QQ(eta)
        want = (two["a"].scale(1 - n) - two["b"].scale(n) + two["ab"].scale(1 + 2 * n)) / 2
        assert two["a"] * two["ab"] == want


def test_perturbation_is_named():
    good, bad = _perturbed_generic()
    form = frobenius_form([good[g] for g in "abc"])
    rep = check_a_ax(bad, bad["a"], form, samples=0)
    assert not rep.passed
    assert ["b"] in [v["inputs"] for v in rep.violations]
    assert not check_axay(bad, bad["a"], form).passed
    assert not check_train(bad, form, samples=5).passed


# -- scaling sanity ------------------------------------------------------------------------

coeffs8 = st.lists(st.integers(-9, 9), min_size=8, max_size=8)


@given(coeffs8)
def test_cubic_sides_scale_by_eight(cs):
    alg = catalog.build_three_minus_one(FormValues.generic(QQ), QQ)
    form = catalog.gram_three_minus_one(FormValues.generic(QQ), QQ, algebra=alg)
    x = alg.element(cs)
    y = x.scale(2)
    assert principal_power(y, 3) == principal_power(x, 3).scale(8)
    assert y.scale(form(y, y)) == x.scale(form(x, x)).scale(8)


@given(coeffs8, st.sampled_from([0, 2, Fraction(1, 3)]))
def test_train_sides_scale_by_eight(cs, eta):
    alg = catalog.build_three_generic(eta, QQ)
    n = QQ(eta)
    # every basis element has weight 1
    w = lambda u: sum(u.coeffs, QQ(0))  # noqa: E731
    x = alg.element(cs)
    y = x.scale(2)
    rhs = lambda u: (u * u).scale((n + 1) * w(u)) - u.scale(n * w(u) ** 2)  # noqa: E731
    assert rhs(y) == rhs(x).scale(8)
    assert principal_power(y, 3) == principal_power(x, 3).scale(8)
    assert principal_power(x, 3) == rhs(x)
