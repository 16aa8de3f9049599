"""The 8-dimensional eta = -1 algebra at the default parameters (2, 3, 5, 7):
axes, Frobenius form, its determinant and the pseudo-composition identity."""

from axial_lab import catalog
from axial_lab.algebra import principal_power, subalgebra_closure
from axial_lab.axial import FormValues, axis_spanning_set, check_fusion, frobenius_form, peirce_decompose
from axial_lab.identities import check_pseudo_composition
from axial_lab.linalg import determinant
from axial_lab.scalars import QQ

values = FormValues.generic(QQ)
alg = catalog.build_three_minus_one(values, QQ)
gens = [alg[g] for g in "abc"]
print("closure of {a, b, c}: dim", subalgebra_closure(gens).dim)

for g in gens:
    d = peirce_decompose(g)
    print(f"axis {g!r}: dims {d.dims}, fusion ok: {check_fusion(d).passed}")

axes = axis_spanning_set(gens)
print(f"{len(axes)} axes span the algebra, e.g. {axes[-1]!r}")

form = frobenius_form(gens)
det = determinant(form.gram)
print("Gram determinant:", det, "closed form:", catalog.expected_gram_determinant(values))

x = alg["a"] + alg["b"].scale(2) - alg["c"]
print("x^3 == (x, x) x:", principal_power(x, 3) == x.scale(form(x, x)))
rep = check_pseudo_composition(alg, form)
print(f"{rep.name}: {'pass' if rep.passed else 'FAIL'} on {rep.universe} (seed {rep.seed})")
