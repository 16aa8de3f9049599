"""The eta != -1 algebra over Q(eta): eigenbasis, weight map and the rank-3
train identity, then a concrete specialisation."""

from fractions import Fraction

from axial_lab import catalog
from axial_lab.algebra import principal_power
from axial_lab.axial import frobenius_form, weight_violations
from axial_lab.identities import check_fusion_restriction, check_train
from axial_lab.scalars import QQ

alg = catalog.build_three_generic()
det = catalog.eigenbasis_determinant(alg)
print("eigenbasis determinant:", alg.field.format(det))

form = frobenius_form([alg[g] for g in "abc"])
print("form values all 1:", all(v == 1 for row in form.gram.rows for v in row))
print("weight map multiplicative:", not weight_violations(form, [alg[g] for g in "abc"]))
for check in (check_train(alg, form, samples=0), check_fusion_restriction(alg, alg["a"])):
    print(f"{check.name}: {'pass' if check.passed else 'FAIL'} ({check.universe})")

third = catalog.build_three_generic(Fraction(1, 3), QQ)
x = third.combination({"a": 2, "bc": -1, "b(ac)": 3})
w = sum(x.coeffs)
eta = QQ(Fraction(1, 3))
lhs = principal_power(x, 3)
rhs = principal_power(x, 2).scale((eta + 1) * w) - x.scale(eta * w * w)
print(f"eta = 1/3, w(x) = {w}: x^3 matches the train equation: {lhs == rhs}")
