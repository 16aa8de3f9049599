"""Two axes a, b over Q(eta, alpha): Peirce spaces, the Miyamoto involution
and the third axis it produces. Ends with the two 2-dimensional algebras."""

from fractions import Fraction

from axial_lab import catalog
from axial_lab.algebra import is_idempotent, subalgebra_closure
from axial_lab.axial import apply_matrix, check_fusion, is_primitive, miyamoto, peirce_decompose

alg = catalog.build_two_generated()
print(alg)
print("closure of {a, b}: dim", subalgebra_closure([alg["a"], alg["b"]]).dim)

d = peirce_decompose(alg["a"])
print("Peirce dims of a:", d.dims)
for key, vecs in d.spaces().items():
    for v in vecs:
        print(f"  {key:>4}: {alg.element(v)!r}")

tau = miyamoto(d)
print("tau_a (columns are images):")
for row in tau.rows:
    print("  ", [alg.field.format(x) for x in row])
image = apply_matrix(tau, alg["b"])
print("b^tau_a =", image)
print("  idempotent:", is_idempotent(image), " primitive:", is_primitive(peirce_decompose(image)))

# the product rules obey PC(eta) only on the locus (1 - alpha)(1 - 2 eta)(1 + eta) = 0
print("fusion with eta, alpha free:", check_fusion(d).passed)
print("fusion at eta = 1/3, alpha = 1:",
      check_fusion(peirce_decompose(catalog.build_two_generated(Fraction(1, 3), 1)["a"])).passed)

for kind in ("half", "negsum"):
    small = catalog.build_two_dim_degenerate(kind)
    print(f"{kind}: ab = {small['a'] * small['b']!r}, dims of a = {peirce_decompose(small['a']).dims}")
