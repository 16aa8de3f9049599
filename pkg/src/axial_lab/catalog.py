"""The explicitly described PC(eta)-axial algebras and their closed-form data.

Three-generated algebras use the basis ``a, b, c, ab, bc, ac, a(bc), b(ac)``.
``A(alpha, beta, gamma, psi)`` is the eta = -1 family with free form values;
``A(eta)`` is the eta != -1 family, where every form value equals 1.
"""

from __future__ import annotations

from .algebra import Algebra
from .axial import FormValues, InadmissibleEta, AxialError, BilinearForm
from .linalg import Matrix, determinant
from .scalars import QQ, Field, field_of, function_field, is_admissible_eta

TWO_GEN_BASIS = ("a", "b", "ab")
TWO_DIM_BASIS = ("a", "b")
THREE_GEN_BASIS = ("a", "b", "c", "ab", "bc", "ac", "a(bc)", "b(ac)")

FAMILIES = ("two-gen", "two-dim-half", "two-dim-negsum", "three-minus-one", "three-generic")


class NotEigenvector(AxialError):
    pass


def _check_eta(eta, field: Field):
    if not is_admissible_eta(eta, field):
        raise InadmissibleEta(f"eta = {field.format(eta)} is not admissible over {field!r}")


def _infer_field(*values) -> Field:
    for v in values:
        if not isinstance(v, int):
            return field_of(v)
    return QQ


def build_two_generated(eta=None, alpha=None, field: Field | None = None) -> Algebra:
    """The algebra spanned by two primitive axes a, b and their product ab.

    With no arguments this is the symbolic algebra over Q(eta, alpha).
    """
    if field is None:
        if eta is None and alpha is None:
            field = function_field(("eta", "alpha"))
        else:
            field = _infer_field(*(v for v in (eta, alpha) if v is not None))
    eta = field.gen("eta") if eta is None else field(eta)
    alpha = field.gen("alpha") if alpha is None else field(alpha)
    _check_eta(eta, field)
    one = field.one
    h, q = one / 2, one / 4
    ab2 = (one - eta) * (one - 2 * eta) * alpha - eta * (one + 2 * eta)
    ab2_ab = 2 * alpha * (one - eta) * (one + 2 * eta) + 6 * eta + 4 * eta**2
    products = {
        ("a", "a"): {"a": 1},
        ("b", "b"): {"b": 1},
        ("a", "b"): {"ab": 1},
        ("a", "ab"): {"a": h * (one - eta) * alpha, "b": -h * eta, "ab": h * (one + 2 * eta)},
        ("b", "ab"): {"b": h * (one - eta) * alpha, "a": -h * eta, "ab": h * (one + 2 * eta)},
        ("ab", "ab"): {"a": q * ab2, "b": q * ab2, "ab": q * ab2_ab},
    }
    return Algebra.from_products(field, TWO_GEN_BASIS, products, eta)


def build_two_dim_degenerate(kind: str, field: Field = QQ) -> Algebra:
    """The two 2-dimensional algebras generated by axes a != b when eta = -1.

    ``half``: ab = (a + b)/2;  ``negsum``: ab = -a - b.
    """
    if field.characteristic in (2, 3):
        raise InadmissibleEta("the two-dimensional cases need characteristic other than 2 and 3")
    one = field.one
    if kind == "half":
        ab = {"a": one / 2, "b": one / 2}
    elif kind == "negsum":
        ab = {"a": -one, "b": -one}
    else:
        raise ValueError(f"unknown kind {kind!r}; expected 'half' or 'negsum'")
    products = {("a", "a"): {"a": 1}, ("b", "b"): {"b": 1}, ("a", "b"): ab}
    return Algebra.from_products(field, TWO_DIM_BASIS, products, -one)


def _basic_products() -> dict:
    return {
        ("a", "a"): {"a": 1}, ("b", "b"): {"b": 1}, ("c", "c"): {"c": 1},
        ("a", "b"): {"ab": 1}, ("a", "c"): {"ac": 1}, ("b", "c"): {"bc": 1},
        ("a", "bc"): {"a(bc)": 1}, ("b", "ac"): {"b(ac)": 1},
    }


def _scaled(s, row: dict) -> dict:
    return {k: s * v for k, v in row.items()}


def build_three_minus_one(values: FormValues | None = None, field: Field | None = None) -> Algebra:
    """``A(alpha, beta, gamma, psi)``: the eta = -1 three-generated algebra.

    Without ``values`` the parameters are the generators of Q(alpha, beta, gamma, psi).
    """
    if values is None:
        field = field or function_field(("alpha", "beta", "gamma", "psi"))
        values = FormValues.symbolic(field)
    field = field or _infer_field(*values.astuple())
    if field.characteristic in (2, 3):
        raise InadmissibleEta("eta = -1 needs characteristic other than 2 and 3")
    al, be, ga, ps = values.convert(field).astuple()
    one = field.one
    h, q, e, s = one / 2, one / 4, one / 8, one / 16
    t = _basic_products()
    t.update({
        ("c", "ab"): {"a": be, "b": ga, "c": al, "a(bc)": -1, "b(ac)": -1},
        ("a", "ab"): {"a": al, "b": h, "ab": -h},
        ("a", "ac"): {"a": ga, "c": h, "ac": -h},
        ("b", "ab"): {"b": al, "a": h, "ab": -h},
        ("b", "bc"): {"b": be, "c": h, "bc": -h},
        ("c", "ac"): {"c": ga, "a": h, "ac": -h},
        ("c", "bc"): {"c": be, "b": h, "bc": -h},
        ("a", "a(bc)"): {"a": ps, "bc": h, "a(bc)": -h},
        ("b", "b(ac)"): {"b": ps, "ac": h, "b(ac)": -h},
        ("b", "a(bc)"): _scaled(q, {"a": be, "b": ga - 2 * ps, "c": -3 * al, "ab": -2 * be,
                                    "bc": 6 * al, "ac": -1, "a(bc)": 2, "b(ac)": 2}),
        ("c", "a(bc)"): _scaled(q, {"a": 3 * be, "b": -ga, "c": 3 * al - 2 * ps, "ab": -1,
                                    "bc": 6 * ga, "ac": -2 * be, "b(ac)": -2}),
        ("a", "b(ac)"): _scaled(q, {"a": be - 2 * ps, "b": ga, "c": -3 * al, "ab": -2 * ga,
                                    "bc": -1, "ac": 6 * al, "a(bc)": 2, "b(ac)": 2}),
        ("c", "b(ac)"): _scaled(q, {"a": -be, "b": 3 * ga, "c": 3 * al - 2 * ps, "ab": -1,
                                    "bc": -2 * ga, "ac": 6 * be, "a(bc)": -2}),
        ("ab", "ab"): _scaled(q, {"a": 6 * al - 1, "b": 6 * al - 1, "ab": -(4 * al + 2)}),
        ("bc", "bc"): _scaled(q, {"b": 6 * be - 1, "c": 6 * be - 1, "bc": -(4 * be + 2)}),
        ("ac", "ac"): _scaled(q, {"a": 6 * ga - 1, "c": 6 * ga - 1, "ac": -(4 * ga + 2)}),
        ("ab", "bc"): _scaled(q, {"a": 3 * be, "b": 6 * ps - ga, "c": 3 * al, "ab": -2 * be,
                                  "bc": -2 * al, "ac": -1, "b(ac)": -2}),
        ("bc", "ac"): _scaled(q, {"a": be, "b": ga, "c": 6 * ps - 3 * al, "ab": -1,
                                  "bc": -2 * ga, "ac": -2 * be, "a(bc)": 2, "b(ac)": 2}),
        ("ab", "ac"): _scaled(q, {"a": 6 * ps - be, "b": 3 * ga, "c": 3 * al, "ab": -2 * ga,
                                  "bc": -1, "ac": -2 * al, "a(bc)": -2}),
        ("ab", "a(bc)"): _scaled(e, {"a": 12 * al * be - 2 * be + 6 * ga - 6 * ps,
                                     "b": 6 * ps - 2 * be, "c": -1, "ab": -4 * (be + ps),
                                     "bc": 6 * al + 1, "ac": -2, "a(bc)": 2 - 4 * al}),
        ("ab", "b(ac)"): _scaled(e, {"a": 6 * ps - 2 * ga,
                                     "b": 12 * al * ga + 6 * be - 2 * ga - 6 * ps, "c": -1,
                                     "ab": -4 * (ga + ps), "bc": -2, "ac": 6 * al + 1,
                                     "b(ac)": 2 - 4 * al}),
        ("bc", "a(bc)"): _scaled(e, {"a": 4 * be**2 - 2 * be + 2, "ab": 1 - 6 * be, "bc": 8 * ps,
                                     "ac": 1 - 6 * be, "a(bc)": 4 * be + 2}),
        ("bc", "b(ac)"): _scaled(e, {"a": -1, "b": 12 * be * ga + 6 * al - 2 * ga - 6 * ps,
                                     "c": 6 * ps - 2 * ga, "ab": -2, "bc": -4 * (ga + ps),
                                     "ac": 6 * be + 1, "b(ac)": 2 - 4 * be}),
        ("ac", "a(bc)"): _scaled(e, {"a": 12 * be * ga + 6 * al - 2 * be - 6 * ps, "b": -1,
                                     "c": 6 * ps - 2 * be, "ab": -2, "bc": 6 * ga + 1,
                                     "ac": -4 * (be + ps), "a(bc)": 2 - 4 * ga}),
        ("ac", "b(ac)"): _scaled(e, {"b": 4 * ga**2 - 2 * ga + 2, "ab": 1 - 6 * ga,
                                     "bc": 1 - 6 * ga, "ac": 8 * ps, "b(ac)": 4 * ga + 2}),
        ("a(bc)", "a(bc)"): _scaled(s, {
            "a": 36 * al * be - 4 * be**2 + 36 * be * ga - 24 * be * ps - 6 * al + 2 * be
                 - 6 * ga - 12 * ps - 2,
            "b": 1 - 6 * be, "c": 1 - 6 * be,
            "ab": 2 * (1 - 6 * be), "ac": 2 * (1 - 6 * be),
            "bc": 4 * be + 24 * ps + 2, "a(bc)": 8 * be - 16 * ps + 4}),
        ("b(ac)", "b(ac)"): _scaled(s, {
            "a": 1 - 6 * ga, "c": 1 - 6 * ga,
            "b": 36 * al * ga + 36 * be * ga - 4 * ga**2 - 24 * ga * ps - 6 * al - 6 * be
                 + 2 * ga - 12 * ps - 2,
            "ab": 2 - 12 * ga, "bc": 2 - 12 * ga,
            "ac": 4 * ga + 24 * ps + 2, "b(ac)": 8 * ga - 16 * ps + 4}),
        ("a(bc)", "b(ac)"): _scaled(s, {
            "a": 12 * be * ps - 6 * al * be - 2 * be**2 - 14 * be * ga + be + 6 * ga + 6 * ps + 1,
            "b": 12 * ga * ps - 6 * al * ga - 14 * be * ga - 2 * ga**2 + 6 * be + ga + 6 * ps + 1,
            "c": 18 * al**2 + 6 * al * be + 6 * al * ga - 36 * al * ps + 3 * al - 6 * ps - 2,
            "ab": 6 * ga - 6 * al + 6 * be - 32 * be * ga + 12 * ps - 1,
            "bc": 24 * al * ga - 6 * al + 2 * be + 6 * ga - 12 * ps - 1,
            "ac": 24 * al * be - 6 * al + 6 * be + 2 * ga - 12 * ps - 1,
            "a(bc)": 8 * ga - 12 * al - 4 * be + 16 * ps - 4,
            "b(ac)": 8 * be - 12 * al - 4 * ga + 16 * ps - 4}),
    })
    return Algebra.from_products(field, THREE_GEN_BASIS, t, -one)


def build_three_generic(eta=None, field: Field | None = None) -> Algebra:
    """``A(eta)``: the three-generated algebra for eta != -1 (all form values 1).

    Without ``eta`` the algebra is built over Q(eta) with eta symbolic.
    """
    if eta is None:
        field = field or function_field(("eta",))
        eta = field.gen("eta")
    field = field or _infer_field(eta)
    n = field(eta)
    _check_eta(n, field)
    if n == -field.one:
        raise InadmissibleEta("eta = -1 belongs to the A(alpha, beta, gamma, psi) family")
    one = field.one
    h, q, e, s = one / 2, one / 4, one / 8, one / 16
    u = 1 + 2 * n  # recurring factor 1 + 2 eta
    t = _basic_products()
    t.update({
        ("c", "ab"): {"ab": n + 1, "bc": n + 1, "ac": n + 1, "a": -n, "b": -n, "c": -n,
                      "a(bc)": -1, "b(ac)": -1},
        ("a", "ab"): _scaled(h, {"a": 1 - n, "b": -n, "ab": u}),
        ("a", "ac"): _scaled(h, {"a": 1 - n, "c": -n, "ac": u}),
        ("b", "ab"): _scaled(h, {"b": 1 - n, "a": -n, "ab": u}),
        ("b", "bc"): _scaled(h, {"b": 1 - n, "c": -n, "bc": u}),
        ("c", "ac"): _scaled(h, {"c": 1 - n, "a": -n, "ac": u}),
        ("c", "bc"): _scaled(h, {"c": 1 - n, "b": -n, "bc": u}),
        ("a", "a(bc)"): _scaled(h, {"a": 1 - n, "bc": -n, "a(bc)": u}),
        ("b", "b(ac)"): _scaled(h, {"b": 1 - n, "ac": -n, "b(ac)": u}),
        ("b", "a(bc)"): _scaled(q, {"a": -n, "b": 1 - 2 * n**2, "c": n - 2 * n**2, "ab": 2 * n,
                                    "bc": 4 * n**2 - 2 * n, "ac": -1, "a(bc)": 2, "b(ac)": 2}),
        # (2eta+1)(ab + 2ac - eta b) expanded
        ("c", "a(bc)"): _scaled(q, {"a": -3 * n, "c": -(2 * n**2 + 2 * n - 1), "ab": u,
                                    "ac": 2 * u, "b": -n * u, "bc": 4 * n**2 + 2, "b(ac)": -2}),
        ("a", "b(ac)"): _scaled(q, {"a": 1 - 2 * n**2, "b": -n, "c": n - 2 * n**2, "ab": 2 * n,
                                    "bc": -1, "ac": 4 * n**2 - 2 * n, "a(bc)": 2, "b(ac)": 2}),
        # (2eta+1)(ab + 2bc - eta a) expanded
        ("c", "b(ac)"): _scaled(q, {"b": -3 * n, "c": -(2 * n**2 + 2 * n - 1), "ab": u,
                                    "bc": 2 * u, "a": -n * u, "ac": 4 * n**2 + 2, "a(bc)": -2}),
        ("ab", "ab"): _scaled(q, {"a": 1 - 4 * n, "b": 1 - 4 * n, "ab": 8 * n + 2}),
        ("bc", "bc"): _scaled(q, {"b": 1 - 4 * n, "c": 1 - 4 * n, "bc": 8 * n + 2}),
        ("ac", "ac"): _scaled(q, {"a": 1 - 4 * n, "c": 1 - 4 * n, "ac": 8 * n + 2}),
        ("ab", "bc"): _scaled(q, {"a": -3 * n, "c": -3 * n, "b": 1 - 4 * n, "ab": 2 * u,
                                  "bc": 2 * u, "ac": u, "b(ac)": -2}),
        ("ab", "ac"): _scaled(q, {"a": 1 - 4 * n, "b": -3 * n, "c": -3 * n, "ab": 2 * u,
                                  "bc": u, "ac": 2 * u, "a(bc)": -2}),
        ("bc", "ac"): _scaled(q, {"a": -n, "b": -n, "c": 1 - 2 * n, "ab": -1, "bc": 2 * n,
                                  "ac": 2 * n, "a(bc)": 2, "b(ac)": 2}),
        ("ab", "a(bc)"): _scaled(e, {"a": 2 - 8 * n, "b": -(2 * n**2 + 5 * n - 1),
                                     "c": -(2 * n**2 + n), "ab": 10 * n + 2,
                                     "bc": 4 * n**2 - 2 * n + 1, "ac": 2 * n, "a(bc)": 4 * n + 2}),
        ("bc", "a(bc)"): _scaled(e, {"a": -4 * n, "b": -(4 * n**2 + 3 * n - 1),
                                     "c": -(4 * n**2 + 3 * n - 1), "ab": 4 * n - 1,
                                     "ac": 4 * n - 1, "bc": 8 * n**2 + 2 * n + 2, "a(bc)": 6}),
        ("ac", "a(bc)"): _scaled(e, {"a": 2 - 8 * n, "b": -(2 * n**2 + n),
                                     "c": -(2 * n**2 + 5 * n - 1), "ab": 2 * n,
                                     "bc": 4 * n**2 - 2 * n + 1, "ac": 10 * n + 2, "a(bc)": 4 * n + 2}),
        ("ab", "b(ac)"): _scaled(e, {"a": 1 - 5 * n - 2 * n**2, "b": 2 - 8 * n,
                                     "c": -(2 * n**2 + n), "ab": 10 * n + 2, "bc": 2 * n,
                                     "ac": 4 * n**2 - 2 * n + 1, "b(ac)": 4 * n + 2}),
        ("bc", "b(ac)"): _scaled(e, {"a": -(2 * n**2 + n), "b": 2 - 8 * n,
                                     "c": 1 - 5 * n - 2 * n**2, "ab": 2 * n, "bc": 10 * n + 2,
                                     "ac": 4 * n**2 - 2 * n + 1, "b(ac)": 4 * n + 2}),
        ("ac", "b(ac)"): _scaled(e, {"a": 1 - 3 * n - 4 * n**2, "c": 1 - 3 * n - 4 * n**2,
                                     "b": -4 * n, "ab": 4 * n - 1, "bc": 4 * n - 1,
                                     "ac": 8 * n**2 + 2 * n + 2, "b(ac)": 6}),
        # (8eta-2)(ab + ac + (2eta-1)bc) expanded
        ("a(bc)", "a(bc)"): _scaled(s, {"a": 4 - 16 * n, "b": 1 - 2 * n - 8 * n**2,
                                        "c": 1 - 2 * n - 8 * n**2, "ab": 8 * n - 2, "ac": 8 * n - 2,
                                        "bc": (8 * n - 2) * (2 * n - 1), "a(bc)": 16 * n + 12}),
        ("b(ac)", "b(ac)"): _scaled(s, {"a": 1 - 2 * n - 8 * n**2, "c": 1 - 2 * n - 8 * n**2,
                                        "b": 4 - 16 * n, "ab": 8 * n - 2, "bc": 8 * n - 2,
                                        "ac": (8 * n - 2) * (2 * n - 1), "b(ac)": 16 * n + 12}),
        ("a(bc)", "b(ac)"): _scaled(s, {"a": 2 - 8 * n - 6 * n**2, "b": 2 - 8 * n - 6 * n**2,
                                        "c": 1 - 12 * n**2, "ab": 12 * n - 3,
                                        "bc": 12 * n**2 - 2 * n - 1, "ac": 12 * n**2 - 2 * n - 1,
                                        "a(bc)": 4 * n + 8, "b(ac)": 4 * n + 8}),
    })
    return Algebra.from_products(field, THREE_GEN_BASIS, t, n)


def gram_three_minus_one(values: FormValues | None = None, field: Field | None = None,
                         algebra: Algebra | None = None) -> BilinearForm:
    """Gram matrix of the Frobenius form on the basis of ``A(alpha, beta, gamma, psi)``."""
    if values is None:
        field = field or (algebra.field if algebra is not None
                          else function_field(("alpha", "beta", "gamma", "psi")))
        values = FormValues.symbolic(field)
    field = field or (algebra.field if algebra is not None else _infer_field(*values.astuple()))
    al, be, ga, ps = values.convert(field).astuple()
    one = field.one
    h, q, e = one / 2, one / 4, one / 8
    upper = {
        ("a", "a"): one, ("a", "b"): al, ("a", "c"): ga, ("a", "ab"): al, ("a", "bc"): ps,
        ("a", "ac"): ga, ("a", "a(bc)"): ps, ("a", "b(ac)"): al * ga + (be - ps) * h,
        ("b", "b"): one, ("b", "c"): be, ("b", "ab"): al, ("b", "bc"): be, ("b", "ac"): ps,
        ("b", "a(bc)"): al * be + (ga - ps) * h, ("b", "b(ac)"): ps,
        ("c", "c"): one, ("c", "ab"): ps, ("c", "bc"): be, ("c", "ac"): ga,
        ("c", "a(bc)"): be * ga + (al - ps) * h, ("c", "b(ac)"): be * ga + (al - ps) * h,
        ("ab", "ab"): (2 * al**2 - al + 1) * h,
        ("ab", "bc"): (2 * al * be + ga - ps) * h,
        ("ab", "ac"): (2 * al * ga + be - ps) * h,
        ("ab", "a(bc)"): (4 * al * ps + 2 * be + ps - 2 * al * be - ga) * q,
        ("ab", "b(ac)"): (4 * al * ps + 2 * ga + ps - 2 * al * ga - be) * q,
        ("bc", "bc"): (2 * be**2 - be + 1) * h,
        ("bc", "ac"): (2 * be * ga + al - ps) * h,
        ("bc", "a(bc)"): ((6 * be - 1) * (al + ga) - (4 * be + 2) * ps) * q,
        ("bc", "b(ac)"): (4 * be * ps + 2 * ga + ps - 2 * be * ga - al) * q,
        ("ac", "ac"): (2 * ga**2 - ga + 1) * h,
        ("ac", "a(bc)"): (4 * ga * ps + 2 * be + ps - 2 * be * ga - al) * q,
        ("ac", "b(ac)"): ((6 * ga - 1) * (al + be) - (4 * ga + 2) * ps) * q,
        ("a(bc)", "a(bc)"): (4 * be**2 - 6 * be * ga - 6 * al * be + 4 * be * ps + 8 * ps**2
                             + al - 2 * be + ga + 2 * ps + 2) * e,
        ("a(bc)", "b(ac)"): (8 * al * be * ga + 6 * al**2 - 6 * al * ps - 2 * be**2 + 6 * be * ga
                             + 2 * be * ps - 2 * ga**2 + 2 * ga * ps - 4 * ps**2 - 2 * al + be
                             + ga - ps - 1) * e,
        ("b(ac)", "b(ac)"): (4 * ga**2 - 6 * al * ga - 6 * be * ga + 4 * ga * ps + 8 * ps**2
                             + al + be - 2 * ga + 2 * ps + 2) * e,
    }
    idx = {lbl: i for i, lbl in enumerate(THREE_GEN_BASIS)}
    rows = [[field.zero] * 8 for _ in range(8)]
    for (x, y), v in upper.items():
        rows[idx[x]][idx[y]] = rows[idx[y]][idx[x]] = v
    if algebra is None:
        algebra = build_three_minus_one(values, field)
    return BilinearForm(algebra, Matrix(rows, field))


def expected_gram_determinant(values: FormValues, field: Field | None = None):
    """Closed form of the Gram determinant of ``A(alpha, beta, gamma, psi)``."""
    field = field or _infer_field(*values.astuple())
    al, be, ga, ps = values.convert(field).astuple()
    linear = al + be + ga - 2 * ps - 1
    cubic = (12 * al * be * ga - 2 * al**2 - 2 * be**2 - 2 * ga**2 - 2 * ps**2
             + 2 * al * be + 2 * be * ga + 2 * al * ga - 4 * al * ps - 4 * be * ps - 4 * ga * ps
             + al + be + ga - 2 * ps + 1)
    return field(3) / 512 * linear**4 * cubic**3


def eigenbasis_vectors(algebra: Algebra, values: FormValues | None = None, eta=None,
                        verify: bool = True) -> tuple[list[tuple], list[tuple]]:
    """Closed-form bases of the eta- and 1/2-eigenspaces of ``ad_a``.

    With ``verify`` each vector is checked to be an eigenvector; failures
    raise :class:`NotEigenvector`.
    """
    field = algebra.field
    if eta is None:
        eta = algebra.eta
    n = field(eta)
    if values is None:
        values = FormValues.ones(field) if n != -field.one else FormValues.symbolic(field)
    al, be, ga, ps = values.convert(field).astuple()
    comb = algebra.combination
    eta_vectors = [
        comb({"a": al, "b": 1, "ab": -2}),
        comb({"a": ga, "c": 1, "ac": -2}),
        comb({"a": ps, "bc": 1, "a(bc)": -2}),
    ]
    half_vectors = [
        comb({"a": al * (n - 1), "b": -n, "ab": 1}),
        comb({"a": ga * (n - 1), "c": -n, "ac": 1}),
        comb({"a": ps * (n - 1), "bc": -n, "a(bc)": 1}),
        comb({"a": (2 * n**2 - 1) * (2 * ps - be), "b": -n * ga, "c": (n - 2 * n**2) * al,
              "bc": -1, "b(ac)": 2}),
    ]
    if verify:
        a = algebra["a"]
        for lam, vecs in ((n, eta_vectors), (field.one / 2, half_vectors)):
            for v in vecs:
                if a * v != v.scale(lam):
                    raise NotEigenvector(f"{v!r} is not a {field.format(lam)}-eigenvector of ad_a")
    return [v.coeffs for v in eta_vectors], [v.coeffs for v in half_vectors]


def eigenbasis_matrix(algebra: Algebra, values: FormValues | None = None, eta=None) -> Matrix:
    """Rows: ``a``, the three eta-eigenvectors, the four 1/2-eigenvectors."""
    eta_vecs, half_vecs = eigenbasis_vectors(algebra, values, eta)
    return Matrix([algebra["a"].coeffs, *eta_vecs, *half_vecs], algebra.field)


def eigenbasis_determinant(algebra: Algebra, values: FormValues | None = None, eta=None):
    return determinant(eigenbasis_matrix(algebra, values, eta))


def miyamoto_two_generated(field: Field, eta, alpha, axis: str = "a") -> Matrix:
    """Closed-form Miyamoto matrices on (a, b, ab); rows are images (right action)."""
    one = field.one
    eta, alpha = field(eta), field(alpha)
    u, k = 1 + 2 * eta, 4 * alpha * (1 - eta)
    if axis == "a":
        rows = [[1 - 2 * eta, 0, 0], [k, u, -4], [k / 2, 2 * eta, -u]]
    elif axis == "b":
        rows = [[u, k, -4], [0, 1 - 2 * eta, 0], [2 * eta, k / 2, -u]]
    else:
        raise ValueError("axis must be 'a' or 'b'")
    return Matrix(rows, field).scale(one / (1 - 2 * eta))


def build(family: str, field: Field = QQ, eta=None, values: FormValues | None = None,
          alpha=None) -> Algebra:
    """Dispatch on a family name (see ``FAMILIES``)."""
    if family == "two-gen":
        return build_two_generated(eta, alpha, field)
    if family == "two-dim-half":
        return build_two_dim_degenerate("half", field)
    if family == "two-dim-negsum":
        return build_two_dim_degenerate("negsum", field)
    if family == "three-minus-one":
        return build_three_minus_one(values, field)
    if family == "three-generic":
        return build_three_generic(eta, field)
    raise ValueError(f"unknown family {family!r}")
