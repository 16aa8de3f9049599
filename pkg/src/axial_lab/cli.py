"""``axial-lab``: build catalog algebras, verify them, print reports.

Exit codes: 0 success, 1 a check failed, 2 bad flags, 3 inadmissible eta,
4 the algebra file could not be loaded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import catalog
from .algebra import Algebra, LoadError, is_idempotent, subalgebra_closure
from .axial import (AxialError, FormValues, InadmissibleEta, check_fusion, frobenius_form,
                    is_primitive, miyamoto, peirce_decompose, weight_violations)
from .identities import applicable_checks, default_seed
from .linalg import determinant
from .scalars import QQ, Field, FunctionField, ParseError, function_field, prime_field, scalar_parse

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_ETA, EXIT_LOAD = 0, 1, 2, 3, 4

SUITES = ("peirce", "fusion", "frobenius", "identities")
REPORTS = ("peirce", "gram", "closure", "miyamoto")

# variables of the symbolic field for each family
SYMBOLIC_VARS = {
    "two-gen": ("eta", "alpha"),
    "two-dim-half": ("eta",),
    "two-dim-negsum": ("eta",),
    "three-minus-one": ("alpha", "beta", "gamma", "psi"),
    "three-generic": ("eta",),
}
GENERIC_VALUES = {"alpha": 2, "beta": 3, "gamma": 5, "psi": 7}
# sampled cubes per identity; symbolic algebras already pass the linearised form exactly
SYMBOLIC_SAMPLES = 10


class UsageError(Exception):
    pass


def _emit(payload, as_json: bool, text: str) -> None:
    if as_json:
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text.rstrip("\n") + "\n")


def parse_field(text: str, family: str) -> Field:
    text = text.strip().lower()
    if text == "q":
        return QQ
    if text == "symbolic":
        return function_field(SYMBOLIC_VARS[family])
    if text.startswith("gf:"):
        try:
            return prime_field(int(text[3:]))
        except ValueError as exc:
            raise UsageError(f"bad prime field {text!r}: {exc}") from exc
    raise UsageError(f"unknown field {text!r}; expected q, gf:p or symbolic")


def _param(args, name: str, field: Field, default=None):
    text = getattr(args, name)
    if text is None:
        if isinstance(field, FunctionField) and name in field.variables:
            return field.gen(name)
        return None if default is None else field(default)
    try:
        return scalar_parse(text, field)
    except (ParseError, ZeroDivisionError) as exc:
        raise UsageError(f"--{name}: {exc}") from exc


def build_algebra(args) -> Algebra:
    family = args.family
    field = parse_field(args.field, family)
    if family == "two-gen":
        eta = _param(args, "eta", field, -1)
        alpha = _param(args, "alpha", field)
        if alpha is None:
            # eta != -1 forces (a, b) = 1
            alpha = field(2) if eta == -field.one else field.one
        return catalog.build_two_generated(eta, alpha, field)
    if family in ("two-dim-half", "two-dim-negsum"):
        if args.eta is not None and _param(args, "eta", field) != -field.one:
            raise UsageError(f"{family} exists only for eta = -1")
        return catalog.build_two_dim_degenerate(family.rsplit("-", 1)[1], field)
    if family == "three-minus-one":
        eta = _param(args, "eta", field, -1)
        if eta != -field.one:
            raise UsageError("three-minus-one needs eta = -1")
        values = FormValues(*(_param(args, n, field, GENERIC_VALUES[n])
                              for n in ("alpha", "beta", "gamma", "psi")))
        return catalog.build_three_minus_one(values, field)
    if family == "three-generic":
        eta = _param(args, "eta", field)
        if eta is None:
            raise UsageError("three-generic needs --eta unless --field symbolic")
        return catalog.build_three_generic(eta, field)
    raise UsageError(f"unknown family {family!r}")


def cmd_build(args) -> int:
    alg = build_algebra(args)
    text = alg.dumps()
    if args.output and args.output != "-":
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _load(path: str) -> Algebra:
    return Algebra.load(path)


def _eta(alg: Algebra, args):
    if getattr(args, "eta", None) is not None:
        try:
            return scalar_parse(args.eta, alg.field)
        except (ParseError, ZeroDivisionError) as exc:
            raise UsageError(f"--eta: {exc}") from exc
    if alg.eta is None:
        raise UsageError("the algebra records no eta; pass --eta")
    return alg.eta


def _generators(alg: Algebra) -> list:
    gens = [e for e in alg.gens() if is_idempotent(e)]
    if not gens:
        raise UsageError("no basis element is idempotent; nothing to use as an axis")
    return gens


def _axes(alg: Algebra, args) -> list:
    if args.axis:
        try:
            return [alg[a.strip()] for a in args.axis.split(",")]
        except KeyError as exc:
            raise UsageError(f"--axis: unknown basis label {exc}") from exc
    return _generators(alg)


def _label(x) -> str:
    nz = [i for i, c in enumerate(x.coeffs) if c != 0]
    return x.algebra.basis[nz[0]] if len(nz) == 1 else repr(x)


def run_suites(alg: Algebra, suite: str, axes: list, eta, seed: int) -> list[dict]:
    """Reports as JSON-ready dicts, ordered by suite then name."""
    wanted = SUITES if suite == "all" else (suite,)
    out: list[dict] = []
    decomps = {}

    def decomp(x):
        key = x.coeffs
        if key not in decomps:
            decomps[key] = peirce_decompose(x, eta)
        return decomps[key]

    if "peirce" in wanted:
        for x in axes:
            name = f"peirce[{_label(x)}]"
            try:
                d = decomp(x)
                ok = is_primitive(d)
                out.append({"name": name, "pass": ok, "dims": list(d.dims),
                            "violations": [] if ok else ["axis is not primitive"]})
            except AxialError as exc:
                out.append({"name": name, "pass": False, "violations": [str(exc)]})
    if "fusion" in wanted:
        for x in axes:
            name = f"fusion[{_label(x)}]"
            try:
                rep = check_fusion(decomp(x))
                out.append({"name": name, "pass": rep.passed, "violations": rep.violations})
            except AxialError as exc:
                out.append({"name": name, "pass": False, "violations": [str(exc)]})
    form = None
    if "frobenius" in wanted or "identities" in wanted:
        try:
            form = frobenius_form(_generators(alg), eta)
            err = None
        except AxialError as exc:
            err = str(exc)
        if "frobenius" in wanted:
            out.append({"name": "frobenius", "pass": err is None,
                        "violations": [] if err is None else [err]})
            if form is not None and eta != -alg.field.one:
                bad = weight_violations(form, _generators(alg))
                out.append({"name": "weight homomorphism", "pass": not bad, "violations": bad})
    if "identities" in wanted:
        if form is None:
            out.append({"name": "identities", "pass": False,
                        "violations": ["no Frobenius form; identities not checked"]})
        else:
            samples = SYMBOLIC_SAMPLES if isinstance(alg.field, FunctionField) else 100
            for x in axes:
                try:
                    reports = applicable_checks(alg, x, form, eta, seed=seed, samples=samples,
                                                decomp=decomp(x))
                except AxialError as exc:
                    out.append({"name": f"identities[{_label(x)}]", "pass": False,
                                "violations": [str(exc)]})
                    continue
                for r in reports:
                    d = r.to_json()
                    d["name"] = f"{r.name}[{_label(x)}]"
                    out.append(d)
    return out


def _text_report(results: list[dict]) -> str:
    lines = []
    for r in results:
        status = "PASS" if r["pass"] else "FAIL"
        extra = f" dims={'/'.join(map(str, r['dims']))}" if "dims" in r else ""
        lines.append(f"{status} {r['name']}{extra}")
        for v in r["violations"][:5]:
            lines.append(f"    {json.dumps(v, sort_keys=True)}")
        if len(r["violations"]) > 5:
            lines.append(f"    ... {len(r['violations']) - 5} more")
    return "\n".join(lines)


def cmd_verify(args) -> int:
    alg = _load(args.file)
    eta = _eta(alg, args)
    seed = default_seed() if args.seed is None else args.seed
    results = run_suites(alg, args.suite, _axes(alg, args), eta, seed)
    ok = all(r["pass"] for r in results)
    _emit({"pass": ok, "seed": seed, "reports": results}, args.json, _text_report(results))
    return EXIT_OK if ok else EXIT_FAIL


def _matrix_text(m, basis=None) -> str:
    fmt = m.field.format
    rows = [[fmt(x) for x in r] for r in m.rows]
    width = max((len(s) for r in rows for s in r), default=1)
    head = "" if basis is None else " ".join(b.rjust(width) for b in basis) + "\n"
    return head + "\n".join(" ".join(s.rjust(width) for s in r) for r in rows)


def _single_axis(alg: Algebra, args):
    axes = _axes(alg, args) if args.axis else [alg.gens()[0]]
    if len(axes) != 1:
        raise UsageError("--axis takes a single label here")
    return axes[0]


def cmd_report(args) -> int:
    alg = _load(args.file)
    fmt = alg.field.format
    what = args.what
    if what == "peirce":
        eta = _eta(alg, args)
        d = peirce_decompose(_single_axis(alg, args), eta)
        lines = [f"axis {_label(d.axis)}: dims {'/'.join(map(str, d.dims))}"]
        for key, vs in d.spaces().items():
            lines.append(f"  eigenvalue {key} ({fmt(d.eta) if key == 'eta' else key}):")
            lines += [f"    {alg.element(v)!r}" for v in vs]
        _emit(d.to_json(), args.json, "\n".join(lines))
        return EXIT_OK
    if what == "gram":
        eta = _eta(alg, args)
        form = frobenius_form(_generators(alg), eta)
        payload = form.to_json()
        text = _matrix_text(form.gram, alg.basis)
        ok = True
        if args.check_determinant:
            if eta != -alg.field.one or tuple(alg.basis) != catalog.THREE_GEN_BASIS:
                raise UsageError("--check-determinant applies to the eta = -1 three-generated algebra")
            values = FormValues(form(alg["a"], alg["b"]), form(alg["b"], alg["c"]),
                                form(alg["c"], alg["a"]), form(alg["a"], alg["bc"]))
            det = determinant(form.gram)
            ok = det == catalog.expected_gram_determinant(values, alg.field)
            payload.update({"determinant": fmt(det), "matches_formula": ok})
            text += f"\ndeterminant: {fmt(det)}\nmatches formula: {str(ok).lower()}"
        _emit(payload, args.json, text)
        return EXIT_OK if ok else EXIT_FAIL
    if what == "closure":
        if args.generators:
            try:
                gens = [alg[g.strip()] for g in args.generators.split(",")]
            except KeyError as exc:
                raise UsageError(f"--generators: unknown basis label {exc}") from exc
        else:
            gens = _generators(alg)
        res = subalgebra_closure(gens)
        payload = {"dim": res.dim, "iterations": res.iterations,
                   "basis": [x.to_json() for x in res.basis]}
        text = "\n".join([f"dim {res.dim}"] + [f"  {x!r}" for x in res.basis])
        _emit(payload, args.json, text)
        return EXIT_OK
    if what == "miyamoto":
        eta = _eta(alg, args)
        x = _single_axis(alg, args)
        m = miyamoto(peirce_decompose(x, eta))
        payload = {"axis": x.to_json(), "convention": "columns are images of basis elements",
                   "matrix": m.to_json()}
        _emit(payload, args.json, f"tau[{_label(x)}] (column j = image of basis element j)\n"
                                  + _matrix_text(m))
        return EXIT_OK
    raise UsageError(f"unknown report {what!r}")


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="axial-lab", description="Build, verify and report on PC(eta)-axial algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="write a catalog algebra as JSON")
    b.add_argument("--family", required=True, choices=catalog.FAMILIES)
    for name in ("eta", "alpha", "beta", "gamma", "psi"):
        b.add_argument(f"--{name}", metavar="SCALAR")
    b.add_argument("--field", default="q", help="q, gf:p or symbolic (default q)")
    b.add_argument("-o", "--output", metavar="PATH", help="output file (default stdout)")
    b.set_defaults(func=cmd_build)

    v = sub.add_parser("verify", help="run verification suites on an algebra file")
    v.add_argument("file")
    v.add_argument("--suite", default="all", choices=("all",) + SUITES)
    v.add_argument("--axis", help="comma-separated axis labels (default: idempotent basis elements)")
    v.add_argument("--eta", metavar="SCALAR", help="override the eta recorded in the file")
    v.add_argument("--seed", type=int, help="seed for sampled checks (default $AXIAL_LAB_SEED or fixed)")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("report", help="print a derived object")
    r.add_argument("file")
    r.add_argument("what", choices=REPORTS)
    r.add_argument("--axis")
    r.add_argument("--generators", help="comma-separated labels for closure")
    r.add_argument("--eta", metavar="SCALAR")
    r.add_argument("--check-determinant", action="store_true",
                   help="compare det(Gram) with its closed form")
    r.add_argument("--json", action="store_true")
    r.set_defaults(func=cmd_report)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"axial-lab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InadmissibleEta as exc:
        print(f"axial-lab: inadmissible eta: {exc}", file=sys.stderr)
        return EXIT_ETA
    except LoadError as exc:
        print(f"axial-lab: cannot load algebra: {exc}", file=sys.stderr)
        return EXIT_LOAD
    except AxialError as exc:
        print(f"axial-lab: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
