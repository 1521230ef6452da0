"""Command-line driver.

Four commands: `verify` runs one check on one instance, `suite` runs the
registry-wide rows, `construct` emits built objects in the structure-file
format, and `list` enumerates what is available.  Exit codes are a stable
contract: 0 pass, 1 fail (or a failed construction precondition, with the
inner report printed), 2 usage or input error.

Instances are named either by a registry expression (see `entwiner list`)
or by `FILE.json:objectname`.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .entwine import (
    COSEMI_KINDS,
    SEMI_KINDS,
    EntwiningData,
    check_algebra_factorization,
    check_coalgebra_factorization,
    check_coproduct_iff,
    check_cosemi_entwining,
    check_product_iff,
    check_semi_entwining,
    dualize_cosemi,
    factorization_product,
    intertwining_from_semi,
    make_biproduct,
    verify,
)
from .fields import FieldError, field_from_tag
from .linalg import LinearMap, ShapeError
from .registry import (
    ALGEBRA_NAMES,
    BIALGEBRA_NAMES,
    COALGEBRA_NAMES,
    INSTANCE_NAMES,
    algebra,
    bialgebra,
    make_comm_twist,
    make_mult_twist,
    resolve_instance,
)
from .report import PreconditionError, Report
from .serial import FormatError, document, emit, ensure_space, load
from .structures import (
    Algebra,
    Bialgebra,
    Coalgebra,
    ComoduleCoaction,
    ModuleAction,
    check_algebra,
    check_bialgebra,
    check_coalgebra,
    check_comodule,
    check_module,
)
from .suite import ROW_NAMES, run_suite
from .tambara import (
    GeneratorAction,
    action_from_semi,
    check_action_roundtrip,
    check_cotambara_relations,
    check_tambara_relations,
    semi_from_action,
)
from .yangbaxter import (
    TypeIISystem,
    WXZSystem,
    check_braided_algebra,
    check_qybe,
    check_r_commutative,
    check_type2,
    check_wxz_system,
    check_yb_operator,
    make_algebra_rmatrix,
    make_type2_family,
)

GRAMMAR = (
    "twist@B,A           tensor-swap entwining of registry algebras B, A",
    "cotwist@D,C         tensor-swap entwining of registry coalgebras D, C",
    "mult_twist@A,q=Q    a(x)b -> 1(x)ab + q(ab(x)1) - q(b(x)a)",
    "comm_twist@A,q=Q    a(x)b -> b(x)a + q(ab-ba)(x)1",
    "module@A            b(x)a -> 1(x)ba from the regular action",
    "quad@p=P,q=Q        two-generator factorization of K[x]/(x^2-p)",
    "dk-H-M              crossed entwining of bialgebra H with module M",
    "dkalt-H-M           its coalgebra-side variant",
    "corrupt:EXPR        EXPR with one matrix entry bumped",
    "dual:EXPR           transpose of a factorization EXPR",
)


# ---------------------------------------------------------------------------
# target resolution


def _resolve_target(arg: str, field, explicit_tag):
    head, sep, tail = arg.rpartition(":")
    if sep and head.endswith(".json"):
        sf = load(head)
        if explicit_tag and sf.field.tag != explicit_tag:
            raise FormatError(
                f"file declares field '{sf.field.tag}' but --field says '{explicit_tag}'"
            )
        return sf[tail]
    return resolve_instance(arg, field)


def _want_entwining(obj, kinds=None, what="this check") -> EntwiningData:
    if not isinstance(obj, EntwiningData):
        raise ShapeError(f"{what} needs entwining data, got {type(obj).__name__}")
    if kinds is not None and obj.kind not in kinds:
        raise ShapeError(f"{what} needs kind in {sorted(kinds)}, got '{obj.kind}'")
    return obj


def _want_left_algebra(obj, what) -> EntwiningData:
    e = _want_entwining(obj, what=what)
    if e.left_algebra is None:
        raise ShapeError(f"{what} needs an instance whose left structure is an algebra")
    return e


def _want_left_coalgebra(obj, what) -> EntwiningData:
    e = _want_entwining(obj, what=what)
    if e.left_coalgebra is None:
        raise ShapeError(f"{what} needs an instance whose left structure is a coalgebra")
    return e


def _psi_of(obj) -> LinearMap:
    if isinstance(obj, LinearMap):
        return obj
    if isinstance(obj, EntwiningData):
        return obj.psi
    raise ShapeError(f"this check needs a map, got {type(obj).__name__}")


def _check_declared(obj) -> Report:
    if isinstance(obj, EntwiningData):
        return verify(obj)
    if isinstance(obj, Bialgebra):
        return check_bialgebra(obj)
    if isinstance(obj, Algebra):
        return check_algebra(obj)
    if isinstance(obj, Coalgebra):
        return check_coalgebra(obj)
    if isinstance(obj, ModuleAction):
        return check_module(obj)
    if isinstance(obj, ComoduleCoaction):
        return check_comodule(obj)
    if isinstance(obj, GeneratorAction):
        return check_tambara_relations(obj)
    if isinstance(obj, WXZSystem):
        return check_wxz_system(obj)
    if isinstance(obj, TypeIISystem):
        return check_type2(obj)
    if isinstance(obj, LinearMap):
        return check_yb_operator(obj)
    raise ShapeError(f"no declared check for {type(obj).__name__}")


def _check_braid_only(obj) -> Report:
    rep = check_yb_operator(_psi_of(obj))
    return Report("braid", (rep.check("braid"),))


def _check_generator_relations(obj) -> Report:
    if isinstance(obj, GeneratorAction):
        return check_tambara_relations(obj)
    e = _want_entwining(obj, SEMI_KINDS, "generator-relations")
    return check_tambara_relations(action_from_semi(e))


def _check_braided(obj) -> Report:
    e = _want_entwining(obj, SEMI_KINDS, "braided-algebra")
    if e.left_space != e.algebra.space:
        raise ShapeError("braided-algebra needs an entwining of the algebra with itself")
    return check_braided_algebra(e.algebra, e.psi)


def _check_r_comm(obj) -> Report:
    e = _want_entwining(obj, SEMI_KINDS, "r-commutative")
    if e.left_space != e.algebra.space:
        raise ShapeError("r-commutative needs an entwining of the algebra with itself")
    return check_r_commutative(e.algebra, e.psi)


CHECKS = {
    "declared": _check_declared,
    "semi-entwining": lambda o: check_semi_entwining(
        *(lambda e: (e.algebra, e.left_space, e.psi))(
            _want_entwining(o, SEMI_KINDS, "semi-entwining")
        )
    ),
    "algebra-factorization": lambda o: (
        lambda e: check_algebra_factorization(e.algebra, e.left_algebra, e.psi)
    )(_want_left_algebra(o, "algebra-factorization")),
    "cosemi-entwining": lambda o: (
        lambda e: check_cosemi_entwining(e.coalgebra, e.left_space, e.psi)
    )(_want_entwining(o, COSEMI_KINDS, "cosemi-entwining")),
    "coalgebra-factorization": lambda o: (
        lambda e: check_coalgebra_factorization(e.coalgebra, e.left_coalgebra, e.psi)
    )(_want_left_coalgebra(o, "coalgebra-factorization")),
    "product-iff": lambda o: (
        lambda e: check_product_iff(e.algebra, e.left_algebra, e.psi)
    )(_want_left_algebra(o, "product-iff")),
    "coproduct-iff": lambda o: (
        lambda e: check_coproduct_iff(e.coalgebra, e.left_coalgebra, e.psi)
    )(_want_left_coalgebra(o, "coproduct-iff")),
    "intertwining": lambda o: (
        lambda e: intertwining_from_semi(e.algebra, e.left_space, e.psi)
    )(_want_entwining(o, SEMI_KINDS, "intertwining")),
    "generator-relations": _check_generator_relations,
    "cogenerator-relations": lambda o: check_cotambara_relations(
        _want_entwining(o, COSEMI_KINDS, "cogenerator-relations")
    ),
    "action-roundtrip": lambda o: check_action_roundtrip(
        _want_entwining(o, SEMI_KINDS, "action-roundtrip")
    ),
    "yb-operator": lambda o: check_yb_operator(_psi_of(o)),
    "qybe": lambda o: check_qybe(_psi_of(o)),
    "braid": _check_braid_only,
    "braided-algebra": _check_braided,
    "r-commutative": _check_r_comm,
}


def cmd_verify(args) -> int:
    field = field_from_tag(args.field or "q")
    obj = _resolve_target(args.instance, field, args.field)
    handler = CHECKS.get(args.check)
    if handler is None:
        raise ShapeError(
            f"unknown check '{args.check}' (known: {', '.join(sorted(CHECKS))})"
        )
    rep = handler(obj)
    sys.stdout.write(rep.to_json() if args.json else rep.render())
    return 0 if rep.passed else 1


# ---------------------------------------------------------------------------
# suite


def _grid_rows(value: str):
    if os.path.exists(value):
        try:
            with open(value, encoding="utf-8") as fh:
                doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"grid file is not valid JSON: {exc}") from None
        rows = doc.get("rows") if isinstance(doc, dict) else None
        if not isinstance(rows, list) or not all(isinstance(r, str) for r in rows):
            raise FormatError("grid file must be an object with a 'rows' list of names")
        return rows
    return [r.strip() for r in value.split(",") if r.strip()]


def cmd_suite(args) -> int:
    tag = args.field or "q"
    field_from_tag(tag)
    rows = _grid_rows(args.grid) if args.grid else None
    results = run_suite(tag, rows, jobs=args.jobs)
    if args.json:
        doc = {"field": tag, "rows": [rep.to_dict() for _, rep in results]}
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        total = failed = 0
        for name, rep in results:
            bad = rep.failures()
            total += len(rep.checks)
            failed += len(bad)
            status = "PASS" if rep.passed else "FAIL"
            sys.stdout.write(
                f"row {name}: {status} ({len(rep.checks) - len(bad)}/{len(rep.checks)})\n"
            )
            for c in bad:
                w = "(" + ", ".join(c.witness) + ")" if c.witness else "-"
                sys.stdout.write(f"  [FAIL] {c.name}  witness={w}\n")
        sys.stdout.write(f"total: {total - failed}/{total} checks passed\n")
    return 0 if all(rep.passed for _, rep in results) else 1


# ---------------------------------------------------------------------------
# construct


def _params(argv, n, usage):
    if len(argv) != n:
        raise ShapeError(f"usage: {usage}")
    return argv


def _construct_mult_twist(field, argv, explicit_tag):
    name, qs = _params(argv, 2, "construct mult_twist ALGEBRA q")
    a = algebra(name, field)
    e = make_mult_twist(a, field.parse(qs))
    sf = document(field)
    sf.add("A-space", a.space)
    sf.add("A", a)
    sf.add("psi", e)
    return sf


def _construct_comm_twist(field, argv, explicit_tag):
    name, qs = _params(argv, 2, "construct comm_twist ALGEBRA q")
    a = algebra(name, field)
    e = make_comm_twist(a, field.parse(qs))
    sf = document(field)
    sf.add("A-space", a.space)
    sf.add("A", a)
    sf.add("psi", e)
    return sf


def _construct_rmatrix(field, argv, explicit_tag):
    name, rs, ss = _params(argv, 3, "construct rmatrix ALGEBRA r s")
    a = algebra(name, field)
    w = make_algebra_rmatrix(a, field.parse(rs), field.parse(ss))
    sf = document(field)
    sf.add("A-space", a.space)
    sf.add("W", w)
    return sf


def _construct_type2(field, argv, explicit_tag):
    name, l1, l2 = _params(argv, 3, "construct type2 ALGEBRA lam lam2")
    a = algebra(name, field)
    ts = make_type2_family(a, field.parse(l1), field.parse(l2))
    sf = document(field)
    sf.add("A-space", a.space)
    for nm, m in (("a", ts.a), ("b", ts.b), ("c", ts.c), ("d", ts.d)):
        sf.add(nm, m)
    sf.add("system", ts)
    return sf


def _construct_biproduct(field, argv, explicit_tag):
    if len(argv) not in (2, 3):
        raise ShapeError("usage: construct biproduct BIALGEBRA INSTANCE [INTEGRAL]")
    h = bialgebra(argv[0], field)
    e = _want_entwining(
        _resolve_target(argv[1], field, explicit_tag), SEMI_KINDS, "biproduct"
    )
    integral = None
    if len(argv) == 3:
        integral = tuple(field.parse(s) for s in argv[2].split(":"))
    result = make_biproduct(h, e.left_space, e.psi, integral=integral)
    if not result.report.passed:
        raise PreconditionError("the biproduct preconditions fail", result.report)
    sf = document(field)
    ensure_space(sf, h.space)
    sf.add("H", h)
    cg = h.coalgebra
    sf.add("H-coalgebra", cg)
    sf.add("E-space", result.algebra.space)
    sf.add("E", result.algebra)
    e_sp = result.algebra.space
    sf.add("coaction", ComoduleCoaction(cg, e_sp, result.coaction))
    if result.integral_coaction is not None:
        sf.add(
            "integral-coaction", ComoduleCoaction(cg, e_sp, result.integral_coaction)
        )
    return sf


def _construct_product(field, argv, explicit_tag):
    (expr,) = _params(argv, 1, "construct product INSTANCE")
    e = _want_left_algebra(_resolve_target(expr, field, explicit_tag), "product")
    prod = factorization_product(e.algebra, e.left_algebra, e.psi)
    sf = document(field)
    ensure_space(sf, prod.space)
    sf.add("E", prod)
    return sf


def _construct_dualize(field, argv, explicit_tag):
    (expr,) = _params(argv, 1, "construct dualize INSTANCE")
    e = _want_entwining(
        _resolve_target(expr, field, explicit_tag), COSEMI_KINDS, "dualize"
    )
    out = dualize_cosemi(e.coalgebra, e.left_space, e.psi)
    sf = document(field)
    ensure_space(sf, out.algebra.space)
    ensure_space(sf, out.left_space)
    sf.add("A", out.algebra)
    sf.add("psi", out)
    return sf


def _construct_action(field, argv, explicit_tag):
    (expr,) = _params(argv, 1, "construct action INSTANCE")
    e = _want_entwining(_resolve_target(expr, field, explicit_tag), SEMI_KINDS, "action")
    g = action_from_semi(e)
    sf = document(field)
    ensure_space(sf, g.algebra.space)
    ensure_space(sf, g.carrier)
    sf.add("A", g.algebra)
    sf.add("action", g)
    return sf


def _construct_entwining(field, argv, explicit_tag):
    (expr,) = _params(argv, 1, "construct entwining ACTION")
    obj = _resolve_target(expr, field, explicit_tag)
    if not isinstance(obj, GeneratorAction):
        raise ShapeError("construct entwining needs a generator action")
    e = semi_from_action(obj)
    sf = document(field)
    ensure_space(sf, e.algebra.space)
    ensure_space(sf, e.left_space)
    sf.add("A", e.algebra)
    sf.add("psi", e)
    return sf


CONSTRUCTIONS = {
    "mult_twist": _construct_mult_twist,
    "comm_twist": _construct_comm_twist,
    "rmatrix": _construct_rmatrix,
    "type2": _construct_type2,
    "biproduct": _construct_biproduct,
    "product": _construct_product,
    "dualize": _construct_dualize,
    "action": _construct_action,
    "entwining": _construct_entwining,
}


def cmd_construct(args) -> int:
    field = field_from_tag(args.field or "q")
    handler = CONSTRUCTIONS.get(args.what)
    if handler is None:
        raise ShapeError(
            f"unknown construction '{args.what}' (known: {', '.join(sorted(CONSTRUCTIONS))})"
        )
    sf = handler(field, args.params, args.field)
    sys.stdout.write(emit(sf))
    return 0


# ---------------------------------------------------------------------------
# list


def cmd_list(args) -> int:
    sections = (
        ("algebras", list(ALGEBRA_NAMES)),
        ("bialgebras", list(BIALGEBRA_NAMES)),
        ("coalgebras", list(COALGEBRA_NAMES)),
        ("instances", list(INSTANCE_NAMES)),
        ("instance-grammar", list(GRAMMAR)),
        ("checks", sorted(CHECKS)),
        ("constructions", sorted(CONSTRUCTIONS)),
        ("suite-rows", list(ROW_NAMES)),
    )
    if args.json:
        sys.stdout.write(json.dumps(dict(sections), indent=2) + "\n")
    else:
        for title, names in sections:
            sys.stdout.write(f"{title}:\n")
            for n in names:
                sys.stdout.write(f"  {n}\n")
    return 0


# ---------------------------------------------------------------------------
# driver


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="entwiner",
        description="exact verification of entwining structures over Q or F_p",
    )
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run one check on one instance")
    v.add_argument("instance", help="registry expression or FILE.json:name")
    v.add_argument("--check", default="declared", help="check name (see `list`)")
    v.add_argument("--field", default=None, help="q or fp:<p> (default q)")
    v.add_argument("--json", action="store_true", help="machine-readable report")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("suite", help="run the registry-wide verification rows")
    s.add_argument("--grid", default=None, help="grid file or comma-separated row names")
    s.add_argument("--jobs", type=int, default=1, help="parallel worker processes")
    s.add_argument("--field", default=None, help="q or fp:<p> (default q)")
    s.add_argument("--json", action="store_true", help="machine-readable report")
    s.set_defaults(func=cmd_suite)

    c = sub.add_parser("construct", help="emit a built object as a structure file")
    c.add_argument("what", help="construction name (see `list`)")
    c.add_argument("params", nargs="*", help="construction arguments")
    c.add_argument("--field", default=None, help="q or fp:<p> (default q)")
    c.set_defaults(func=cmd_construct)

    l = sub.add_parser("list", help="enumerate registry names, checks, constructions")
    l.add_argument("--json", action="store_true")
    l.set_defaults(func=cmd_list)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PreconditionError as exc:
        sys.stdout.write(f"construction precondition failed: {exc}\n")
        if exc.report is not None:
            if getattr(args, "json", False):
                sys.stdout.write(exc.report.to_json())
            else:
                sys.stdout.write(exc.report.render())
        return 1
    except (ShapeError, FormatError, FieldError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
