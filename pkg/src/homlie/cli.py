"""Command-line interface.

Every verb reads JSON files (formats documented in the io module),
prints a verdict, and exits with

    0   the checked property holds / the computation succeeded,
    1   the checked property fails (details are printed),
    2   bad usage, malformed input, or a domain error such as a
        non-invertible twist where one is required.

With --json the output is a single object
{"verb", "verdict", "failures", "data"}; otherwise a verdict line is
followed by failure lines (capped) and the data as indented JSON.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cochain import ComplexDescriptor, coboundary, cohomology_dims
from .deformation import (
    extend_order,
    formal_deformation_check,
    infinitesimal_check,
    linear_deformation_check,
    nijenhuis_element_check,
    obstruction,
    trivial_deformation_from_nijenhuis,
)
from .io import (
    SchemaError,
    algebra_to_dict,
    cochain_to_dict,
    deformation_to_dict,
    jsonable,
    load_algebra,
    load_deformation,
    load_json,
    load_operator,
    load_rep,
    load_rmatrix,
    load_vector,
    matrix_to_rows,
    operator_from_dict,
    rep_to_dict,
    rmatrix_from_dict,
    rmatrix_to_dict,
)
from .linalg import parse_scalar
from .ooperator import (
    build_nt,
    graph_check,
    induced_hom_pre_lie,
    is_o_operator,
    is_rota_baxter,
    nijenhuis_operator_check,
    o_operator_maurer_cartan_check,
    operator_complex,
    rho_t,
    subadjacent,
    verify_hom_pre_lie,
)
from .rmatrix import (
    induced_dual_bracket,
    is_r_matrix,
    operator_to_tensor,
    tensor_to_operator,
    weak_homomorphism_check,
)
from .structures import (
    semidirect_product,
    verify_hom_lie,
    verify_representation,
)

_FAILURE_CAP = 20


def _report_fields(report, names) -> dict:
    return {name: getattr(report, name) for name in names}


def _write_json(path: str, data: dict) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(data, handle, indent=2)
        handle.write("\n")


def _cmd_verify_algebra(args):
    g = load_algebra(args.algebra)
    report = verify_hom_lie(g)
    data = _report_fields(report, ("multiplicative", "hom_jacobi", "regular"))
    data["dim"] = g.dim
    return report.ok, data, report.failures


def _cmd_verify_rep(args):
    rep = load_rep(args.rep)
    report = verify_representation(rep)
    data = _report_fields(report, ("twist_intertwine", "module_equation"))
    data["algebra_dim"] = rep.algebra.dim
    data["module_dim"] = rep.dim
    return report.ok, data, report.failures


def _cmd_semidirect(args):
    rep = load_rep(args.rep)
    semi = semidirect_product(rep)
    report = verify_hom_lie(semi)
    payload = algebra_to_dict(semi)
    if args.out:
        _write_json(args.out, payload)
    data = {"algebra": payload, "hom_lie": report.ok}
    return report.ok, data, report.failures


def _cmd_cohomology(args):
    rep = load_rep(args.rep)
    if args.operator:
        t = load_operator(args.operator)
        desc = operator_complex(rep.algebra, rep, t)
    else:
        desc = ComplexDescriptor.for_representation(rep)
    top = args.max_arity
    if top is None:
        top = desc.source_dim
    if top < 0:
        raise SchemaError("--max-arity must be non-negative")
    table = []
    for n in range(top + 1):
        dims = cohomology_dims(desc, n)
        table.append({
            "arity": n,
            "cochains": dims.dim_cochains,
            "cocycles": dims.dim_cocycles,
            "coboundaries": dims.dim_coboundaries,
            "h": dims.dim_h,
        })
    data = {"complex": "operator" if args.operator else "representation",
            "regular": desc.is_regular, "table": table}
    return True, data, ()


def _cmd_check_o_operator(args):
    rep = load_rep(args.rep)
    g = rep.algebra
    t = load_operator(args.operator)
    report = is_o_operator(g, rep, t)
    graph = graph_check(g, rep, t)
    semi = semidirect_product(rep)
    nijenhuis = nijenhuis_operator_check(semi, build_nt(t))
    verdicts = [report.ok, graph.ok, nijenhuis.ok]
    data = {
        "o_operator": _report_fields(report, ("intertwines", "quadratic")),
        "graph": _report_fields(graph, ("bracket_closed", "twist_closed")),
        "nijenhuis_on_semidirect": _report_fields(
            nijenhuis, ("commutes_with_twist", "identity")),
    }
    if g.is_regular and rep.beta.is_invertible():
        mc = o_operator_maurer_cartan_check(g, rep, t)
        data["maurer_cartan"] = _report_fields(
            mc, ("twist_compatible", "derived_square_zero"))
        verdicts.append(mc.ok)
    else:
        data["maurer_cartan"] = None
    data["routes_agree"] = len(set(verdicts)) == 1
    return report.ok, data, report.failures


def _cmd_check_rota_baxter(args):
    g = load_algebra(args.algebra)
    r = load_operator(args.operator)
    weight = parse_scalar(args.weight)
    report = is_rota_baxter(g, r, s=args.degree, weight=weight)
    data = _report_fields(report, ("commutes_with_twist", "identity"))
    data["degree"] = args.degree
    data["weight"] = weight
    return report.ok, data, report.failures


def _cmd_check_nijenhuis_operator(args):
    g = load_algebra(args.algebra)
    n = load_operator(args.operator)
    report = nijenhuis_operator_check(g, n)
    data = _report_fields(report, ("commutes_with_twist", "identity"))
    return report.ok, data, report.failures


def _cmd_induced_pre_lie(args):
    rep = load_rep(args.rep)
    t = load_operator(args.operator)
    pre = induced_hom_pre_lie(rep.algebra, rep, t)
    report = verify_hom_pre_lie(pre)
    data = {
        "pre_lie": jsonable(pre),
        "axioms": _report_fields(report,
                                 ("twist_multiplicative", "left_symmetry")),
        "subadjacent": algebra_to_dict(subadjacent(pre)),
    }
    return report.ok, data, report.failures


def _cmd_rho_t(args):
    rep = load_rep(args.rep)
    t = load_operator(args.operator)
    induced = rho_t(rep.algebra, rep, t)
    report = verify_representation(induced)
    data = {
        "representation": rep_to_dict(induced),
        "axioms": _report_fields(report,
                                 ("twist_intertwine", "module_equation")),
    }
    return report.ok, data, report.failures


def _cmd_check_linear_deformation(args):
    rep = load_rep(args.rep)
    t = load_operator(args.operator)
    k = load_operator(args.generator)
    report = linear_deformation_check(rep.algebra, rep, t, k)
    data = _report_fields(report, ("cocycle", "generator_twist_compatible",
                                   "generator_quadratic"))
    data["generator_is_o_operator"] = report.generator_is_o_operator
    return report.valid, data, report.failures


def _cmd_nijenhuis_element(args):
    rep = load_rep(args.rep)
    g = rep.algebra
    t = load_operator(args.operator)
    x = load_vector(args.element)
    element = nijenhuis_element_check(g, rep, t, x)
    data = {
        "element": _report_fields(
            element, ("fixed_by_twist", "bracket_square", "action_square",
                      "generator_bracket")),
    }
    if not element.fixed_by_twist:
        data["generator"] = None
        data["certificate_holds"] = None
        return False, data, element.failures
    result = trivial_deformation_from_nijenhuis(g, rep, t, x)
    data["generator"] = matrix_to_rows(result.generator)
    data["linear_deformation"] = _report_fields(
        result.linear_report, ("cocycle", "generator_twist_compatible",
                               "generator_quadratic"))
    data["certificate"] = [
        {"condition": c.condition, "degree": c.degree, "holds": c.holds}
        for c in result.certificate
    ]
    data["certificate_holds"] = result.certificate_holds
    failures = list(element.failures) + list(result.linear_report.failures)
    for c in result.certificate:
        failures.extend(c.failures)
    return result.ok, data, tuple(failures)


def _cmd_deform_check(args):
    rep = load_rep(args.rep)
    g = rep.algebra
    d = load_deformation(args.deformation)
    report = formal_deformation_check(g, rep, d)
    data = {
        "order": d.order,
        "twist_compatible": report.twist_compatible,
        "per_order": [{"order": k, "holds": h} for k, h in report.per_order],
        "first_failing_order": report.first_failing_order,
    }
    if is_o_operator(g, rep, d.base).ok:
        inf = infinitesimal_check(g, rep, d)
        data["infinitesimal"] = {
            "index": inf.index,
            "twist_compatible": inf.twist_compatible,
            "is_cocycle": inf.is_cocycle,
            "note": inf.note,
        }
    else:
        data["infinitesimal"] = None
    return report.ok, data, report.failures


def _cmd_deform_extend(args):
    rep = load_rep(args.rep)
    g = rep.algebra
    d = load_deformation(args.deformation)
    target = args.max_order
    if target is None:
        target = d.order + 1
    if target <= d.order:
        raise SchemaError("--max-order must exceed the current order")
    current = d
    obstructed_at = None
    last = None
    while current.order < target:
        last = extend_order(g, rep, current)
        if last.obstructed:
            obstructed_at = current.order + 1
            break
        current = last.extended
    data = {
        "reached_order": current.order,
        "obstructed_at": obstructed_at,
        "deformation": deformation_to_dict(current),
    }
    if last is not None:
        data["last_step"] = {
            "theta": cochain_to_dict(last.theta, source="V"),
            "dim_image": last.dim_image,
            "dim_h2": last.dim_h2,
        }
    if args.out:
        _write_json(args.out, deformation_to_dict(current))
    failures = ()
    if obstructed_at is not None:
        failures = (f"obstructed at order {obstructed_at}: the obstruction "
                    f"is not a coboundary",)
    return obstructed_at is None, data, failures


def _cmd_obstruction(args):
    rep = load_rep(args.rep)
    g = rep.algebra
    d = load_deformation(args.deformation)
    theta = obstruction(g, rep, d)
    desc = operator_complex(g, rep, d.base)
    is_cocycle = coboundary(desc, theta).is_zero()
    data = {
        "order": d.order + 1,
        "theta": cochain_to_dict(theta, source="V"),
        "theta_is_zero": theta.is_zero(),
        "is_cocycle": is_cocycle,
    }
    failures = ()
    if not is_cocycle:
        failures = ("the obstruction is not a cocycle",)
    return is_cocycle, data, failures


def _cmd_rmatrix_check(args):
    g = load_algebra(args.algebra)
    r = load_rmatrix(args.rmatrix, dim=g.dim)
    report = is_r_matrix(g, r)
    data = {
        "wedge_square_zero": report.wedge_square_zero,
        "cybe_zero": report.cybe_zero,
        "o_operator": _report_fields(report.operator_report,
                                     ("intertwines", "quadratic")),
        "routes_agree": report.routes_agree,
        "wedge_square": {
            ",".join(str(i) for i in idx): q
            for idx, q in report.wedge_square
        },
    }
    if report.verdict:
        data["dual_algebra"] = algebra_to_dict(induced_dual_bracket(g, r))
    return report.verdict, data, report.failures


def _cmd_rmatrix_convert(args):
    document = load_json(args.input)
    if isinstance(document, dict) and "wedge" in document:
        r = rmatrix_from_dict(document, dim=args.dim, where=args.input)
        payload = {"matrix": matrix_to_rows(tensor_to_operator(r))}
    elif isinstance(document, dict) and "matrix" in document:
        m = operator_from_dict(document, where=args.input)
        payload = rmatrix_to_dict(operator_to_tensor(m))
    else:
        raise SchemaError(
            f'{args.input}: expected a "wedge" or "matrix" document')
    if args.out:
        _write_json(args.out, payload)
    return True, payload, ()


def _cmd_weak_hom_check(args):
    g = load_algebra(args.algebra)
    phi = load_operator(args.phi)
    psi = load_operator(args.psi)
    r1 = load_rmatrix(args.r1, dim=g.dim)
    r2 = load_rmatrix(args.r2, dim=g.dim)
    report = weak_homomorphism_check(g, phi, psi, r1, r2)
    data = _report_fields(report, (
        "phi_bracket_homomorphism", "phi_twist_commute", "psi_twist_commute",
        "tensor_condition", "bracket_condition"))
    data["operator_hom"] = _report_fields(
        report.operator_hom, ("algebra_morphism", "operator_intertwine",
                              "module_twist", "action_equivariant"))
    data["operator_hom_agrees"] = report.operator_hom_agrees
    return report.ok, data, report.failures


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="homlie",
        description="Exact checks and constructions for hom-Lie algebras, "
                    "O-operators, deformations, and r-matrices.",
    )
    subparsers = parser.add_subparsers(dest="verb", required=True)

    def sub(name, handler, help_text):
        p = subparsers.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true",
                       help="emit one JSON object instead of text")
        p.set_defaults(handler=handler)
        return p

    p = sub("verify-algebra", _cmd_verify_algebra,
            "check the hom-Lie axioms of an algebra file")
    p.add_argument("algebra")

    p = sub("verify-rep", _cmd_verify_rep,
            "check the representation axioms of a rep file")
    p.add_argument("rep")

    p = sub("semidirect", _cmd_semidirect,
            "build the semidirect sum of a representation")
    p.add_argument("rep")
    p.add_argument("--out", help="write the resulting algebra to a file")

    p = sub("cohomology", _cmd_cohomology,
            "cochain, cocycle, coboundary, and H dimensions per arity")
    p.add_argument("rep")
    p.add_argument("--max-arity", type=int, default=None)
    p.add_argument("--operator",
                   help="use the complex attached to this O-operator")

    p = sub("check-o-operator", _cmd_check_o_operator,
            "check an operator against a representation, all routes")
    p.add_argument("rep")
    p.add_argument("operator")

    p = sub("check-rota-baxter", _cmd_check_rota_baxter,
            "check the degree-s weighted Rota-Baxter identity")
    p.add_argument("algebra")
    p.add_argument("operator")
    p.add_argument("--degree", type=int, default=0)
    p.add_argument("--weight", default="0")

    p = sub("check-nijenhuis-operator", _cmd_check_nijenhuis_operator,
            "check the Nijenhuis identity on an algebra")
    p.add_argument("algebra")
    p.add_argument("operator")

    p = sub("induced-pre-lie", _cmd_induced_pre_lie,
            "the product {T(u), v} on the module of an O-operator")
    p.add_argument("rep")
    p.add_argument("operator")

    p = sub("rho-t", _cmd_rho_t,
            "the representation induced by an O-operator")
    p.add_argument("rep")
    p.add_argument("operator")

    p = sub("check-linear-deformation", _cmd_check_linear_deformation,
            "whether T + tK deforms the O-operator T linearly")
    p.add_argument("rep")
    p.add_argument("operator")
    p.add_argument("generator")

    p = sub("nijenhuis-element", _cmd_nijenhuis_element,
            "check an element and certify the trivial deformation it makes")
    p.add_argument("rep")
    p.add_argument("operator")
    p.add_argument("element")

    p = sub("deform-check", _cmd_deform_check,
            "check a truncated deformation order by order")
    p.add_argument("rep")
    p.add_argument("deformation")

    p = sub("deform-extend", _cmd_deform_extend,
            "extend a deformation order by order while unobstructed")
    p.add_argument("rep")
    p.add_argument("deformation")
    p.add_argument("--max-order", type=int, default=None)
    p.add_argument("--out", help="write the extended deformation to a file")

    p = sub("obstruction", _cmd_obstruction,
            "the obstruction cochain of the next order, and its cocycle test")
    p.add_argument("rep")
    p.add_argument("deformation")

    p = sub("rmatrix-check", _cmd_rmatrix_check,
            "check a skew two-tensor along all three r-matrix routes")
    p.add_argument("algebra")
    p.add_argument("rmatrix")

    p = sub("rmatrix-convert", _cmd_rmatrix_convert,
            "convert between wedge coefficients and the operator matrix")
    p.add_argument("input")
    p.add_argument("--dim", type=int, default=None,
                   help="dimension for wedge input without a dim key")
    p.add_argument("--out", help="write the converted form to a file")

    p = sub("weak-hom-check", _cmd_weak_hom_check,
            "check a weak homomorphism between two r-matrices")
    p.add_argument("algebra")
    p.add_argument("phi")
    p.add_argument("psi")
    p.add_argument("r1")
    p.add_argument("r2")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        verdict, data, failures = args.handler(args)
    except (SchemaError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    failure_strings = [str(f) for f in failures]
    if args.json:
        payload = {
            "verb": args.verb,
            "verdict": verdict,
            "failures": failure_strings,
            "data": jsonable(data),
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"{args.verb}: {'OK' if verdict else 'FAIL'}")
        for line in failure_strings[:_FAILURE_CAP]:
            print(f"  {line}")
        if len(failure_strings) > _FAILURE_CAP:
            print(f"  ... {len(failure_strings) - _FAILURE_CAP} more failures")
        if data:
            print(json.dumps(jsonable(data), indent=2))
    return 0 if verdict else 1


if __name__ == "__main__":
    sys.exit(main())
