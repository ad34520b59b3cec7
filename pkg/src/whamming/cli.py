"""Command-line front end.

Every command prints exactly one JSON document on stdout.  Exit status:
0 when the property holds or the construction succeeded, 1 when it fails
(the document then carries a ``witness`` with a replayable ``instance``),
2 on usage or input errors.  Timing goes to stderr so reruns are
byte-identical.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from whamming import cwc, extension, identities
from whamming.errors import DEFAULT_CAP, InstanceError, PreconditionError, WhammingError
from whamming.extension import UDPCounterexample
from whamming.gf import FieldSpec, field_from_q
from whamming.instance import InstanceDoc, dumps, instance_to_dict, parse_field, parse_instance, restrict
from whamming.linalg import point_of, projective_points, qbinom, vec_mat
from whamming.wspace import format_rational, supp, wt

HOLDS, FAILS, ERROR = "holds", "fails", "error"
EXIT = {HOLDS: 0, FAILS: 1, ERROR: 2}


class UsageError(WhammingError):
    pass


def _rat(x) -> str:
    return format_rational(Fraction(x))


def _vec(v) -> list[int]:
    return list(v)


def _load(args) -> InstanceDoc:
    if not args.instance:
        raise UsageError("--instance FILE is required")
    return parse_instance(args.instance)


def _write_out(args, doc) -> None:
    if args.out:
        Path(args.out).write_text(dumps(doc))


# -- commands -------------------------------------------------------------------

def cmd_qbinom(args):
    for name in ("n", "r", "q"):
        if getattr(args, name) is None:
            raise UsageError(f"--{name} is required")
    if args.n < 0 or args.r < 0 or args.q < 2:
        raise UsageError("need n >= 0, r >= 0, q >= 2")
    return HOLDS, {"n": args.n, "r": args.r, "q": args.q, "value": qbinom(args.n, args.r, args.q)}


def _udp_witness(inst: InstanceDoc, ce: UDPCounterexample) -> dict:
    replay = InstanceDoc(inst.field, inst.space, {}, {"H": ce.I, "K": ce.J}, {},
                         {"description": "UDP counterexample"})
    return {**ce.to_json(), "instance": instance_to_dict(replay)}


def cmd_udp(args):
    inst = _load(args)
    h = inst.label_sets.get("H", inst.space.labels)
    k = inst.label_sets.get("K", inst.space.labels)
    method = {"bruteforce": "enumerate", "mitm": "mitm"}.get(args.method)
    report = extension.udp_check(h, k, inst.space, method)
    body = {"H": list(h), "K": list(k), "holds": report.holds}
    if report.holds:
        return HOLDS, body
    return FAILS, body, _udp_witness(inst, report.counterexample)


def _local_witness(inst: InstanceDoc, method: str, witness) -> dict:
    left, right = inst.matrix("left"), inst.matrix("right")
    if method == "projective":
        point, a, b = witness
        on_point = [x for x in inst.space.labels
                    for c in (left, right)
                    if any(c.column(x)) and point_of(inst.field, c.column(x)) == point]
        doc = {"point": _vec(point), "left_sum": _rat(a), "right_sum": _rat(b)}
        replay = restrict(inst, on_point)
    else:
        gamma, a, b = witness
        image_l = supp(tuple(vec_mat(inst.field, gamma, left.grid)), inst.space)
        image_r = supp(tuple(vec_mat(inst.field, gamma, right.grid)), inst.space)
        doc = {"gamma": _vec(gamma), "left_weight": _rat(a), "right_weight": _rat(b)}
        replay = restrict(inst, image_l | image_r)
    doc["instance"] = instance_to_dict(replay)
    return doc


def cmd_local_equiv(args):
    inst = _load(args)
    left, right = inst.matrix("left"), inst.matrix("right")
    method = args.method or "projective"
    results = {}
    if method in ("projective", "both"):
        results["projective"] = extension.locally_equivalent_projective(left, right)
    if method in ("bruteforce", "both"):
        results["bruteforce"] = extension.locally_equivalent_bruteforce(left, right, cap=args.cap)
    if method not in ("projective", "bruteforce", "both"):
        raise UsageError(f"unknown method {method!r} for local-equiv")
    verdicts = {name: r.holds for name, r in results.items()}
    if len(set(verdicts.values())) > 1:
        raise WhammingError(f"criteria disagree: {verdicts}")
    body = {"method": method, "criteria": verdicts}
    name, r = next(iter(results.items()))
    if r.holds:
        return HOLDS, body
    return FAILS, body, _local_witness(inst, name, r.witness)


def cmd_extend(args):
    inst = _load(args)
    left, right = inst.matrix("left"), inst.matrix("right")
    try:
        phi = extension.extend_to_isometry(left, right)
    except PreconditionError as exc:
        body = {"reason": str(exc)}
        if isinstance(exc.witness, UDPCounterexample):
            witness = {**exc.witness.to_json(), "instance": instance_to_dict(inst)}
        else:
            witness = _local_witness(inst, "projective", exc.witness)
        return FAILS, body, witness
    doc = phi.to_json(inst.space)
    checks = {
        "is_isometry": extension.is_isometry(phi, inst.space, inst.field),
        "right_equals_left_Q": phi.apply_matrix(left).grid == right.grid,
    }
    _write_out(args, doc)
    return HOLDS, {"isometry": doc, "checks": checks}


def cmd_mep(args):
    inst = _load(args)
    method = {"bruteforce": "enumerate", "mitm": "mitm"}.get(args.method)
    verdict = extension.mep_check(inst.space, method)
    body = {"holds": verdict.holds}
    if verdict.holds:
        return HOLDS, body
    ce = verdict.udp.counterexample
    replay = InstanceDoc(inst.field, inst.space, {}, {"H": ce.I, "K": ce.J},
                         {"alpha": verdict.alpha, "beta": verdict.beta},
                         {"description": "weight-preserving map on a line that does not extend"})
    witness = {"alpha": _vec(verdict.alpha), "beta": _vec(verdict.beta),
               "weight": _rat(wt(verdict.alpha, inst.space)), "udp": ce.to_json(),
               "instance": instance_to_dict(replay)}
    return FAILS, body, witness


def cmd_transit(args):
    inst = _load(args)
    alpha, beta = inst.vector("alpha"), inst.vector("beta")
    try:
        phi = extension.transitivity_map(inst.field, alpha, beta, inst.space)
    except PreconditionError as exc:
        witness = {"reason": str(exc), "instance": instance_to_dict(inst)}
        if isinstance(exc.witness, UDPCounterexample):
            witness["udp"] = exc.witness.to_json()
        else:
            witness["weights"] = [_rat(w) for w in exc.witness]
        return FAILS, {"holds": False}, witness
    doc = phi.to_json(inst.space)
    _write_out(args, doc)
    return HOLDS, {"isometry": doc, "image_of_alpha": _vec(phi.apply(inst.field, inst.space, alpha))}


def cmd_cwc_check(args):
    inst = _load(args)
    g = inst.matrix("generator")
    report = cwc.sigma_check(g)
    multiset = cwc.multiset_condition_check(g)
    chi_c = [x for x in g.space.labels if any(g.column(x))]
    body = {
        "sigma_report": report.to_json(),
        "multiset_condition": multiset.holds,
        "udp_on_support": extension.udp_check(chi_c, chi_c, g.space).holds,
    }
    if not multiset.holds:
        i, j, b = multiset.witness
        body["multiset_violation"] = {"I": _vec(i), "J": _vec(j), "weight": _rat(b)}
    if report.is_constant:
        body["codeword_weight"] = _rat(cwc.subspace_weight_formula(g.k, 1, report.sigma, g.field.q))
        return HOLDS, body
    p = report.violating_point
    witness = {"point": _vec(p), "sum": _rat(report.per_point[p]),
               "first_point_sum": _rat(next(iter(report.per_point.values()))),
               "instance": instance_to_dict(inst)}
    return FAILS, body, witness


def _emit_construction(args, g, description):
    inst = InstanceDoc(g.field, g.space, {"generator": g}, {}, {}, {"description": description})
    doc = instance_to_dict(inst)
    _write_out(args, doc)
    report = cwc.sigma_check(g)
    body = {"sigma": _rat(report.sigma), "length": g.n,
            "codeword_weight": _rat(cwc.subspace_weight_formula(g.k, 1, report.sigma, g.field.q))}
    if args.out:
        body["out"] = str(args.out)
    else:
        body["instance"] = doc
    return HOLDS, body


def cmd_cwc_simplex(args):
    for name in ("q", "k"):
        if getattr(args, name) is None:
            raise UsageError(f"--{name} is required")
    r = 1 if args.r is None else args.r
    field = field_from_q(args.q)
    g = cwc.simplex_generator(field, args.k, r)
    return _emit_construction(args, g, f"simplex code q={args.q} k={args.k} repeated {r} times")


def _parse_classes(path) -> tuple[FieldSpec, int, dict]:
    try:
        doc = json.loads(Path(path).read_text())
    except OSError as exc:
        raise InstanceError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InstanceError(f"{path}: syntax error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict) or not {"field", "k", "classes"} <= set(doc):
        raise InstanceError(f"{path}: expected keys field, k, classes")
    field = parse_field(doc["field"])
    k = doc["k"]
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise InstanceError(f"{path}: k must be a positive integer")
    classes = doc["classes"]
    budget = {}
    points = projective_points(k, field)
    if isinstance(classes, list) and all(isinstance(c, dict) for c in classes):
        for i, entry in enumerate(classes):
            if "point" not in entry or "weights" not in entry:
                raise InstanceError(f"{path}: classes[{i}] needs point and weights")
            budget[tuple(entry["point"])] = entry["weights"]
    elif isinstance(classes, list) and len(classes) == len(points):
        budget = {p: ws for p, ws in zip(points, classes)}
    else:
        raise InstanceError(f"{path}: classes must list {{point, weights}} objects "
                            f"or one weight list per projective point ({len(points)})")
    return field, k, budget


def cmd_cwc_build(args):
    if not args.classes:
        raise UsageError("--classes FILE is required")
    field, k, budget = _parse_classes(args.classes)
    try:
        g = cwc.weighted_constant_builder(field, k, budget)
    except ValueError as exc:
        raise InstanceError(str(exc)) from None
    return _emit_construction(args, g, f"constant-weight code from class budget, k={k}")


def cmd_verify_identities(args):
    body = {}
    failure = None
    if args.instance:
        inst = _load(args)
        name = next((n for n in ("generator", "left", "right") if n in inst.matrices), None)
        if name is None:
            raise InstanceError("instance has no matrix")
        result = identities.sweep_instance(inst.matrices[name], cap=args.cap)
        body["instance"] = {n: {"passed": ok, "checked": total} for n, (ok, total) in result.items()}
        if any(ok != total for ok, total in result.values()):
            failure = instance_to_dict(inst)
    trials = args.trials if args.trials is not None else (0 if args.instance else 100)
    if trials:
        counts, first = identities.random_trials(trials, args.seed, cap=args.cap)
        body["random"] = {"trials": trials, "seed": args.seed,
                          "passed": {n: c[0] for n, c in counts.items()},
                          "run": {n: c[1] for n, c in counts.items()}}
        if first is not None and failure is None:
            s, c = first
            failure = instance_to_dict(InstanceDoc(c.field, c.space, {"generator": c}, {}, {},
                                                   {"seed": str(s)}))
    if failure is None:
        return HOLDS, body
    return FAILS, body, {"instance": failure}


COMMANDS = {
    "qbinom": cmd_qbinom,
    "udp": cmd_udp,
    "local-equiv": cmd_local_equiv,
    "extend": cmd_extend,
    "mep": cmd_mep,
    "transit": cmd_transit,
    "verify-identities": cmd_verify_identities,
    ("cwc", "check"): cmd_cwc_check,
    ("cwc", "simplex"): cmd_cwc_simplex,
    ("cwc", "build"): cmd_cwc_build,
}


class _Parser(argparse.ArgumentParser):
    """Report usage errors as exceptions so they become error documents."""

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--instance", help="instance document (JSON)")
    p.add_argument("--out", help="also write the constructed object here")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="enumeration cap")
    p.add_argument("--method", choices=["projective", "bruteforce", "both", "mitm"])


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="whamming", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("udp", "local-equiv", "extend", "mep", "transit", "verify-identities"):
        _common(sub.add_parser(name))
    qb = sub.add_parser("qbinom")
    _common(qb)
    qb.add_argument("--n", type=int)
    qb.add_argument("--r", type=int)
    qb.add_argument("--q", type=int)
    cw = sub.add_parser("cwc").add_subparsers(dest="action", required=True)
    for action in ("check", "simplex", "build"):
        p = cw.add_parser(action)
        _common(p)
        if action == "simplex":
            p.add_argument("--q", type=int)
            p.add_argument("--k", type=int)
            p.add_argument("--r", type=int)
        if action == "build":
            p.add_argument("--classes")
    return parser


def run(argv=None) -> tuple[int, dict]:
    """Parse ``argv`` and execute; returns (exit code, output document)."""
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        return EXIT[ERROR], {"command": None, "status": ERROR, "error": str(exc)}
    key = ("cwc", args.action) if args.command == "cwc" else args.command
    label = " ".join(key) if isinstance(key, tuple) else key
    start = time.perf_counter()
    try:
        outcome = COMMANDS[key](args)
    except (WhammingError, ValueError) as exc:
        doc = {"command": label, "status": ERROR, "error": str(exc)}
        return EXIT[ERROR], doc
    finally:
        print(f"{label}: {1000 * (time.perf_counter() - start):.1f} ms", file=sys.stderr)
    status, body = outcome[0], outcome[1]
    doc = {"command": label, "status": status, **body}
    if len(outcome) > 2:
        doc["witness"] = outcome[2]
    return EXIT[status], doc


def main(argv=None) -> int:
    code, doc = run(argv)
    sys.stdout.write(dumps(doc))
    return code


if __name__ == "__main__":
    sys.exit(main())
