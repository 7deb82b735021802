"""Command line entry point.

    ncham --model torus:p=2 bracket "u^2 v^2" "u^2 v^4"
    ncham --model cuntz:n=2 is-hamiltonian "s1 s2*"
    ncham --model matrix:n=2 check --seed 7
    ncham --presentation my.pres confluence

Exit codes: 0 success, 1 mathematical negative (not Hamiltonian, failed
check, non-confluent presentation), 2 usage or parse error.  The
--format json flag switches to machine-readable reports.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .exprparse import ParseError, load_presentation, parse_derivation, \
    parse_expression
from .models import build_model
from .symplectic import NotHamiltonian, NotHamiltonianError


def _add_common(parser, suppress):
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--model", default=default(None),
                        help="torus:p=2[,B=3] | matrix:n=2 | cuntz:n=2 | "
                             "polymat:D=3")
    parser.add_argument("--presentation", default=default(None),
                        help="presentation file path")
    parser.add_argument("--ansatz", default=default(None),
                        help="override the ansatz bound, e.g. B=4 (torus) "
                             "or D=2 (polymat)")
    parser.add_argument("--order", type=int, default=default(2),
                        help="flow truncation order (default 2)")
    parser.add_argument("--seed", type=int, default=default(2026),
                        help="PRNG seed for check")
    parser.add_argument("--count", type=int, default=default(25),
                        help="random trials per property in check")
    parser.add_argument("--format", choices=("text", "json"),
                        default=default("text"))


def make_parser():
    ap = argparse.ArgumentParser(
        prog="ncham",
        description="Hamiltonian dynamics on noncommutative algebras")
    _add_common(ap, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _add_common(common, suppress=True)
    sub = ap.add_subparsers(dest="command", required=True, parser_class=(
        lambda **kw: argparse.ArgumentParser(parents=[common], **kw)))

    sub.add_parser("normalize").add_argument("expr")
    sub.add_parser("d").add_argument("expr")
    for name in ("iprod", "lie"):
        sp = sub.add_parser(name)
        sp.add_argument("theta", help="derivation spec, e.g. 'u -> u^3 v^2, "
                                      "v -> 0' or 'h: s1 s2*' or 'S: E12 - E21'")
        sp.add_argument("expr")
    sp = sub.add_parser("bracket")
    sp.add_argument("a")
    sp.add_argument("b")
    sub.add_parser("hamvec").add_argument("a")
    sub.add_parser("is-hamiltonian").add_argument("a")
    sp = sub.add_parser("flow")
    sp.add_argument("b", help="Hamiltonian generating the flow")
    sp.add_argument("a", help="element transported by the flow")
    sub.add_parser("check")
    sub.add_parser("confluence")
    return ap


def _emit(args, payload, text):
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


class UsageError(Exception):
    pass


def _require_symplectic(model):
    if getattr(model, "omega", None) is None:
        raise UsageError("this command needs a symplectic model "
                         "(built-in, or a presentation file with omega "
                         "and derivation lines)")


def run(args) -> int:
    if bool(args.model) == bool(args.presentation):
        raise UsageError("exactly one of --model/--presentation is required")
    if args.presentation and args.ansatz:
        raise UsageError("--ansatz applies to built-in models only")
    desc = args.model
    if desc and args.ansatz:
        key, _, val = args.ansatz.partition("=")
        if not val or key not in ("B", "D"):
            raise UsageError("--ansatz expects B=<int> or D=<int>")
        desc = "%s,%s=%s" % (desc, key, val)
    model = build_model(desc) if desc else load_presentation(args.presentation)
    cmd = args.command

    if cmd == "normalize":
        el = parse_expression(args.expr, model)
        _emit(args, {"status": "ok", "result": str(el)}, str(el))
        return 0
    if cmd == "d":
        el = parse_expression(args.expr, model)
        out = model.backend.d(el)
        _emit(args, {"status": "ok", "result": str(out)}, str(out))
        return 0
    if cmd in ("iprod", "lie"):
        theta = parse_derivation(args.theta, model)
        el = parse_expression(args.expr, model)
        out = theta.iprod(el) if cmd == "iprod" else theta.lie(el)
        _emit(args, {"status": "ok", "result": str(out)}, str(out))
        return 0
    if cmd == "bracket":
        _require_symplectic(model)
        a = parse_expression(args.a, model)
        b = parse_expression(args.b, model)
        try:
            out = model.solver.poisson(a, b)
        except NotHamiltonianError as exc:
            _emit(args, {"status": "NOT_HAMILTONIAN",
                         "detail": str(exc)}, "NOT_HAMILTONIAN: %s" % exc)
            return 1
        _emit(args, {"status": "ok", "result": str(out)}, str(out))
        return 0
    if cmd in ("hamvec", "is-hamiltonian"):
        _require_symplectic(model)
        a = parse_expression(args.a, model)
        sol = model.solver.solve(a)
        ker = model.solver.kernel_report()
        if isinstance(sol, NotHamiltonian):
            residual = {str(k): str(v) for k, v in sol.residual.items()}
            payload = {"status": "NOT_HAMILTONIAN", "residual": residual,
                       "kernel_dimension": ker.dimension,
                       "ansatz_size": len(model.space.basis)}
            _emit(args, payload,
                  "NOT_HAMILTONIAN (relative to ansatz of %d derivations)"
                  % len(model.space.basis))
            return 1
        desc = model.backend.describe_derivation(sol.vector_field)
        payload = {"status": "HAMILTONIAN", "field": desc, "residual": "0",
                   "kernel_dimension": ker.dimension}
        if cmd == "hamvec":
            text = "\n".join("X(%s) = %s" % kv for kv in sorted(desc.items()))
        else:
            text = "HAMILTONIAN (relative to ansatz of %d derivations)" \
                % len(model.space.basis)
        _emit(args, payload, text)
        return 0
    if cmd == "flow":
        _require_symplectic(model)
        b = parse_expression(args.b, model)
        a = parse_expression(args.a, model)
        try:
            series = model.solver.flow(b, a, args.order)
        except NotHamiltonianError as exc:
            _emit(args, {"status": "NOT_HAMILTONIAN", "detail": str(exc)},
                  "NOT_HAMILTONIAN: %s" % exc)
            return 1
        payload = {"status": "ok",
                   "coefficients": [str(c) for c in series.coefficients]}
        _emit(args, payload, str(series))
        return 0
    if cmd == "confluence":
        target = getattr(model, "_confluence_target", None)
        if target is None:
            _emit(args, {"status": "ok",
                         "detail": "tensor backends have no presentation"},
                  "no presentation to check (tensor backend)")
            return 0
        from .algebra import check_local_confluence

        rep = check_local_confluence(target)
        payload = {"status": "ok" if rep.all_joinable else "NOT_CONFLUENT",
                   "critical_pairs": len(rep.pairs),
                   "failures": [p.describe(target.system)
                                for p in rep.failures()]}
        _emit(args, payload, rep.summary(target.system))
        return 0 if rep.all_joinable else 1
    if cmd == "check":
        return _run_check(args, model)
    raise UsageError("unknown command %r" % cmd)


def _run_check(args, model) -> int:
    rng = random.Random(args.seed)
    lines = []
    ok_all = True

    def report(name, ok):
        nonlocal ok_all
        ok_all = ok_all and ok
        lines.append(("PASS" if ok else "FAIL", name))

    for name, ok, detail in model.certify():
        report("%s %s" % (name, detail) if detail else name, ok)

    if getattr(model, "space", None) is not None or \
            getattr(model, "derivations", None):
        from .cartan import iprod_or_zero as ip

        d = model.backend.d
        is_zero = model.backend.is_zero
        props = {"magic formula": 0, "d L = L d": 0, "L/iprod commutation": 0,
                 "iprod antisymmetry": 0, "Lie commutator": 0}
        try:
            for _ in range(args.count):
                th = model.random_derivation(rng)
                ph = model.random_derivation(rng)
                x = model.random_form(rng, 2)
                if not is_zero(d(ip(th, x)) + ip(th, d(x)) - th.lie(x)):
                    props["magic formula"] += 1
                if not is_zero(d(th.lie(x)) - th.lie(d(x))):
                    props["d L = L d"] += 1
                if not is_zero(ph.lie(ip(th, x)) - ip(th, ph.lie(x))
                               - ip(ph.commutator(th), x)):
                    props["L/iprod commutation"] += 1
                x2 = _force_degree2(model, rng)
                if x2 is not None and not is_zero(
                        ph.iprod(th.iprod(x2)) + th.iprod(ph.iprod(x2))):
                    props["iprod antisymmetry"] += 1
                if not is_zero(th.lie(ph.lie(x)) - ph.lie(th.lie(x))
                               - th.commutator(ph).lie(x)):
                    props["Lie commutator"] += 1
            for name, failures in props.items():
                report("%s (%d trials, seed %d)" % (name, args.count, args.seed),
                       failures == 0)
        except ValueError as exc:
            report("property suite (%s)" % exc, False)

    payload = {"status": "ok" if ok_all else "FAILED",
               "checks": [{"result": r, "name": n} for r, n in lines],
               "seed": args.seed}
    text = "\n".join("%s %s" % ln for ln in lines)
    _emit(args, payload, text)
    return 0 if ok_all else 1


def _force_degree2(model, rng):
    """A degree-2 form if the backend admits one in bounded tries."""
    for _ in range(20):
        x = model.random_form(rng, 2)
        deg = getattr(x, "degree", None)
        try:
            d = deg() if callable(deg) else x.degree
        except ValueError:
            continue
        if d == 2:
            return x
    return None


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return run(args)
    except (ParseError, UsageError, ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
