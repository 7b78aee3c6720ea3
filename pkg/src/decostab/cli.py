"""Command-line front end: every library operation with JSON input/output.

Exit codes: 0 success, 2 validation/schema error, 3 enumeration budget
exceeded, 4 a stability check failed while --assert-pass was given.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from . import cones, jsonio, rep, stability, weights
from .errors import SchemaError, TooManyStatesError, ValidationError

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_BUDGET = 3
EXIT_ASSERT = 4


def _read_document(args, ptr: str = ""):
    if args.file == "-":
        text = sys.stdin.read()
    else:
        with open(args.file, "r", encoding="utf-8") as fh:
            text = fh.read()
    return jsonio.loads(text, ptr)


def _inline(text: str, ptr: str):
    return jsonio.loads(text, ptr)


def _budget(args) -> int | None:
    if getattr(args, "budget", None) is not None:
        return args.budget
    env = os.environ.get("DECOSTAB_BUDGET")
    return int(env) if env else None


def _rank_from_args(args, ptr: str = "") -> tuple[int, rep.RepExpr | None]:
    expr = None
    if getattr(args, "rep", None):
        expr = jsonio.parse_rep(_inline(args.rep, "/rep"), "/rep")
        return expr.rank, expr
    if getattr(args, "r", None):
        return args.r, None
    raise SchemaError(ptr or "/r", "either --rep or --r is required")


def _parse_A(args, r: int, expr) -> list[tuple[int, ...]]:
    A = jsonio.parse_weight_list(_inline(args.A, "/A"), "/A")
    if any(len(chi) != r for chi in A):
        raise SchemaError("/A", f"states must have length {r}")
    if expr is not None:
        allowed = set(rep.enumerate_states(expr).distinct())
        for i, chi in enumerate(A):
            if chi not in allowed:
                raise SchemaError(f"/A/{i}", f"{list(chi)} is not a state of the representation")
    return A


# --- command handlers ----------------------------------------------------------

def _cmd_states(args):
    expr = jsonio.parse_rep(_inline(args.rep, "/rep"), "/rep")
    return jsonio.encode_states(rep.enumerate_states(expr)), EXIT_OK


def _cmd_degree(args):
    expr = jsonio.parse_rep(_inline(args.rep, "/rep"), "/rep")
    return {"degree": rep.homogeneity_degree(expr)}, EXIT_OK


def _cmd_homogenize(args):
    docs = jsonio.parse_list(_inline(args.summands, "/summands"), "/summands")
    summands = [jsonio.parse_rep(x, f"/summands/{i}") for i, x in enumerate(docs)]
    result = rep.homogenize(summands, args.kappa)
    return jsonio.encode_rep(result), EXIT_OK


def _cmd_envelope_check(args):
    expr = jsonio.parse_rep(_inline(args.rep, "/rep"), "/rep")
    ok = rep.state_containment(expr, args.a, args.b, args.c)
    return {"contained": ok}, EXIT_OK


def _cmd_mu(args):
    support = jsonio.parse_weight_list(_inline(args.support, "/support"), "/support")
    gamma = jsonio.parse_weight_vector(_inline(args.gamma, "/gamma"), "/gamma")
    return {"mu": jsonio.encode_fraction(weights.mu(support, gamma))}, EXIT_OK


def _cmd_decompose(args):
    gamma = jsonio.parse_weight_vector(_inline(args.gamma, "/gamma"), "/gamma")
    coeffs = weights.decompose(gamma)
    return {"alpha": [jsonio.encode_fraction(a) for a in coeffs]}, EXIT_OK


def _cmd_cone(args):
    return jsonio.encode_cone(cones.weight_cone(args.r)), EXIT_OK


def _cmd_cell(args):
    r, expr = _rank_from_args(args)
    A = _parse_A(args, r, expr)
    chi = jsonio.parse_weight(_inline(args.chi, "/chi"), "/chi")
    return jsonio.encode_cone(cones.state_cell(A, chi, r)), EXIT_OK


def _cmd_fan(args):
    r, expr = _rank_from_args(args)
    A = _parse_A(args, r, expr)
    return jsonio.encode_fan(cones.state_fan(A, r)), EXIT_OK


def _cmd_critical(args):
    r, expr = _rank_from_args(args)
    A = _parse_A(args, r, expr)
    return {"critical": cones.is_critical(A, r)}, EXIT_OK


def _cmd_k_rho(args):
    expr = jsonio.parse_rep(_inline(args.rep, "/rep"), "/rep")
    K = cones.critical_weight_vectors(expr, budget=_budget(args))
    return {"K": [list(g) for g in K]}, EXIT_OK


def _cmd_m_value(args):
    filt = jsonio.parse_filtration(_read_document(args))
    return {"m": jsonio.encode_fraction(stability.m_value(filt))}, EXIT_OK


def _verdict_exit(verdict, args) -> int:
    if getattr(args, "assert_pass", False) and not verdict.passes:
        return EXIT_ASSERT
    return EXIT_OK


def _cmd_check(args):
    doc = _read_document(args)
    filt = jsonio.parse_filtration(doc)
    supp = jsonio.parse_support(jsonio._field(doc, "support", ""), "/support")
    params = jsonio.parse_params(doc)
    verdict = stability.check(filt, supp, params)
    return jsonio.encode_verdict(verdict), _verdict_exit(verdict, args)


def _cmd_check_subbundle(args):
    supp = jsonio.parse_support(_inline(args.support, "/support"), "/support")
    params = stability.StabilityParams(Fraction(args.delta), strict=args.strict)
    verdict = stability.check_subbundle(args.rank, args.deg, supp, args.r, args.d, params)
    return jsonio.encode_verdict(verdict), _verdict_exit(verdict, args)


def _cmd_combine(args):
    doc = _read_document(args)
    filt = jsonio.parse_filtration(doc)
    supports_doc = jsonio.parse_list(jsonio._field(doc, "supports", ""), "/supports")
    supports = [jsonio.parse_support(s, f"/supports/{i}") for i, s in enumerate(supports_doc)]
    sigma_doc = jsonio.parse_list(jsonio._field(doc, "sigma", ""), "/sigma")
    sigma = [jsonio.parse_fraction(s, f"/sigma/{i}") for i, s in enumerate(sigma_doc)]
    params = jsonio.parse_params(doc)
    verdict = stability.combine_direct_sum(filt, supports, sigma, params)
    return jsonio.encode_verdict(verdict), _verdict_exit(verdict, args)


def _cmd_sectional(args):
    doc = _read_document(args)
    r = jsonio.parse_int(jsonio._field(doc, "r", ""), "/r")
    steps_doc = jsonio.parse_list(jsonio._field(doc, "steps", ""), "/steps")
    # degrees are irrelevant to the sectional value; accept [rank] or [rank, degree]
    steps = []
    for i, step in enumerate(steps_doc):
        pair = jsonio.parse_list(step, f"/steps/{i}")
        rank = jsonio.parse_int(pair[0], f"/steps/{i}/0")
        deg = jsonio.parse_int(pair[1], f"/steps/{i}/1") if len(pair) > 1 else 0
        steps.append((rank, deg))
    alpha_doc = jsonio.parse_list(jsonio._field(doc, "alpha", ""), "/alpha")
    alpha = [jsonio.parse_fraction(a, f"/alpha/{i}") for i, a in enumerate(alpha_doc)]
    filt = stability.FiltrationData(r=r, d=0, steps=steps, alpha=alpha)
    chi = jsonio.parse_int(jsonio._field(doc, "chi", ""), "/chi")
    h0_doc = jsonio.parse_list(jsonio._field(doc, "h0", ""), "/h0")
    h0 = [jsonio.parse_int(h, f"/h0/{i}") for i, h in enumerate(h0_doc)]
    mu_value = jsonio.parse_fraction(jsonio._field(doc, "mu", ""), "/mu")
    delta = jsonio.parse_fraction(jsonio._field(doc, "delta", ""), "/delta")
    verdict = stability.sectional_check(filt, chi, h0, mu_value, delta)
    return jsonio.encode_verdict(verdict), _verdict_exit(verdict, args)


def _cmd_epsilon(args):
    p, eps = stability.gieseker_epsilon(args.d, args.r, args.g, args.n, args.a,
                                        Fraction(args.delta))
    return {"p": p, "epsilon": jsonio.encode_fraction(eps)}, EXIT_OK


def _cmd_c1(args):
    return {"c1": jsonio.encode_fraction(stability.bound_c1(args.r, args.a,
                                                            Fraction(args.delta)))}, EXIT_OK


def _cmd_simplify(args):
    expr = jsonio.parse_rep(_inline(args.rep, "/rep"), "/rep")
    conditions = stability.simplify(expr, budget=_budget(args))
    return jsonio.encode_conditions(conditions), EXIT_OK


def _cmd_threshold(args):
    doc = _read_document(args)
    filt = jsonio.parse_filtration(doc)
    supp = jsonio.parse_support(jsonio._field(doc, "support", ""), "/support")
    threshold = stability.delta_threshold(filt, supp)
    value = None if threshold is None else jsonio.encode_fraction(threshold)
    return {"delta": value}, EXIT_OK


def _cmd_profile_extension(args):
    value = stability.profile_extension(args.i, args.dim_ker, args.dim_cap, args.r)
    return {"mu": jsonio.encode_fraction(value)}, EXIT_OK


def _cmd_profile_framed(args):
    in_kernel = args.in_kernel
    value = stability.profile_framed(args.k, in_kernel, args.r)
    support = stability.framed_support(args.k, in_kernel, args.r)
    return {"mu": jsonio.encode_fraction(value),
            "support": [list(chi) for chi in sorted(support)]}, EXIT_OK


def _cmd_profile_hitchin(args):
    value = stability.profile_hitchin(args.i, args.invariant, args.superinvariant,
                                      args.eps_zero, args.r)
    support = stability.hitchin_support(args.i, args.invariant, args.superinvariant,
                                        args.eps_zero, args.r)
    return {"mu": jsonio.encode_fraction(value),
            "support": [list(chi) for chi in sorted(support)]}, EXIT_OK


def _cmd_profile_conic_support(args):
    pairs = jsonio.parse_weight_list(_inline(args.nonzero, "/nonzero"), "/nonzero")
    minimal, nu = stability.conic_minimal_support(pairs, args.r)
    return {"minimal": [list(p) for p in sorted(minimal)], "nu": nu}, EXIT_OK


def _cmd_profile_conic_mu(args):
    value = stability.profile_conic(args.c, args.k, args.r)
    support = stability.conic_subbundle_support(args.c, args.k, args.r)
    return {"mu": jsonio.encode_fraction(value),
            "support": [list(chi) for chi in sorted(support)]}, EXIT_OK


def _cmd_profile_conic_type(args):
    vanish = _inline(args.vanish, "/vanish")
    labels = [x for x in jsonio.parse_list(vanish, "/vanish")]
    type_label, tests = stability.conic_critical_type(labels, args.r)
    return {
        "type": type_label,
        "tests": [{"ranks": list(pair), "mu": jsonio.encode_fraction(m)}
                  for pair, m in tests],
    }, EXIT_OK


def _cmd_profile_hitchin_nilpotent(args):
    value = stability.hitchin_nilpotent_mu(args.r, sigma_zero=not args.sigma_nonzero)
    return {"mu": jsonio.encode_fraction(value)}, EXIT_OK


# --- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="decostab",
        description="Exact semistability calculus for decorated vector bundles",
    )
    parser.add_argument("--canonical", action="store_true",
                        help="byte-stable compact JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(handler=handler)
        return p

    p = add("states", _cmd_states, help="torus states of a representation expression")
    p.add_argument("--rep", required=True)

    p = add("degree", _cmd_degree, help="homogeneity degree of a representation")
    p.add_argument("--rep", required=True)

    p = add("homogenize", _cmd_homogenize, help="homogeneous hull at total degree kappa")
    p.add_argument("--summands", required=True)
    p.add_argument("--kappa", type=int, required=True)

    p = add("envelope-check", _cmd_envelope_check,
            help="state containment in the (a, b, c) envelope")
    p.add_argument("--rep", required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--c", type=int, required=True)

    p = add("mu", _cmd_mu, help="Hilbert-Mumford weight of a support against gamma")
    p.add_argument("--support", required=True)
    p.add_argument("--gamma", required=True)

    p = add("decompose", _cmd_decompose, help="corner-basis coefficients of gamma")
    p.add_argument("--gamma", required=True)

    p = add("cone", _cmd_cone, help="the dominant weight cone")
    p.add_argument("--r", type=int, required=True)

    for name, handler, help_text in (
        ("cell", _cmd_cell, "state cell of chi within A"),
        ("fan", _cmd_fan, "full cell decomposition induced by A"),
        ("critical", _cmd_critical, "criticality of a state subset"),
    ):
        p = add(name, handler, help=help_text)
        p.add_argument("--A", required=True)
        p.add_argument("--r", type=int)
        p.add_argument("--rep")
        if name == "cell":
            p.add_argument("--chi", required=True)

    p = add("k-rho", _cmd_k_rho, help="all critical test vectors of a representation")
    p.add_argument("--rep", required=True)
    p.add_argument("--budget", type=int)

    p = add("m-value", _cmd_m_value, help="slope term of a weighted filtration")
    p.add_argument("--file", required=True)

    p = add("check", _cmd_check, help="delta-(semi)stability test of one filtration")
    p.add_argument("--file", required=True)
    p.add_argument("--assert-pass", action="store_true")

    p = add("check-subbundle", _cmd_check_subbundle, help="one-step subbundle test")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--deg", type=int, required=True)
    p.add_argument("--support", required=True)
    p.add_argument("--delta", required=True)
    p.add_argument("--strict", action="store_true")
    p.add_argument("--assert-pass", action="store_true")

    p = add("combine", _cmd_combine, help="sigma-averaged test for direct sums")
    p.add_argument("--file", required=True)
    p.add_argument("--assert-pass", action="store_true")

    p = add("sectional", _cmd_sectional, help="section-count stability test")
    p.add_argument("--file", required=True)
    p.add_argument("--assert-pass", action="store_true")

    p = add("epsilon", _cmd_epsilon, help="linearisation weight of the quotient construction")
    for flag in ("--d", "--r", "--g", "--n", "--a"):
        p.add_argument(flag, type=int, required=True)
    p.add_argument("--delta", required=True)

    p = add("c1", _cmd_c1, help="slope bound offset")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--delta", required=True)

    p = add("simplify", _cmd_simplify, help="subbundle + critical filtration templates")
    p.add_argument("--rep", required=True)
    p.add_argument("--budget", type=int)

    p = add("threshold", _cmd_threshold, help="the delta at which a filtration test vanishes")
    p.add_argument("--file", required=True)

    profile = sub.add_parser("profile", help="worked example profiles")
    psub = profile.add_subparsers(dest="profile_command", required=True)

    def addp(name, handler):
        pp = psub.add_parser(name)
        pp.set_defaults(handler=handler)
        return pp

    p = addp("extension", _cmd_profile_extension)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--dim-ker", type=int, required=True)
    p.add_argument("--dim-cap", type=int, required=True)
    p.add_argument("--r", type=int, required=True)

    p = addp("framed", _cmd_profile_framed)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    kernel = p.add_mutually_exclusive_group(required=True)
    kernel.add_argument("--in-kernel", dest="in_kernel", action="store_true")
    kernel.add_argument("--not-in-kernel", dest="in_kernel", action="store_false")

    p = addp("hitchin", _cmd_profile_hitchin)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--invariant", action="store_true")
    p.add_argument("--superinvariant", action="store_true")
    p.add_argument("--eps-zero", action="store_true")

    p = addp("conic-support", _cmd_profile_conic_support)
    p.add_argument("--nonzero", required=True)
    p.add_argument("--r", type=int, required=True)

    p = addp("conic-mu", _cmd_profile_conic_mu)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)

    p = addp("conic-type", _cmd_profile_conic_type)
    p.add_argument("--vanish", required=True)
    p.add_argument("--r", type=int, default=4)

    p = addp("hitchin-nilpotent", _cmd_profile_hitchin_nilpotent)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--sigma-nonzero", action="store_true")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc, code = args.handler(args)
    except TooManyStatesError as exc:
        print(jsonio.dumps({"error": str(exc), "budget": exc.limit},
                           canonical=args.canonical), file=sys.stderr)
        return EXIT_BUDGET
    except SchemaError as exc:
        print(jsonio.dumps({"error": str(exc), "pointer": exc.pointer},
                           canonical=args.canonical), file=sys.stderr)
        return EXIT_VALIDATION
    except ValidationError as exc:
        print(jsonio.dumps({"error": str(exc)}, canonical=args.canonical),
              file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(jsonio.dumps({"error": str(exc)}, canonical=args.canonical),
              file=sys.stderr)
        return EXIT_VALIDATION
    print(jsonio.dumps(doc, canonical=args.canonical))
    return code


if __name__ == "__main__":
    sys.exit(main())
