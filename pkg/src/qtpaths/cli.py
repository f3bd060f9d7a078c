"""Command line: expansions and verification reports as canonical JSON.

Exit status is 0 on success, 1 when a verification fails and 2 on bad usage.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .laurent import expansion_coeff, explicit_rhs
from .macdonald import WeightSpec, mac_basis
from .paths import ENGINES, Q_apply, R_apply
from .symfunc import BASES, SymFunc, convert
from .tau import tau_build
from . import verify


class UsageError(Exception):
    pass


def _ints(text):
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise UsageError(f"expected comma separated integers, got {text!r}") from None


def _betas(text):
    return [_ints(part) for part in text.split(";")]


def _weight(text):
    try:
        return WeightSpec.parse(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad weight {text!r}: {exc}") from None


def _read_symfunc(text):
    if text == "-":
        text = sys.stdin.read()
    try:
        return SymFunc.from_json(json.loads(text))
    except (json.JSONDecodeError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"malformed SymFunc JSON: {exc}") from None


def _default_window():
    raw = os.environ.get("QTPATHS_WINDOW")
    if raw is None:
        return 4
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"QTPATHS_WINDOW must be an integer, got {raw!r}") from None


def dumps(obj, pretty=False):
    if pretty:
        return json.dumps(obj, sort_keys=True, indent=2)
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


# -- commands ----------------------------------------------------------------------------

# each command returns (json data, exit code, plain text for --pretty or None)

def _symfunc_out(f):
    return f.to_json(), 0, str(f)


def cmd_r_apply(args):
    f = _read_symfunc(args.input)
    return _symfunc_out(convert(R_apply(_ints(args.beta), f, args.engine), args.basis))


def cmd_q_apply(args):
    f = _read_symfunc(args.input)
    return _symfunc_out(convert(Q_apply(_ints(args.alpha), f, args.engine), args.basis))


def cmd_mac(args):
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    data = mac_basis(args.n)
    text = "\n".join(f"{list(lam)}: {data.htilde[lam]}    eigenvalue {data.eigenvalue[lam]}"
                     f"    norm {data.norm_star[lam]}" for lam in data.parts)
    return data.to_json(), 0, text


def cmd_tau(args):
    tau = tau_build(_weight(args.g1), _weight(args.g2), args.zmax)
    out = tau.to_json()
    if args.htilde:
        out["htilde"] = [{"z_degree": m, "terms": [
            {"x": list(lam), "y": list(mu), "coeff": c.to_json()}
            for (lam, mu), c in sorted(tau.htilde_form(m).items())]}
            for m in range(args.zmax + 1)]
    lines = []
    for m in range(args.zmax + 1):
        for (lam, mu), c in sorted(tau.htilde_form(m).items()):
            lines.append(f"z^{m}  H{list(lam)}[X] H{list(mu)}[Y]  {c}")
    return out, 0, "\n".join(lines)


def cmd_explicit_rhs(args):
    return _symfunc_out(convert(explicit_rhs(_betas(args.betas)), args.basis))


def cmd_expansion(args):
    c = expansion_coeff(_betas(args.beta), _ints(args.lam), args.side)
    return c.to_json(), 0, str(c)


def _suite_kwargs(args):
    if args.suite == "pde" and args.ell is not None:
        return {"ells": (args.ell,)}
    if args.suite == "ext-delta" and args.n is not None:
        if args.k is None or args.l is None:
            raise UsageError("ext-delta needs --n, --k and --l together")
        if not 0 < args.k <= args.n or args.l < 0:
            raise UsageError("need 0 < k <= n and l >= 0")
        return {"cases": [(args.n, args.k, args.l)]}
    return {}


def cmd_verify(args):
    kw = _suite_kwargs(args)
    names = verify.GROUPS.get(args.suite, (args.suite,))
    if args.jobs > 1 and len(names) > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            futures = [pool.submit(verify.run_suite, n, args.window, args.zmax) for n in names]
            reports = [f.result() for f in futures]
    else:
        reports = [verify.run_suite(n, args.window, args.zmax, **kw) for n in names]
    passed = all(r.passed for r in reports)
    out = {"passed": passed, "reports": [r.to_json(timing=not args.no_timing) for r in reports]}
    return out, 0 if passed else 1, _report_table(out)


def _report_table(out):
    lines = []
    for rep in out["reports"]:
        lines.append(f"== {rep['suite']}: {'pass' if rep['passed'] else 'FAIL'}")
        for r in rep["results"]:
            el = f" {r['elapsed']:.3f}s" if "elapsed" in r else ""
            lines.append(f"  {r['status']:4} {r['id']} {dumps(r['params'])}{el}")
    lines.append(f"overall: {'pass' if out['passed'] else 'FAIL'}")
    return "\n".join(lines)


# -- parser ------------------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--window", type=int, default=None,
                        help="largest source degree (default 4, or $QTPATHS_WINDOW)")
    common.add_argument("--zmax", type=int, default=3, help="largest z-degree (default 3)")
    common.add_argument("--pretty", action="store_true", help="human readable output")

    parser = argparse.ArgumentParser(prog="qtpaths", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("r-apply", parents=[common], help="apply R_beta to a symmetric function")
    p.add_argument("--beta", required=True, help="comma separated, e.g. 1,-2,1,3")
    p.add_argument("--input", required=True, help="SymFunc JSON, an integer, or - for stdin")
    p.add_argument("--engine", choices=ENGINES, default="increments")
    p.add_argument("--basis", choices=BASES, default="e")
    p.set_defaults(func=cmd_r_apply)

    p = sub.add_parser("q-apply", parents=[common], help="apply Q_alpha to a symmetric function")
    p.add_argument("--alpha", required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--engine", choices=ENGINES, default="increments")
    p.add_argument("--basis", choices=BASES, default="e")
    p.set_defaults(func=cmd_q_apply)

    p = sub.add_parser("mac", parents=[common], help="modified Macdonald polynomials of degree n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_mac)

    p = sub.add_parser("tau", parents=[common], help="truncated G-weighted tau function")
    p.add_argument("--g1", required=True, help="coefficients a_0,a_1,... with a_0 = 1")
    p.add_argument("--g2", required=True)
    p.add_argument("--htilde", action="store_true", help="also report the Htilde x Htilde form")
    p.set_defaults(func=cmd_tau)

    p = sub.add_parser("explicit-rhs", parents=[common], help="the explicit formula for R_betas . 1")
    p.add_argument("--betas", required=True, help="factors separated by ';', e.g. 1,-2;3")
    p.add_argument("--basis", choices=BASES, default="e")
    p.set_defaults(func=cmd_explicit_rhs)

    p = sub.add_parser("expansion", parents=[common], help="one coefficient via dual Cauchy")
    p.add_argument("--beta", required=True, help="factors separated by ';'")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--side", choices=("schur", "monomial", "elementary"), default="schur")
    p.set_defaults(func=cmd_expansion)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("suite", choices=sorted(set(verify.SUITES) | set(verify.GROUPS)))
    p.add_argument("--ell", type=int, help="pde: only this ell")
    p.add_argument("--n", type=int, help="ext-delta: n")
    p.add_argument("--k", type=int, help="ext-delta: k")
    p.add_argument("--l", type=int, help="ext-delta: l")
    p.add_argument("--no-timing", action="store_true", help="omit timings for byte-stable output")
    p.add_argument("--jobs", type=int, default=1, help="run suites in parallel processes")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv=None):
    """Returns (exit code, stdout text)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), ""
    try:
        if args.window is None:
            args.window = _default_window()
        if args.window < 0 or args.zmax < 0:
            raise UsageError("--window and --zmax must be nonnegative")
        out, code, text = args.func(args)
    except (UsageError, ValueError, ZeroDivisionError) as exc:
        print(f"qtpaths: error: {exc}", file=sys.stderr)
        return 2, ""
    if not args.pretty or text is None:
        text = dumps(out)
    return code, text


def main(argv=None):
    code, text = run(argv)
    if text:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
