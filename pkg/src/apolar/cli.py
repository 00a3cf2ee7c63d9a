"""Command line interface.

Exit codes: 0 success, 1 domain error (including a failed verification
identity), 2 parse or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .apolarity import apolar_profile, catalecticant
from .binary import binary_rank, monomial_rank
from .bounds import bound_report
from .errors import ApolarError, FormParseError, VerificationError
from .family import bound_table, family_form, verify_family
from .forms import Form
from .linalg import matrix_rank
from .parsing import parse_form


def _json_default(obj):
    if isinstance(obj, Fraction):
        return {"num": str(obj.numerator), "den": str(obj.denominator)}
    if isinstance(obj, Form):
        return str(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, default=_json_default)


def _read_form(args, nvars=None) -> Form:
    text = sys.stdin.read() if args.form == "-" else args.form
    return parse_form(text, nvars or args.vars)


def cmd_hf(args):
    f = _read_form(args)
    profile = apolar_profile(f)
    if args.json:
        return {"form": str(f), "degree": profile.degree, "hf": list(profile.hf),
                "apolar_length": profile.apolar_length}
    return str(profile)


def cmd_cat(args):
    f = _read_form(args)
    m = catalecticant(f, args.order)
    rank = matrix_rank(m)
    if args.json:
        out = {"form": str(f), "order": args.order, "rows": m.rows, "cols": m.cols, "rank": rank}
        if args.show_matrix:
            out["matrix"] = m.tolist()
        return out
    lines = [f"rank {rank} ({m.rows}x{m.cols})"]
    if args.show_matrix:
        width = max((len(str(v)) for row in m.entries for v in row), default=1)
        lines += [" ".join(str(v).rjust(width) for v in row) for row in m.entries]
    return "\n".join(lines)


def cmd_bounds(args):
    report = bound_report(_read_form(args))
    if args.json:
        return report.to_dict()
    lines = [f"form: {report.form}", f"catalecticant bound: {report.catalecticant_bound}"]
    for name in report.prop3:
        lines.append(f"direction {name}: prop3 {report.prop3[name]}, prop4 {report.prop4[name]}")
    return "\n".join(lines)


def cmd_binary_rank(args):
    cert = binary_rank(_read_form(args, 2))
    if args.json:
        return cert.to_dict()
    sf = "yes" if cert.squarefree_witness_found else "no"
    return (f"rank {cert.rank} (min generator degree {cert.min_generator_degree}, "
            f"generator {cert.witness_generator}, squarefree: {sf})")


def cmd_monomial_rank(args):
    rank = monomial_rank(args.a, args.b, args.c)
    return {"exponents": [args.a, args.b, args.c], "rank": rank} if args.json else str(rank)


def cmd_family(args):
    if not args.verify:
        inst = family_form(args.k)
        if args.json:
            return inst.to_dict()
        return "\n".join(f"{key}: {value}" for key, value in inst.to_dict().items())
    report = verify_family(args.k, args.samples, args.seed, args.workers)
    failed = [c.name for c in report.checks if not c.passed]
    payload = report.to_dict() if args.json else _family_text(report)
    if failed:
        raise _ReportFailure(payload, "failed identity: " + "; ".join(failed))
    return payload


def _family_text(report) -> str:
    lines = [f"k = {report.k}"]
    for c in report.checks:
        mark = "PASS" if c.passed else "FAIL"
        lines.append(f"[{mark}] {c.name}: expected {c.expected}, computed {c.computed}")
    if report.k:
        lines.append(f"samples run: {report.samples_run}, min al(F - H): {report.min_observed_al}")
        lines.append(f"certified modulo sampling: {report.certified_modulo_sampling}")
    lines.append(f"resulting bound: {report.resulting_bound}")
    return "\n".join(lines)


def cmd_table(args):
    rows = bound_table(args.dmin, args.dmax)
    if args.json:
        return {"rows": rows}
    lines = [f"{'d':>3} {'floor':>6} {'monomial':>9}  witness"]
    for r in rows:
        lines.append(f"{r['d']:>3} {r['floor_bound']:>6} {r['max_monomial']:>9}  {r['witness'] or '-'}")
    return "\n".join(lines)


class _ReportFailure(Exception):
    def __init__(self, payload, message):
        self.payload = payload
        super().__init__(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit key-sorted JSON")

    form_opts = argparse.ArgumentParser(add_help=False)
    form_opts.add_argument("--form", required=True, help="polynomial text, or - for stdin")
    form_opts.add_argument("--vars", type=int, choices=(2, 3), default=3,
                           help="number of variables (2: y,z; 3: x,y,z)")

    parser = argparse.ArgumentParser(prog="apolar", description="Apolarity and Waring rank bounds.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hf", parents=[common, form_opts], help="Hilbert function and apolar length")
    p.set_defaults(func=cmd_hf)

    p = sub.add_parser("cat", parents=[common, form_opts], help="catalecticant rank")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--show-matrix", action="store_true")
    p.set_defaults(func=cmd_cat)

    p = sub.add_parser("bounds", parents=[common, form_opts], help="rank lower bounds")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("binary-rank", parents=[common], help="Waring rank of a binary form in y, z")
    p.add_argument("--form", required=True, help="polynomial text, or - for stdin")
    p.set_defaults(func=cmd_binary_rank)

    p = sub.add_parser("monomial-rank", parents=[common], help="Waring rank of x^a y^b z^c")
    for name in "abc":
        p.add_argument(name, type=int)
    p.set_defaults(func=cmd_monomial_rank)

    p = sub.add_parser("family", parents=[common], help="family member F_k and its verification")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=None, help="worker processes for tail samples")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("table", parents=[common], help="per-degree lower bound table")
    p.add_argument("--dmin", type=int, required=True)
    p.add_argument("--dmax", type=int, required=True)
    p.set_defaults(func=cmd_table)
    return parser


def _emit(payload, stream):
    stream.write((payload if isinstance(payload, str) else dumps(payload)) + "\n")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _emit(args.func(args), sys.stdout)
    except FormParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except _ReportFailure as exc:
        _emit(exc.payload, sys.stdout)
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except VerificationError as exc:
        print(f"error: failed identity {exc.identity!r}: expected {exc.expected}, "
              f"computed {exc.computed}", file=sys.stderr)
        return 1
    except ApolarError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
