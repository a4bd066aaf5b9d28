"""Command-line front end.

Exit codes: 0 success, 1 verification or example failure, 2 invalid input.
Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import explorer, fibfan, oracle, wblowup
from .errors import InternalConsistencyError, ToricError
from .explorer import frac_json
from .lattice import blowup_weight, fibration_weight, parse_rational, parse_vector

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

_RATIONAL = {
    "type": "object",
    "properties": {"num": {"type": "integer"}, "den": {"type": "integer", "minimum": 1}},
    "required": ["num", "den"],
    "additionalProperties": False,
}

# Output of every single-vector command.
RESULT_SCHEMA = {
    "type": "object",
    "properties": {
        "input": {"type": "object"},
        "value": {"anyOf": [
            _RATIONAL,
            {"type": "integer"},
            {"type": "boolean"},
            {"type": "array", "items": {"type": "integer"}},
        ]},
        "witness": {"anyOf": [
            {"type": "array", "items": {"type": "integer"}},
            {"const": "generator"},
        ]},
        "decomposition": {
            "type": "object",
            "properties": {
                "j": {"type": "integer"},
                "a": _RATIONAL,
                "b": {"type": "array", "items": _RATIONAL},
                "generators": {"type": "array", "items": {"type": "integer"}},
            },
            "required": ["j", "a", "b"],
        },
        "mld": _RATIONAL,
        "verified": {"type": "boolean"},
    },
    "required": ["input", "value"],
}

_NEG_VALUE = re.compile(r"^-\d+(/\d+|(,-?\d+)*)$")


class VerificationFailed(Exception):
    pass


def _vec(text):
    try:
        return parse_vector(text)
    except ToricError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _rat(text):
    try:
        return parse_rational(text)
    except ToricError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _fmt(x: Fraction) -> str:
    return str(x)


def _dec_json(dec):
    if isinstance(dec, wblowup.Decomposition):
        return {"j": dec.j, "a": frac_json(dec.a), "b": [frac_json(b) for b in dec.b]}
    return {
        "j": dec.dropped,
        "a": frac_json(dec.a),
        "b": [frac_json(c) for _, c in dec.coefficients],
        "generators": [g for g, _ in dec.coefficients],
    }


def _dec_text(dec):
    if isinstance(dec, wblowup.Decomposition):
        bs = ", ".join(_fmt(b) for b in dec.b)
        return f"j={dec.j} a={_fmt(dec.a)} b=[{bs}]"
    parts = ", ".join(f"{'u0' if g == 0 else f'e{g}'}:{_fmt(c)}" for g, c in dec.coefficients)
    return f"dropped={'u0' if dec.dropped == 0 else f'e{dec.dropped}'} a={_fmt(dec.a)} [{parts}]"


def _check(label, got, expected):
    if got != expected:
        raise VerificationFailed(f"--verify: {label}: engine gives {got}, oracle gives {expected}")


# --- commands ------------------------------------------------------------
# Each returns (json_dict, text) or raises.

def cmd_alpha(args):
    n = blowup_weight(args.n)
    dec = wblowup.decompose(args.m, n)
    if args.verify:
        _check("alpha", dec.value, oracle.alpha_oracle(args.m, n))
    out = {"input": {"m": list(args.m), "n": list(n)}, "value": frac_json(dec.value),
           "decomposition": _dec_json(dec)}
    return out, f"{_fmt(dec.value)}  {_dec_text(dec)}"


def cmd_alpha_prime(args):
    n = fibration_weight(args.n)
    dec = fibfan.alpha_prime(args.m, n)
    if args.verify:
        _check("alpha'", dec.value, oracle.alpha_prime_oracle(args.m, n))
    out = {"input": {"m": list(args.m), "n": list(n)}, "value": frac_json(dec.value),
           "decomposition": _dec_json(dec)}
    return out, f"{_fmt(dec.value)}  {_dec_text(dec)}"


def _mld_output(n, report):
    witness = report.witness if report.at_generator else list(report.witness)
    out = {"input": {"n": list(n)}, "value": frac_json(report.value), "witness": witness}
    wtxt = "generator" if report.at_generator else "(" + ",".join(map(str, witness)) + ")"
    return out, f"{_fmt(report.value)}  witness={wtxt}"


def cmd_mld(args):
    n = blowup_weight(args.n)
    report = wblowup.mld(n)
    if args.verify:
        _check("mld", report.value, oracle.mld_bruteforce(n, max(n)).value)
    return _mld_output(n, report)


def cmd_mld_prime(args):
    n = fibration_weight(args.n)
    report = fibfan.mld_prime(n)
    if args.verify:
        bound = max(abs(x) for x in n) + n.d
        _check("mld'", report.value, oracle.mld_prime_bruteforce(n, bound).value)
    return _mld_output(n, report)


def _elc(args, prime):
    if prime:
        n = fibration_weight(args.n)
        ok, value = fibfan.is_elc_prime(n, args.eps), fibfan.mld_prime(n).value
    else:
        n = blowup_weight(args.n)
        ok, value = wblowup.is_elc(n, args.eps), wblowup.mld(n).value
    if args.verify:
        if prime:
            ref = oracle.mld_prime_bruteforce(n, max(abs(x) for x in n) + n.d).value
        else:
            ref = oracle.mld_bruteforce(n, max(n)).value
        _check("mld", value, ref)
        _check("eps-lc", ok, ref >= args.eps)
    out = {"input": {"n": list(n), "eps": frac_json(args.eps)}, "value": ok, "mld": frac_json(value)}
    return out, f"{'true' if ok else 'false'}  (mld={_fmt(value)}, eps={_fmt(args.eps)})"


def cmd_is_elc(args):
    return _elc(args, prime=False)


def cmd_is_elc_prime(args):
    return _elc(args, prime=True)


def cmd_lct(args):
    n = blowup_weight(args.n)
    value = wblowup.lct_hyperplane(n, args.i)
    if args.verify:
        _check("lct", value, oracle.lct_bruteforce(n, args.i, max(n)))
    return {"input": {"n": list(n), "i": args.i}, "value": frac_json(value)}, _fmt(value)


def cmd_pullback_mult(args):
    n = blowup_weight(args.n)
    indices = [args.i] if args.i is not None else list(range(1, n.d + 1))
    values = [wblowup.pullback_mult(n, i) for i in indices]
    if args.verify:
        for i, v in zip(indices, values):
            _check(f"pullback multiplicity {i}", v, oracle.pullback_mult_oracle(n, i))
    inp = {"n": list(n)}
    if args.i is not None:
        inp["i"] = args.i
        return {"input": inp, "value": values[0]}, str(values[0])
    return {"input": inp, "value": values}, " ".join(map(str, values))


def cmd_fiber_mult(args):
    n = fibration_weight(args.n)
    value = fibfan.fiber_multiplicity(n)
    if args.verify:
        _check("fibre multiplicity", value, oracle.fiber_multiplicity_oracle(n))
    return {"input": {"n": list(n)}, "value": value}, str(value)


def cmd_relative_class(args):
    n = blowup_weight(args.n)
    value = wblowup.relative_class(args.t, args.c, n)
    if args.verify:
        _check("relative class", value, oracle.relative_class_oracle(args.t, args.c, n))
    return {"input": {"t": args.t, "c": list(args.c), "n": list(n)}, "value": value}, str(value)


def _scan(args, params):
    report = explorer.run_scan(
        params,
        checkpoint=args.resume or args.checkpoint,
        resume=args.resume is not None,
        checkpoint_every=args.checkpoint_every,
        workers=args.workers,
        max_records=args.max_records,
    )
    if args.verify:
        for rec in report.records:
            if max(abs(x) for x in rec.weights) > 6:
                continue
            if params.mode == "blowup":
                ref = oracle.mld_bruteforce(rec.weights, max(rec.weights)).value
            else:
                ref = oracle.mld_prime_bruteforce(
                    rec.weights, max(abs(x) for x in rec.weights) + params.d).value
            _check(f"scan record {rec.weights}", rec.mld_value, ref)
    body = report.to_csv() if args.format == "csv" else report.dumps()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(body)
    summary = (f"scanned={report.scanned} qualifying={len(report.qualifying)} "
               f"frontier={report.frontier} complete={str(report.complete).lower()}")
    return report, body, summary


def cmd_scan_blowup(args):
    params = explorer.ScanParams("blowup", args.d, args.eps, args.bound, None, args.all)
    return _scan(args, params)


def cmd_scan_fibration(args):
    params = explorer.ScanParams("fibration", args.d, args.eps, args.n1_bound, args.coeff_bound, args.all)
    return _scan(args, params)


# --- parser --------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--verify", action="store_true", help="cross-check against the brute-force oracle")

    parser = argparse.ArgumentParser(
        prog="toricsing",
        description="Exact log discrepancies of weighted blowups and toric fibrations to the line.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("alpha", cmd_alpha, "log discrepancy of a point on the weighted blowup")
    p.add_argument("--m", type=_vec, required=True)
    p.add_argument("--n", type=_vec, required=True)
    p = add("alpha-prime", cmd_alpha_prime, "log discrepancy of a point on the fibration fan")
    p.add_argument("--m", type=_vec, required=True)
    p.add_argument("--n", type=_vec, required=True)
    p = add("mld", cmd_mld, "minimal log discrepancy of the weighted blowup")
    p.add_argument("--n", type=_vec, required=True)
    p = add("mld-prime", cmd_mld_prime, "minimal log discrepancy of the fibration fan")
    p.add_argument("--n", type=_vec, required=True)
    for name, func in (("is-elc", cmd_is_elc), ("is-elc-prime", cmd_is_elc_prime)):
        p = add(name, func, "epsilon-lc test (eps as p/q or integer)")
        p.add_argument("--n", type=_vec, required=True)
        p.add_argument("--eps", type=_rat, required=True)
    p = add("lct", cmd_lct, "lc threshold of the pullback of a coordinate hyperplane")
    p.add_argument("--n", type=_vec, required=True)
    p.add_argument("--i", type=int, required=True)
    p = add("pullback-mult", cmd_pullback_mult, "multiplicity of the exceptional divisor in f^*H_i")
    p.add_argument("--n", type=_vec, required=True)
    p.add_argument("--i", type=int)
    p = add("fiber-mult", cmd_fiber_mult, "multiplicity of the fibre over 0")
    p.add_argument("--n", type=_vec, required=True)
    p = add("relative-class", cmd_relative_class, "class of c_T*T + sum c_i H_i~ over A^d")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--c", type=_vec, required=True)
    p.add_argument("--n", type=_vec, required=True)

    for name, func in (("scan-blowup", cmd_scan_blowup), ("scan-fibration", cmd_scan_fibration)):
        p = add(name, func, "exhaustive scan of canonical weight vectors")
        p.add_argument("--d", type=int, required=True)
        p.add_argument("--eps", type=_rat, required=True)
        if name == "scan-blowup":
            p.add_argument("--bound", type=int, required=True)
        else:
            p.add_argument("--n1-bound", type=int, required=True)
            p.add_argument("--coeff-bound", type=int, required=True)
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--checkpoint", metavar="FILE", help="write checkpoints to FILE")
        p.add_argument("--resume", metavar="FILE", help="resume from FILE and keep checkpointing there")
        p.add_argument("--checkpoint-every", type=int, default=explorer.DEFAULT_CHECKPOINT_EVERY)
        p.add_argument("--max-records", type=int, help="stop after this many vectors (resumable)")
        p.add_argument("--all", action="store_true", help="keep non-qualifying records too")
        p.add_argument("--out", metavar="PATH", help="write the report to PATH")
        p.add_argument("--format", choices=("json", "csv"), default="json")

    add("verify-examples", None, "reproduce the example table")
    return parser


def _merge_negative_lists(argv):
    """Turn ``--c -3,0,1`` into ``--c=-3,0,1`` (same for ``--eps -1/2``) so argparse sees a value."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok.startswith("--") and "=" not in tok and i + 1 < len(argv) and _NEG_VALUE.match(argv[i + 1]):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def _run_examples(args):
    results = explorer.verify_examples()
    failed = [r for r in results if not r.ok]
    if args.json:
        rows = [{"label": r.label, "got": str(r.got), "expected": str(r.expected), "ok": r.ok}
                for r in results]
        print(json.dumps({"rows": rows, "passed": len(results) - len(failed), "failed": len(failed)}))
    else:
        for r in results:
            print(f"{'PASS' if r.ok else 'FAIL'}  {r.label}  got={r.got}  expected={r.expected}")
        print(f"{len(results) - len(failed)}/{len(results)} rows pass")
    return EXIT_FAIL if failed else EXIT_OK


def run(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_merge_negative_lists(argv))
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.command == "verify-examples":
        return _run_examples(args)
    try:
        if args.command.startswith("scan-"):
            _, body, summary = args.func(args)
            if not args.out and (args.json or args.format == "csv"):
                sys.stdout.write(body)
            else:
                print(summary)
            return EXIT_OK
        out, text = args.func(args)
    except VerificationFailed as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_FAIL
    except InternalConsistencyError as exc:
        print(f"internal consistency error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ToricError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.verify:
        out["verified"] = True
    if args.json:
        print(json.dumps(out, separators=(",", ":")))
    else:
        print(text)
    return EXIT_OK


def main():
    sys.exit(run())
