"""Command-line interface: ``squeezespec <command> [options]``.

Exit codes: 0 success, 1 usage or validation error, 2 verification failure.
"""
import argparse
import csv
import io
import math
import sys

import numpy as np

from . import __version__, classifier, one_mode, two_mode, verify
from .errors import ConvergenceError, DomainError
from .pollaczek import gauss_nodes_weights, moments_taylor, pollaczek_table, quadrature_moment, weight

EXIT_OK, EXIT_USAGE, EXIT_FAIL = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# ------------------------------------------------------------ formatting


def _num(x):
    x = float(x)
    if math.isnan(x):
        return '"nan"'
    if math.isinf(x):
        return '"inf"' if x > 0 else '"-inf"'
    if x == int(x) and abs(x) < 1e17:
        return format(x, ".1f")
    return format(x, ".17g")


def dumps(obj, indent=0):
    """JSON with floats at 17 significant digits and a fixed key order."""
    pad = "  " * (indent + 1)
    end = "  " * indent
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f'{pad}"{k}": {dumps(v, indent + 1)}' for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(isinstance(v, (int, float, str, bool)) or v is None for v in obj):
            return "[" + ", ".join(dumps(v) for v in obj) + "]"
        return "[\n" + ",\n".join(pad + dumps(v, indent + 1) for v in obj) + "\n" + end + "]"
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if obj is None:
        return "null"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _num(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return dumps({"re": obj.real, "im": obj.imag}, indent)
    if isinstance(obj, str):
        return '"' + obj.replace("\\", "\\\\").replace('"', '\\"') + '"'
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _flatten(v):
    if isinstance(v, complex):
        return [_csvnum(v.real), _csvnum(v.imag)]
    if isinstance(v, (list, tuple)):
        return [x for e in v for x in _flatten(e)]
    return [_csvnum(v) if isinstance(v, float) else v]


def _csvnum(x):
    return format(float(x), ".17g")


def to_csv(rows, header):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow(_flatten(r))
    return buf.getvalue()


def record(command, parameters, values, **metadata):
    meta = {"version": __version__}
    meta.update(metadata)
    return {"command": command, "parameters": parameters, "values": values, "metadata": meta}


def value_entry(inp, out):
    out = complex(out)
    return {"input": inp, "output-re": out.real, "output-im": out.imag}


def _values_csv(values):
    first = values[0]["input"] if values else 0
    if isinstance(first, complex):
        head = ["input-re", "input-im"]
    elif isinstance(first, (list, tuple)):
        head = []
        for i, e in enumerate(first):
            head += [f"input{i + 1}-re", f"input{i + 1}-im"] if isinstance(e, complex) else [f"input{i + 1}"]
    else:
        head = ["input"]
    rows = [[v["input"], v["output-re"], v["output-im"]] for v in values]
    return to_csv(rows, head + ["output-re", "output-im"])


# --------------------------------------------------------------- parsing


def parse_grid(spec):
    """'start:stop:count' (inclusive, count >= 1), a comma list, or a single number."""
    try:
        if ":" in spec:
            parts = spec.split(":")
            if len(parts) != 3:
                raise ValueError
            start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
            if count < 1:
                raise ValueError
            return [float(v) for v in np.linspace(start, stop, count)]
        return [float(v) for v in spec.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"malformed grid {spec!r}; expected start:stop:count") from None


def parse_complex_list(spec):
    try:
        return [complex(v.replace(" ", "").replace("i", "j")) for v in spec.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"malformed complex list {spec!r}; expected e.g. '0.5+1j,-1j'") from None


def _require(cond, message):
    if not cond:
        raise UsageError(message)


# -------------------------------------------------------------- commands


def cmd_pollaczek(args):
    _require(args.n >= 0, "n must be >= 0")
    _require(args.b > 0, "b must be > 0")
    lams = parse_grid(args.lam)
    vals = pollaczek_table(args.n, np.array(lams), args.b)[args.n]
    values = [value_entry(x, v) for x, v in zip(lams, vals)]
    return record("pollaczek", {"n": args.n, "lambda": args.lam, "b": args.b}, values)


def cmd_weight(args):
    _require(args.b > 0, "b must be > 0")
    lams = parse_grid(args.lam)
    vals = np.atleast_1d(weight(np.array(lams), args.b))
    return record("weight", {"lambda": args.lam, "b": args.b}, [value_entry(x, v) for x, v in zip(lams, vals)])


def cmd_moments(args):
    _require(args.b > 0, "b must be > 0")
    _require(args.max_order >= 0, "max-order must be >= 0")
    if args.method == "taylor":
        vals = moments_taylor(args.max_order, args.b)
    elif args.method == "quadrature":
        vals = [0.0 if k % 2 else quadrature_moment(k, args.b) for k in range(args.max_order + 1)]
    else:
        nodes, w = gauss_nodes_weights(args.gauss_m, args.b)
        vals = [float(np.dot(w, nodes ** k)) for k in range(args.max_order + 1)]
    values = [value_entry(k, v) for k, v in enumerate(vals)]
    return record("moments", {"b": args.b, "max_order": args.max_order, "method": args.method}, values,
                  gauss_m=args.gauss_m)


def _eigvec_one(args):
    gen = one_mode.Generator(args.generator)
    _require(args.parity is not None, "one-mode eigvec needs --parity")
    par = one_mode.Parity(args.parity)
    x = args.value
    if args.rep == "n":
        vec = (one_mode.j2_nrep(x, par, args.N) if gen is one_mode.Generator.J2
               else one_mode.kplus_nrep(x, par, args.N))
        return [value_entry(n, c) for n, c in enumerate(vec.coeffs)], {"truncation": args.N}
    if args.rep == "z":
        _require(args.z is not None, "z-rep needs --z")
        zs = parse_complex_list(args.z)
        fn = one_mode.j2_zrep if gen is one_mode.Generator.J2 else one_mode.kplus_zrep
        vals = np.atleast_1d(fn(x, par, np.array(zs)))
        return [value_entry(z, v) for z, v in zip(zs, vals)], {}
    if gen is one_mode.Generator.KPLUS:
        return one_mode.kplus_qrep(x, par).as_dict(), {"symbolic": "delta pair"}
    _require(args.q is not None, "q-rep needs --q")
    qs = parse_grid(args.q)
    vals = np.atleast_1d(one_mode.j2_qrep(x, par, np.array(qs)))
    return [value_entry(q, v) for q, v in zip(qs, vals)], {}


def _eigvec_two(args):
    gen = one_mode.Generator(args.generator)
    _require(args.delta_n is not None, "two-mode eigvec needs --delta-n")
    label = two_mode.TwoModeLabel(args.delta_n)
    x = args.value
    if args.rep == "n":
        vec = (two_mode.j2_nrep_2(x, label, args.N) if gen is one_mode.Generator.J2
               else two_mode.kplus_nrep_2(x, label, args.N))
        return [value_entry(list(k), c) for k, c in zip(vec.kets, vec.coeffs)], {"truncation": args.N}
    if args.rep == "z":
        _require(args.z1 is not None and args.z2 is not None, "two-mode z-rep needs --z1 and --z2")
        z1, z2 = parse_complex_list(args.z1), parse_complex_list(args.z2)
        _require(len(z1) == len(z2), "--z1 and --z2 need the same number of points")
        fn = two_mode.j2_zrep_2 if gen is one_mode.Generator.J2 else two_mode.kplus_zrep_2
        vals = np.atleast_1d(fn(x, label, np.array(z1), np.array(z2)))
        return [value_entry([a, b], v) for a, b, v in zip(z1, z2, vals)], {}
    _require(gen is one_mode.Generator.J2 and label.delta_n == 0,
             "two-mode q-rep is available for j2 with delta-n = 0 only")
    _require(args.q1 is not None and args.q2 is not None, "two-mode q-rep needs --q1 and --q2")
    q1, q2 = parse_grid(args.q1), parse_grid(args.q2)
    _require(len(q1) == len(q2), "--q1 and --q2 need the same number of points")
    vals = np.atleast_1d(two_mode.j2_qrep_2_delta0(x, np.array(q1), np.array(q2)))
    return [value_entry([a, b], v) for a, b, v in zip(q1, q2, vals)], {}


def cmd_eigvec(args):
    _require(args.N >= 2, "N must be >= 2")
    values, meta = _eigvec_one(args) if args.mode == "one" else _eigvec_two(args)
    params = {"generator": args.generator, "mode": args.mode, "value": args.value, "rep": args.rep}
    if args.mode == "one":
        params["parity"] = args.parity
    else:
        params["delta_n"] = args.delta_n
    return record("eigvec", params, values, **meta)


def cmd_classify(args):
    h = classifier.QuadHamiltonian(args.A, args.B, args.C, args.D, args.Phi, args.Psi)
    res = classifier.classify(h, args.tol)
    params = {"A": h.A, "B": h.B, "C": h.C, "D": h.D, "Phi": h.Phi, "Psi": h.Psi}
    return record("classify", params, res.as_dict(), tolerance=args.tol)


def cmd_verify(args):
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    for n in names:
        _require(n in verify.SUITES, f"unknown suite {n!r}; choose from {', '.join(verify.SUITES)} or all")
    reports = [verify.run_suite(n, args.tolerance) for n in names]
    return reports


# ------------------------------------------------------------------ main


def build_parser():
    p = _Parser(prog="squeezespec", description="Eigenfunctions of squeezing generators, "
                "Pollaczek polynomials and quadratic Hamiltonian spectra.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, formats=("json", "csv")):
        sp.add_argument("--format", choices=formats, default="json")
        sp.add_argument("--out", help="write output to this file instead of stdout")

    sp = sub.add_parser("pollaczek", help="P_n(lambda, b) on a grid")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--lambda", dest="lam", required=True, help="start:stop:count or comma list")
    sp.add_argument("--b", type=float, required=True)
    common(sp)

    sp = sub.add_parser("weight", help="rho_b(lambda) on a grid")
    sp.add_argument("--lambda", dest="lam", required=True)
    sp.add_argument("--b", type=float, required=True)
    common(sp)

    sp = sub.add_parser("moments", help="moments of rho_b")
    sp.add_argument("--b", type=float, required=True)
    sp.add_argument("--max-order", type=int, default=12)
    sp.add_argument("--method", choices=("taylor", "quadrature", "gauss"), default="taylor")
    sp.add_argument("--gauss-m", type=int, default=80, help="Gauss rule size (default 80)")
    common(sp)

    sp = sub.add_parser("eigvec", help="generalized eigenvectors of J2 or K+")
    sp.add_argument("--generator", choices=("j2", "kplus"), required=True)
    sp.add_argument("--mode", choices=("one", "two"), default="one")
    sp.add_argument("--value", type=float, required=True, help="lambda (j2) or eta (kplus)")
    sp.add_argument("--parity", choices=("even", "odd"))
    sp.add_argument("--delta-n", type=int)
    sp.add_argument("--rep", choices=("n", "z", "q"), default="n")
    sp.add_argument("--N", type=int, default=one_mode.DEFAULT_N, help="n-rep truncation (default 128)")
    sp.add_argument("--z", help="comma list of complex points (one-mode z-rep)")
    sp.add_argument("--z1", help="comma list of complex points (two-mode z-rep)")
    sp.add_argument("--z2")
    sp.add_argument("--q", help="q grid (one-mode q-rep)")
    sp.add_argument("--q1", help="q1 grid (two-mode q-rep)")
    sp.add_argument("--q2")
    common(sp)

    sp = sub.add_parser("classify", help="spectral type of a quadratic Hamiltonian")
    for name in ("A", "B", "C"):
        sp.add_argument(f"--{name}", type=float, required=True)
    sp.add_argument("--D", type=float, default=0.0)
    sp.add_argument("--Phi", type=float, default=0.0)
    sp.add_argument("--Psi", type=float, default=0.0)
    sp.add_argument("--tol", type=float, default=classifier.DEFAULT_TOL,
                    help="relative tolerance of the A = B decision (default 1e-12)")
    common(sp)

    sp = sub.add_parser("verify", help="run verification suites")
    sp.add_argument("suite", help=f"one of {', '.join(verify.SUITES)}, or all")
    sp.add_argument("--tolerance", type=float, help="override every case tolerance")
    common(sp, ("json", "csv", "table"))
    return p


COMMANDS = {"pollaczek": cmd_pollaczek, "weight": cmd_weight, "moments": cmd_moments,
            "eigvec": cmd_eigvec, "classify": cmd_classify, "verify": cmd_verify}


def _render(args, result):
    if args.command == "verify":
        if args.format == "table":
            return "\n\n".join(r.table() for r in result) + "\n"
        if args.format == "csv":
            rows = [[r.suite, c.description, c.error, c.tolerance, str(c.passed).lower()]
                    for r in result for c in r.cases]
            return to_csv(rows, ["suite", "description", "error", "tolerance", "pass"])
        return dumps([r.as_dict() for r in result]) + "\n"
    if args.format == "csv":
        vals = result["values"]
        if isinstance(vals, dict):
            rows = [[k, dumps(v) if isinstance(v, (list, dict)) else v] for k, v in vals.items()]
            return to_csv(rows, ["key", "value"])
        return _values_csv(vals)
    return dumps(result) + "\n"


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = COMMANDS[args.command](args)
        text = _render(args, result)
    except (UsageError, DomainError, ValueError, ConvergenceError) as exc:
        print(f"squeezespec {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.command == "verify" and not all(r.passed for r in result):
        return EXIT_FAIL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
