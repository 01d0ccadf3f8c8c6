"""Command-line interface: ``slocc <command> ...``.

Exit status is 0 on success, 1 when a verification finds a violation and
2 on usage or input errors.  State arguments are ket expressions or
``@path`` to a state file.
"""
from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import __version__
from .catalog import (
    DEGENERATE_CLASSES,
    DISPLAY,
    TRUE_CLASSES,
    class_properties,
    lookup_state,
)
from .classifier import certify_true_entanglement, distinguish_states, match_classes, signature
from .counting import degenerate_count, partition_term, partitions
from .exact import GaussianRational
from .invariants import ZERO_TOL, invariant_vector
from .ket import KetSyntaxError, format_state, parse, parse_file
from .nqubit import count_quadruples, f_n, f_n_nonzero_terms, ghz_n, w_n
from .oracles import ORACLE_CLASSES
from .orbit import (
    IDENTITIES,
    verify_class_zero_pattern,
    verify_conditionals,
    verify_identity,
    verify_oracles,
    verify_representatives,
    verify_pair_d_patterns,
)

__all__ = ["main", "run", "build_parser"]

DEFAULT_SEED = 0
NEGATIVE_CONTROLS = ("iv-covariance-corrupted",)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# ---------------------------------------------------------------------------
# formatting


def _value_text(v, machine: bool) -> str:
    if isinstance(v, GaussianRational):
        return str(v)
    z = complex(v)
    fmt = repr if machine else (lambda x: format(x, ".12g"))
    if z.imag == 0:
        return fmt(z.real)
    sign = "+" if z.imag >= 0 else "-"
    return f"{fmt(z.real)}{sign}{fmt(abs(z.imag))} i"


def _approx(v) -> str:
    z = complex(v)
    if z.imag == 0:
        return format(z.real, ".12g")
    return format(z, ".12g")


class _Out:
    def __init__(self, machine: bool):
        self.machine = machine
        self.lines: list[str] = []

    def kv(self, key, value):
        if self.machine:
            self.lines.append(f"{key}\t{value}")
        else:
            self.lines.append(f"{key} = {value}")

    def text(self, line: str):
        self.lines.append(line)

    def row(self, *cols):
        self.lines.append("\t".join(str(c) for c in cols))


# ---------------------------------------------------------------------------
# inputs


def _load_state(arg: str, qubits: Optional[int] = None):
    try:
        if arg.startswith("@"):
            return parse_file(arg[1:])
        return parse(arg, qubits)
    except KetSyntaxError as e:
        raise UsageError(f"cannot parse state: {e}") from None
    except OSError as e:
        raise UsageError(f"cannot read {arg[1:]}: {e.strerror}") from None
    except ValueError as e:
        raise UsageError(f"bad state {arg!r}: {e}") from None


def _carrier(s, args):
    if args.exact and not s.exact:
        raise UsageError("--exact needs rational (or Gaussian-rational) amplitudes over one square root")
    if getattr(args, "float", False):
        return s.to_float()
    return s


def _check_class(name: str, allowed=None):
    allowed = allowed or (TRUE_CLASSES + DEGENERATE_CLASSES)
    if name not in allowed:
        raise UsageError(f"unknown class {name!r}")


# ---------------------------------------------------------------------------
# commands


def cmd_compute(args, out: _Out) -> int:
    s = _carrier(_load_state(args.state, args.qubits), args)
    if s.n != 4:
        raise UsageError(f"compute needs a four-qubit state, got {s.n} qubits")
    v = invariant_vector(s)
    out.kv("carrier", "exact" if v.exact else "float")
    for key, val in v.items():
        text = _value_text(val, out.machine)
        if not out.machine and isinstance(val, GaussianRational) and val.im == 0 and val.re.denominator != 1:
            text += f"  ({_approx(val)})"
        out.kv(key, text)
    return 0


def _signature_lines(sig, out: _Out):
    flag = lambda z: "0" if z else "nonzero"  # noqa: E731
    out.kv("IV", flag(sig.iv_zero))
    out.kv("F", "0" if sig.f_aggregate_zero else ">0")
    for i in range(1, 11):
        out.kv(f"F{i}", flag(sig.f_zero(i)))
    for i in range(1, 4):
        out.kv(f"D{i}", flag(sig.d_zero(i)))
    for r in ("F9=F10", "F1F2=F9^2", "F3F4=F9^2"):
        out.kv(r, "yes" if sig.relation(r) else "no")


def cmd_classify(args, out: _Out) -> int:
    s = _load_state(args.state, args.qubits)
    if s.n != 4:
        raise UsageError(f"classify needs a four-qubit state, got {s.n} qubits")
    exact = s.exact and not args.float
    if args.exact:
        _carrier(s, args)
    sig = signature(s, args.tol, exact=exact)
    out.kv("carrier", "exact" if exact else f"float tol={args.tol:g}")
    _signature_lines(sig, out)
    cert = certify_true_entanglement(sig)
    out.kv("certification", f"condition ({cert.condition}): {cert.witness}" if cert.certified else "not certified")
    out.kv("matches", " ".join(match_classes(sig, args.errata)) or "none")
    return 0


def cmd_match(args, out: _Out) -> int:
    states = [_load_state(a, args.qubits) for a in args.states]
    for s in states:
        if s.n != 4:
            raise UsageError(f"match needs four-qubit states, got {s.n} qubits")
    for k, s in enumerate(states, 1):
        sig = signature(s, args.tol, exact=s.exact and not args.float)
        names = match_classes(sig, args.errata)
        out.kv(f"state{k}" if len(states) > 1 else "matches", " ".join(names) or "none")
    if len(states) == 2:
        d = distinguish_states(*states, tol=args.tol)
        out.kv("verdict", d.verdict)
        out.kv("reason", d.reason)
    return 0


def cmd_catalog(args, out: _Out) -> int:
    if args.action == "list":
        if args.name:
            raise UsageError(f"catalog list takes no name (got {args.name!r})")
        for kind, names in (("true", TRUE_CLASSES), ("degenerate", DEGENERATE_CLASSES)):
            for name in names:
                out.row(name, kind, format_state(lookup_state(name).state))
        return 0
    if not args.name:
        raise UsageError("catalog show needs a class name")
    try:
        ns = lookup_state(args.name)
    except KeyError:
        raise UsageError(f"unknown class {args.name!r}") from None
    out.kv("name", ns.name)
    out.kv("display", DISPLAY.get(ns.name, ns.display))
    out.kv("state", format_state(ns.state))
    out.kv("source", ns.source)
    if ns.name in TRUE_CLASSES + DEGENERATE_CLASSES:
        p = class_properties(ns.name)
        out.kv("kind", p.kind)
        out.kv("IV", "=0" if p.iv_zero else "!=0")
        out.kv("F", ">0" if p.f_positive else "=0")
        out.kv("D", " ".join(p.d_flags))
        out.kv("F=0", ",".join(map(str, sorted(p.f_zero_set))) or "-")
        out.kv("pairs", " ".join(f"|F{i}|+|F{j}|!=0" for i, j in p.f_nonzero_pairs) or "-")
        if p.f_nonzero:
            out.kv("F!=0", ",".join(map(str, sorted(p.f_nonzero))))
        out.kv("relations", " ".join(sorted(p.relations)) or "-")
        out.kv("conditionals", " ".join(f"#{c}" for c in sorted(p.conditionals)) or "-")
    return 0


def _header(out: _Out, args, **extra):
    fields = {"seed": args.seed, **extra}
    out.text("# " + " ".join(f"{k}={v}" for k, v in fields.items()))


def _emit_report(out: _Out, report, verbose: bool):
    if out.machine:
        for row in report.lines():
            out.row(*row)
        return
    status = "ok" if report.passed else "FAIL"
    extra = ""
    if report.opt_witnesses:
        extra = " opt " + " ".join(f"{k}:{'ok' if None not in w else 'missing'}"
                                   for k, w in report.opt_witnesses.items())
    if report.branches:
        extra += " " + " ".join(f"[{k}]={v}" for k, v in report.branches.items())
    out.text(f"{report.class_name}: {status} ({report.samples} samples){extra}")
    props = {}
    for seed, prop, values in report.violations:
        props.setdefault(prop, (seed, values))
    for prop, (seed, values) in props.items():
        out.text(f"  violated {prop} first at seed {seed}")
        if verbose:
            out.text("    " + " ".join(f"{k}={_value_text(v, False)}" for k, v in values.items()))


def cmd_verify(args, out: _Out) -> int:
    what = args.what
    failed = False
    carrier = "float" if args.float else "exact"
    if what == "tables":
        names = [args.cls] if args.cls else list(TRUE_CLASSES + DEGENERATE_CLASSES)
        for n in names:
            _check_class(n)
        _header(out, args, samples=args.samples, carrier=carrier, errata=args.errata)
        for name in names:
            r = verify_class_zero_pattern(name, args.samples, args.seed, carrier, args.errata)
            _emit_report(out, r, args.verbose)
            failed |= not r.passed
        if not args.cls or args.cls in verify_pair_d_patterns():
            for name, (expected, observed) in verify_pair_d_patterns().items():
                if args.cls and name != args.cls:
                    continue
                ok = expected == observed
                failed |= not ok
                pattern = lambda f: "".join("x" if b else "0" for b in f)  # noqa: E731
                if out.machine:
                    out.row(name, "pair D", "ok" if ok else f"FAIL observed={pattern(observed)}")
                else:
                    out.text(f"{name}: pair D pattern {pattern(observed)} "
                             f"{'ok' if ok else 'FAIL expected ' + pattern(expected)}")
    elif what == "identities":
        _header(out, args, trials=args.trials)
        for ident in IDENTITIES:
            res = verify_identity(ident, args.trials, args.seed)
            negative = ident in NEGATIVE_CONTROLS
            ok = res.passed != negative
            failed |= not ok
            status = ("pass" if res.passed else f"fail at seed {res.counterexample['seed']}")
            if negative:
                status += " (negative control, must fail)"
            if out.machine:
                out.row("identity", ident, ("ok " if ok else "FAIL ") + status)
            else:
                out.text(f"{ident}: {status}{'' if ok else '  <-- unexpected'}")
    elif what == "oracles":
        names = [args.cls] if args.cls else list(ORACLE_CLASSES)
        for n in names:
            _check_class(n, ORACLE_CLASSES)
        _header(out, args, trials=args.trials, errata=args.errata)
        for name in names:
            r = verify_oracles(name, args.trials, args.seed, args.errata)
            _emit_report(out, r, args.verbose)
            failed |= not r.passed
    elif what == "conditionals":
        names = [args.cls] if args.cls else [n for n in TRUE_CLASSES if class_properties(n).conditionals]
        for n in names:
            _check_class(n)
        _header(out, args, samples=args.samples, targeted=not args.untargeted)
        for name in names:
            r = verify_conditionals(name, not args.untargeted, args.samples, args.seed)
            _emit_report(out, r, args.verbose)
            missing = [k for k, v in r.branches.items() if v == 0]
            if missing and not args.untargeted:
                out.text(f"  branch never reached: {', '.join(missing)}")
            failed |= not r.passed or (bool(missing) and not args.untargeted)
    elif what == "states":
        out.text(f"# errata={args.errata}")
        for name, (expected, observed) in verify_representatives(args.errata).items():
            ok = expected == observed
            failed |= not ok
            fmt = lambda p: "D=" + "".join("x" if b else "0" for b in p[0]) + \
                " F!=0:" + (",".join(map(str, sorted(p[1]))) or "-")  # noqa: E731
            if out.machine:
                out.row(name, "pattern", "ok" if ok else f"FAIL observed {fmt(observed)}")
            else:
                out.text(f"{name}: {fmt(observed)} {'ok' if ok else 'FAIL expected ' + fmt(expected)}")
    out.text("result: " + ("FAIL" if failed else "ok"))
    return 1 if failed else 0


def _parse_t(items) -> dict:
    t = {}
    for item in items or ():
        key, sep, val = item.partition("=")
        try:
            if not sep:
                raise ValueError
            t[int(key)] = int(val)
        except ValueError:
            raise UsageError(f"--t expects m=value, got {item!r}") from None
    return t


def cmd_count(args, out: _Out) -> int:
    if args.n < 2:
        raise UsageError(f"count needs n >= 2, got {args.n}")
    try:
        t = _parse_t(args.t)
        result = degenerate_count(args.n, t, symbolic=args.symbolic)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if args.verbose:
        for p in partitions(args.n):
            out.row(str(p), partition_term(p, t))
    if out.machine:
        out.kv("d", result)
    else:
        out.text(str(result))
    return 0


def cmd_nf(args, out: _Out) -> int:
    from . import _kernels

    chosen = [x is not None for x in (args.state, args.ghz, args.w)]
    if sum(chosen) != 1:
        raise UsageError("nf needs exactly one of STATE, --ghz N, --w N")
    if args.state is not None:
        s = _load_state(args.state, args.qubits)
    else:
        n = args.ghz if args.ghz is not None else args.w
        if not 2 <= n <= 8:
            raise UsageError(f"n must be in 2..8, got {n}")
        s = ghz_n(n) if args.ghz is not None else w_n(n)
    if not 2 <= s.n <= 8:
        raise UsageError(f"nf supports 2..8 qubits, got {s.n}")
    if args.float:
        s = s.to_float()
    out.kv("n", s.n)
    out.kv("quadruples", count_quadruples(s.n))
    out.kv("backend", _kernels.BACKEND)
    value = f_n(s)
    out.kv("F", repr(value) if out.machine else format(value, ".12g"))
    if s.exact:
        out.kv("nonzero_terms", f_n_nonzero_terms(s))
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="slocc", description="SLOCC invariants and classification of multi-qubit states")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", metavar="command", parser_class=_Parser)

    def common(sp, carrier=True):
        sp.add_argument("--machine", action="store_true", help="tab-separated key/value output")
        if carrier:
            g = sp.add_mutually_exclusive_group()
            g.add_argument("--exact", action="store_true", help="require the exact carrier")
            g.add_argument("--float", action="store_true", help="use floating point")

    def state_opts(sp):
        sp.add_argument("--qubits", "-n", type=int, default=None, help="number of qubits for integer kets")

    sp = sub.add_parser("compute", help="IV, F1..F10, F and D1..D3 of a four-qubit state")
    sp.add_argument("state")
    state_opts(sp)
    common(sp)
    sp.set_defaults(func=cmd_compute)

    sp = sub.add_parser("classify", help="signature, certification and matching classes")
    sp.add_argument("state")
    state_opts(sp)
    sp.add_argument("--tol", type=float, default=ZERO_TOL)
    sp.add_argument("--errata", action="store_true", help="use corrected class properties")
    common(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("match", help="matching classes; with two states, an inequivalence check")
    sp.add_argument("states", nargs="+", metavar="state")
    state_opts(sp)
    sp.add_argument("--tol", type=float, default=ZERO_TOL)
    sp.add_argument("--errata", action="store_true")
    common(sp)
    sp.set_defaults(func=cmd_match)

    sp = sub.add_parser("catalog", help="list named states or show one")
    sp.add_argument("action", choices=["list", "show"])
    sp.add_argument("name", nargs="?")
    common(sp, carrier=False)
    sp.set_defaults(func=cmd_catalog)

    sp = sub.add_parser("verify", help="randomized verification suites")
    sp.add_argument("what", choices=["tables", "identities", "oracles", "conditionals", "states"])
    sp.add_argument("--samples", type=int, default=500)
    sp.add_argument("--trials", type=int, default=None)
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sp.add_argument("--class", dest="cls", default=None, metavar="NAME")
    sp.add_argument("--errata", action="store_true", help="check the corrected forms instead of the printed ones")
    sp.add_argument("--untargeted", action="store_true", help="conditionals: plain orbit samples")
    sp.add_argument("--verbose", "-v", action="store_true")
    common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("count", help="number of degenerate classes of n qubits")
    sp.add_argument("n", type=int)
    sp.add_argument("--t", action="append", metavar="m=value", help="known true-class count t(m)")
    sp.add_argument("--symbolic", action="store_true", help="keep unknown t(m) symbolic")
    sp.add_argument("--verbose", "-v", action="store_true", help="print each partition's term")
    common(sp, carrier=False)
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("nf", help="n-qubit F of a state, GHZ or W")
    sp.add_argument("state", nargs="?")
    sp.add_argument("--ghz", type=int, metavar="N")
    sp.add_argument("--w", type=int, metavar="N")
    state_opts(sp)
    common(sp)
    sp.set_defaults(func=cmd_nf)
    return p


def run(argv: Optional[Sequence[str]] = None) -> tuple[int, str, str]:
    """Run the CLI on ``argv``; returns (exit code, stdout text, stderr text)."""
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        return 2, "", f"{e}\n"
    except SystemExit as e:  # --help / --version
        return int(e.code or 0), "", ""
    if not getattr(args, "func", None):
        return 2, "", parser.format_usage()
    if getattr(args, "trials", "unset") is None:
        args.trials = 100 if args.what == "oracles" else 50
    out = _Out(getattr(args, "machine", False))
    try:
        code = args.func(args, out)
    except UsageError as e:
        return 2, "\n".join(out.lines), f"slocc: {e}\n"
    return code, "\n".join(out.lines) + ("\n" if out.lines else ""), ""


def main(argv: Optional[Sequence[str]] = None) -> int:
    code, stdout, stderr = run(argv)
    sys.stdout.write(stdout)
    sys.stderr.write(stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
