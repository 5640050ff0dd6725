"""Command-line front end.

Every subcommand maps onto one library call.  Output is text by default,
JSON with ``--format json``; ``--verbose`` appends provenance.  Exit codes:
0 ok, 2 input error, 3 window or indeterminate, 4 property violation.
"""

from __future__ import annotations

import argparse
import json
import platform
import sys
from typing import Any, Callable, Optional

from . import __version__
from . import acceptance as A
from . import boolean_witt as B
from . import countability as C
from . import ideals as I
from . import memo
from . import monomial as M
from . import partitions as P
from . import ptypical as T
from . import schur as S
from . import total_positivity as TP
from .errors import InputError, WittlabError
from .symfunc import MONOMIAL, SCHUR, mono, schur


class Result:
    """A payload plus its text rendering."""

    def __init__(self, payload: Any, text: str, exit_code: int = 0):
        self.payload = payload
        self.text = text
        self.exit_code = exit_code


def _window(args, size: int, part: Optional[int] = None, length: Optional[int] = None) -> P.Window:
    return P.Window(args.window_size if args.window_size is not None else size,
                    args.max_part if args.max_part is not None else part,
                    args.max_length if args.max_length is not None else length)


def _window_json(w: P.Window) -> dict:
    return w.to_json()


# ---------------------------------------------------------------------------
# symmetric functions


def cmd_mprod(args) -> Result:
    lam, mu = P.parse(args.lam), P.parse(args.mu)
    if args.nvars is not None:
        f = M.mono_product_oracle(mono(lam), mono(mu), args.nvars)
    else:
        f = M.mono_product(mono(lam), mono(mu))
    return Result(f.to_json(), repr(f))


def cmd_sprod(args) -> Result:
    f = S.schur_product(schur(P.parse(args.lam)), schur(P.parse(args.mu)))
    return Result(f.to_json(), repr(f))


def cmd_lr(args) -> Result:
    c = S.lr_coefficient(P.parse(args.lam), P.parse(args.mu), P.parse(args.nu))
    return Result(c, str(c))


def cmd_kostka(args) -> Result:
    k = S.kostka(P.parse(args.lam), P.parse(args.mu))
    return Result(k, str(k))


def cmd_coprod(op: str) -> Callable:
    def run(args) -> Result:
        lam = P.parse(args.lam)
        if args.basis == "s":
            t = S.coproduct_add_s(lam) if op == "add" else S.coproduct_mul_s(lam)
        else:
            t = M.coproduct_add_m(lam) if op == "add" else M.coproduct_mul_m(lam, args.nvars)
        return Result(t.to_json(), repr(t))
    return run


def cmd_pleth(args) -> Result:
    outer, inner = P.parse(args.outer), P.parse(args.inner)
    degcap = args.degcap if args.degcap is not None else sum(outer) * sum(inner)
    f = M.plethysm_expand(mono(outer), mono(inner), args.nvars, degcap)
    return Result(f.to_json(), repr(f))


# ---------------------------------------------------------------------------
# Boolean Witt vectors


def _bw(text: str) -> B.BoolWitt:
    return B.BoolWitt.parse(text)


def _sw(text: str) -> B.SchurBoolWitt:
    return B.SchurBoolWitt.parse(text)


def cmd_wbool(args) -> Result:
    op = args.op
    if op in ("eval", "add", "mul", "leq") and args.b is None:
        raise InputError(f"wbool {op} needs two operands")
    if op == "eval":
        v = B.eval_m(_bw(args.a), P.parse(args.b))
        return Result(v, str(v))
    if op in ("add", "mul"):
        a, b = _bw(args.a), _bw(args.b)
        if args.check:
            expected = B.add_w(a, b) if op == "add" else B.mul_w(a, b)
            window = _window(args, 0) if args.window_size is not None else None
            if window is None:
                window, bound = (P.Window.box(4, 4), (3, 3)) if expected.is_infinite \
                    else (B.corner_window(expected), None)
            else:
                bound = None
            r = B.law_check_via_coproduct(a, b, op, window, bound)
        else:
            r = B.add_w(a, b) if op == "add" else B.mul_w(a, b)
        return Result(r.to_json(), repr(r))
    if op == "leq":
        v = B.leq_w(_bw(args.a), _bw(args.b))
        return Result(v, "true" if v else "false")
    if op == "ghost":
        g = B.ghost(_bw(args.a))
        n = int(args.b) if args.b else 8
        return Result({"threshold": g.threshold, "bits": g.bits(n)}, " ".join(map(str, g.bits(n))) + " ...")
    if op == "tos":
        r = B.to_schur_witt(_bw(args.a))
        return Result(r.to_json(), r.as_eta())
    raise InputError(f"unknown wbool operation {op!r}")


def cmd_wsbool(args) -> Result:
    op = args.op
    if op == "eval":
        v = B.eval_s(_sw(args.a), P.parse(args.b))
        return Result(v, str(v))
    a, b = _sw(args.a), _sw(args.b)
    r = B.add_s(a, b) if op == "add" else B.mul_s(a, b)
    return Result(r.to_json(), r.as_eta())


# ---------------------------------------------------------------------------
# ideals


def cmd_ideals(args) -> Result:
    window = _window(args, 6)
    if args.op == "enumerate":
        ideals = I.enumerate_ideals(window)
        return Result({"window": _window_json(window), "ideals": [i.to_json() for i in ideals]},
                      "\n".join(repr(i) for i in ideals) + f"\n{len(ideals)} ideals")
    if args.op == "isprime":
        if not args.generators:
            raise InputError("give the generators of the ideal")
        ideal = I.PartitionIdeal.generated_by([P.parse(g) for g in args.generators], window)
        basis = SCHUR if args.basis == "s" else MONOMIAL
        w = I.prime_witness(ideal, window, basis)
        payload = {"ideal": ideal.to_json(), "basis": basis, "prime": w is None}
        if w is None:
            return Result(payload, "prime")
        payload["witness"] = [list(w[0]), list(w[1])]
        return Result(payload, f"not prime: {P.fmt(w[0])} * {P.fmt(w[1])}")
    raise InputError(f"unknown ideals operation {args.op!r}")


# ---------------------------------------------------------------------------
# p-typical


def _ptyp_prime(args) -> int:
    """--p if given, else the prefix of the first operand, else 2."""
    if args.p is not None:
        return args.p
    for text in (args.a, args.b):
        if text and text.strip().startswith("p="):
            return T.PTypicalBoolWitt.parse(text).p
    return 2


def cmd_ptyp(args) -> Result:
    p = _ptyp_prime(args)
    op = args.op
    if op == "rel":
        ok = T.verify_relation(p, args.i, args.j)
        return Result(ok, "true" if ok else "false")
    if op in ("add", "mul"):
        if not (args.a and args.b):
            raise InputError(f"ptyp {op} needs two operands")
        a, b = T.PTypicalBoolWitt.parse(args.a, p), T.PTypicalBoolWitt.parse(args.b, p)
        if args.check:
            r = T.law_check_p_via_coproduct(a, b, op, p, args.k)
        else:
            r = T.add_p(a, b) if op == "add" else T.mul_p(a, b)
        return Result(r.to_json(), repr(r))
    if op == "trunc":
        k = args.k if args.k is not None else 2
        if args.a:
            t = T.TruncatedArray.decode(args.a)
            lifts = T.lifts(t, k, p)
            return Result({"array": t.encode(), "valid": t.is_valid(), "lifts_to": k,
                           "lifts": [u.encode() for u in lifts]},
                          f"{t.encode()} valid={t.is_valid()} lifts to T_{k}: {len(lifts)}"
                          + "".join(f"\n{u.encode()}" for u in lifts))
        arrays = T.enumerate_truncated(p, k)
        return Result([t.encode() for t in arrays], "\n".join(t.encode() for t in arrays))
    if op == "frombig":
        if not args.a:
            raise InputError("give a W(B) element")
        r = T.from_big_witt(_bw(args.a), p)
        return Result(r.to_json(), repr(r))
    raise InputError(f"unknown ptyp operation {op!r}")


# ---------------------------------------------------------------------------
# total positivity


def _series(args) -> TP.IntRationalSeries:
    g = TP.IntPolynomial.parse(args.g)
    h = TP.IntPolynomial.parse(args.h) if args.h else TP.IntPolynomial([1])
    return TP.IntRationalSeries(g, h)


def cmd_tp(args) -> Result:
    s = _series(args)
    op = args.op
    if op == "expand":
        a = TP.expand(s, args.terms if args.terms is not None else 10)
        return Result(a, ",".join(map(str, a)))
    if op == "minors":
        n = args.terms if args.terms is not None else TP.MAX_MINOR_INDEX
        v = TP.minor_check(TP.series_window(s, n, args.order))
        text = v.label() if v.passed else \
            f"fail rows={list(v.rows)} cols={list(v.cols)} det={v.value}"
        return Result(v.to_json(), text, 0)
    if op == "member":
        ok = TP.is_wsch_N_member(s)
        if not ok:
            return Result({"member": False}, "non-member")
        inv = TP.bool_invariant(s, _window(args, 10))
        return Result({"member": True, "invariant": inv.to_json()}, f"member {inv}")
    if op == "invariant":
        if args.monomial:
            inv = TP.bool_invariant_monomial(s, _window(args, 8))
        else:
            inv = TP.bool_invariant(s, _window(args, 10))
        return Result(inv.to_json(), repr(inv))
    if op == "extinct":
        kmax = args.kmax if args.kmax is not None else TP.extinction_bound(s)
        scan = TP.extinction_scan(s, kmax)
        return Result({"minima": scan, "bound": TP.extinction_bound(s)},
                      ",".join(map(str, scan)))
    if op == "classify":
        rep = TP.classify_series(s, args.order)
        return Result(rep.to_json(), rep.label)
    raise InputError(f"unknown tp operation {op!r}")


# ---------------------------------------------------------------------------
# countability


def cmd_count(args) -> Result:
    op = args.op
    if op == "homs":
        sizes = [int(x) for x in args.sizes.split(",")] if args.sizes else [_window(args, 4).max_size]
        ns = [int(x) for x in (args.n or "2,3").split(",")]
        rows = C.count_table(ns, sizes)
        text = "size,n,count\n" + "\n".join(f"{w},{n},{c}" for w, n, c in rows)
        return Result([{"size": w, "n": n, "count": c} for w, n, c in rows], text)
    if op == "ufamily":
        window = _window(args, 6)
        U = [P.parse(u) for u in (args.U or [])]
        f = C.u_family_hom(U, int(args.n or 3), window)
        v = C.verify_multiplicativity(f)
        return Result({"hom": f.to_json(), "multiplicativity": v.to_json()},
                      "pass" if v.passed else f"fail {v.to_json()['witness']}")
    if op == "force":
        window = _window(args, 6)
        z = _bw(args.z)
        boundary = {}
        if args.boundary:
            for k, v in json.loads(args.boundary).items():
                boundary[P.parse(k)] = int(v)
        res = C.forcing_closure(boundary, z, window)
        if res.hom is None:
            raise InputError(res.contradiction)
        vals = res.hom.to_json()["values"]
        reasons = res.reasons or {}
        text = "\n".join(f"{P.fmt(tuple(lam))} {v} ({reasons.get(tuple(lam), 'given')})" for lam, v in vals)
        return Result(res.hom.to_json(), text)
    raise InputError(f"unknown count operation {op!r}")


# ---------------------------------------------------------------------------
# suite


def cmd_suite(args) -> Result:
    if args.which != "acceptance":
        raise InputError("the only suite is 'acceptance'")
    numbers = [int(x) for x in args.only.split(",")] if args.only else [n for n, _, _ in A.CRITERIA]
    outcomes = [A.run_criterion(n) for n in numbers]
    ok = all(o.passed for o in outcomes)
    text = "\n".join(o.line() for o in outcomes) + f"\n{'all criteria pass' if ok else 'FAILURES'}"
    return Result([o.to_json() for o in outcomes], text, 0 if ok else 4)


# ---------------------------------------------------------------------------
# parser


def _common(defaults: bool) -> argparse.ArgumentParser:
    """Global flags; subparsers accept them too without overriding the top-level defaults."""
    sup = argparse.SUPPRESS
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--window-size", type=int, default=None if defaults else sup, help="largest partition size")
    p.add_argument("--max-part", type=int, default=None if defaults else sup)
    p.add_argument("--max-length", type=int, default=None if defaults else sup)
    p.add_argument("--nvars", type=int, default=None if defaults else sup, help="use finitely many variables")
    p.add_argument("--format", choices=("text", "json"), default="text" if defaults else sup)
    p.add_argument("--cache-dir", default=None if defaults else sup, help="on-disk memo cache")
    p.add_argument("--verbose", action="store_true", default=False if defaults else sup)
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wittlab", parents=[_common(True)],
                                     description="Symmetric functions and Witt vectors over semirings.")
    common = _common(False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.set_defaults(fn=fn)
        return sp

    sp = add("mprod", cmd_mprod, "product of two monomial symmetric functions")
    sp.add_argument("lam")
    sp.add_argument("mu")
    sp = add("sprod", cmd_sprod, "product of two Schur functions")
    sp.add_argument("lam")
    sp.add_argument("mu")
    sp = add("lr", cmd_lr, "Littlewood-Richardson coefficient c^nu_{lam,mu}")
    sp.add_argument("nu")
    sp.add_argument("lam")
    sp.add_argument("mu")
    sp = add("kostka", cmd_kostka, "Kostka number K_{lam,mu}")
    sp.add_argument("lam")
    sp.add_argument("mu")
    for name, op in (("coprod-add", "add"), ("coprod-mul", "mul")):
        sp = add(name, cmd_coprod(op), f"co-{'addition' if op == 'add' else 'multiplication'} of a basis element")
        sp.add_argument("lam")
        sp.add_argument("--basis", choices=("m", "s"), default="m")
    sp = add("pleth", cmd_pleth, "plethysm m_outer o m_inner")
    sp.add_argument("outer")
    sp.add_argument("inner")
    sp.add_argument("--degcap", type=int, default=None)

    sp = add("wbool", cmd_wbool, "W(B): eval, add, mul, leq, ghost, tos")
    sp.add_argument("op", choices=("eval", "add", "mul", "leq", "ghost", "tos"))
    sp.add_argument("a")
    sp.add_argument("b", nargs="?")
    sp.add_argument("--check", action="store_true", help="recompute from the coproduct")
    sp = add("wsbool", cmd_wsbool, "W^Sch(B): eval, add, mul")
    sp.add_argument("op", choices=("eval", "add", "mul"))
    sp.add_argument("a")
    sp.add_argument("b")

    sp = add("ideals", cmd_ideals, "partition ideals: enumerate, isprime")
    sp.add_argument("op", choices=("enumerate", "isprime"))
    sp.add_argument("generators", nargs="*")
    sp.add_argument("--basis", choices=("m", "s"), default="m")

    sp = add("ptyp", cmd_ptyp, "p-typical: rel, add, mul, trunc, frombig")
    sp.add_argument("op", choices=("rel", "add", "mul", "trunc", "frombig"))
    sp.add_argument("a", nargs="?")
    sp.add_argument("b", nargs="?")
    sp.add_argument("--p", type=int, default=None, help="prime (default: from the operands, else 2)")
    sp.add_argument("--i", type=int, default=0)
    sp.add_argument("--j", type=int, default=0)
    sp.add_argument("--k", type=int, default=None, help="triangle size")
    sp.add_argument("--check", action="store_true", help="recompute from the coproduct of d_{i,j}")

    sp = add("tp", cmd_tp, "rational series: expand, minors, member, invariant, extinct, classify")
    sp.add_argument("op", choices=("expand", "minors", "member", "invariant", "extinct", "classify"))
    sp.add_argument("--g", required=True)
    sp.add_argument("--h", default=None)
    sp.add_argument("--terms", type=int, default=None)
    sp.add_argument("--order", type=int, default=4, help="largest minor order")
    sp.add_argument("--kmax", type=int, default=None)
    sp.add_argument("--monomial", action="store_true")

    sp = add("count", cmd_count, "truncated semirings: homs, ufamily, force")
    sp.add_argument("op", choices=("homs", "ufamily", "force"))
    sp.add_argument("--n", default=None, help="homs: comma-separated list (default 2,3); ufamily: one value (default 3)")
    sp.add_argument("--sizes", default=None, help="comma-separated window sizes")
    sp.add_argument("--U", nargs="*", default=None)
    sp.add_argument("--z", default="(1,0)")
    sp.add_argument("--boundary", default=None, help='JSON object, e.g. {"[1]": 2}')

    sp = add("suite", cmd_suite, "run the acceptance battery")
    sp.add_argument("which", choices=("acceptance",))
    sp.add_argument("--only", default=None, help="comma-separated criterion numbers")
    return parser


def _provenance(argv: list[str], args) -> dict:
    return {"command": ["wittlab"] + argv, "version": __version__,
            "python": platform.python_version(),
            "window": {"window_size": args.window_size, "max_part": args.max_part,
                       "max_length": args.max_length, "nvars": args.nvars}}


def main(argv: Optional[list[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    memo.configure(args.cache_dir)
    try:
        result = args.fn(args)
    except WittlabError as exc:
        message = f"{type(exc).__name__}: {exc}"
        if args.format == "json":
            print(json.dumps({"error": type(exc).__name__, "message": str(exc)}, sort_keys=True))
        else:
            print(message, file=sys.stderr)
        return exc.exit_code
    if args.format == "json":
        out = {"payload": result.payload, "format": "json"}
        if args.verbose:
            out["provenance"] = _provenance(argv, args)
        print(json.dumps(out, sort_keys=True))
    else:
        print(result.text)
        if args.verbose:
            print("# " + json.dumps(_provenance(argv, args), sort_keys=True))
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
