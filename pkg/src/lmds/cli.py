"""Command-line front end.  Every output line is ``key=value``.

Exit codes: 0 success, 2 bad input, 3 enumeration cap exceeded,
4 a requested check failed.
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import Optional

from . import codecore as cc
from .bounds import (
    characterization,
    griesmer,
    lmds_distribution,
    lmds_dual_distribution,
    maxlen_bounds,
    maxlen_shift,
    minweight_bounds,
)
from .ckfamily import build_ck, ck_enumerators, ck_lambda, ck_verdict, zero_sum_verdict
from .designs import check_design, complementary_params, supports_at_weight
from .errors import CapExceededError, ConsistencyError, InputError
from .gf import arith, parse_field
from .lrc import cm_check, cm_label, locality, singleton_like
from .propagate import augment, augment_distance, expurgate, extend, fsd_check, uuv

EXIT_OK, EXIT_INPUT, EXIT_CAP, EXIT_CHECK = 0, 2, 3, 4


class Report:
    def __init__(self, out=None):
        self.out = out or sys.stdout
        self.failed = False

    def kv(self, key: str, value) -> None:
        if isinstance(value, bool):
            value = "true" if value else "false"
        elif isinstance(value, (list, tuple)):
            value = ",".join(str(v) for v in value)
        print(f"{key}={value}", file=self.out)

    def check(self, name: str, ok: bool) -> None:
        self.kv(f"check.{name}", "pass" if ok else "fail")
        if not ok:
            self.failed = True


def _field(args):
    return parse_field(args.field, getattr(args, "modulus", None))


def _dist_fields(rep: Report, prefix: str, dist) -> None:
    rep.kv(f"{prefix}", list(dist.counts))
    rep.kv(f"{prefix}.poly", dist.polynomial())
    rep.kv(f"{prefix}.source", dist.source)


def _write(code: cc.LinearCode, path: Optional[str], rep: Report) -> None:
    if path:
        cc.write_code(code, path)
        rep.kv("written", path)


# -- subcommands ---------------------------------------------------------------


def cmd_field(args, rep: Report) -> None:
    F = _field(args)
    rep.kv("field", F.name)
    rep.kv("p", F.p)
    rep.kv("h", F.h)
    rep.kv("q", F.q)
    rep.kv("modulus", F.modulus_str())
    rep.kv("alpha", F.alpha)
    rep.kv("alpha.order", F.order)
    if args.op:
        a = F.parse_element(args.a) if args.a is not None else 0
        b = F.parse_element(args.b) if args.b is not None else 0
        rep.kv("op", args.op)
        rep.kv("result", arith(F, a, b, args.op))


def cmd_code_analyze(args, rep: Report) -> None:
    C = cc.read_code(args.code)
    A, B = cc.distributions(C, args.cap, args.threads)
    r = cc.classify(C, args.cap, args.threads)
    rep.kv("field", C.field.name)
    rep.kv("n", C.n)
    rep.kv("k", C.k)
    rep.kv("d", r.d)
    rep.kv("dual.d", r.dual_d)
    _dist_fields(rep, "A", A)
    _dist_fields(rep, "Adual", B)
    rep.kv("defect", r.defect)
    rep.kv("dual.defect", r.dual_defect)
    rep.kv("verdict", r.verdict)
    rep.kv("sufficiency.forced", r.forced_by_sufficiency)
    rep.kv("fsd", fsd_check(C, args.cap))
    if args.ghw:
        g = cc.ghw_profile(C)
        rep.kv("ghw", list(g.weights))


def cmd_code_dual(args, rep: Report) -> None:
    C = cc.read_code(args.code)
    D = cc.galois_dual(C, args.e)
    rep.kv("n", D.n)
    rep.kv("k", D.k)
    rep.kv("e", args.e)
    if args.out:
        _write(D, args.out, rep)
    else:
        for i, row in enumerate(D.rows()):
            rep.kv(f"row{i}", row)


def cmd_ck_build(args, rep: Report) -> None:
    F = _field(args)
    ck = build_ck(F, args.k)
    rep.kv("field", F.name)
    rep.kv("n", ck.n)
    rep.kv("k", ck.k)
    rep.kv("exponents", list(ck.exponents))
    if args.out:
        _write(ck.code, args.out, rep)
    else:
        for i, row in enumerate(ck.code.rows()):
            rep.kv(f"row{i}", row)


def cmd_ck_verify(args, rep: Report) -> None:
    F = _field(args)
    q, k = F.q, args.k
    cap = max(args.cap, q ** min(k, q - 1 - k)) if args.full_enum else args.cap
    ck = build_ck(F, k)
    r = ck_verdict(ck, cap, args.threads)
    rep.kv("field", F.name)
    rep.kv("params", f"[{r.n},{r.k},{r.d}]_{q}")
    rep.kv("verdict", r.verdict)
    rep.kv("zero_sum.verdict", zero_sum_verdict(F, k))
    rep.check("verdict.agree", True)
    if 3 <= k <= q - 4:
        lam1, lam2 = ck_lambda(F, k)
        rep.kv("lambda1", lam1)
        rep.kv("lambda2", lam2)
        d1 = check_design(supports_at_weight(cc.dual(ck.code), k, cap).blocks, q - 1, 2)
        d2 = check_design(supports_at_weight(ck.code, q - k - 1, cap).blocks, q - 1, 2)
        rep.kv("design", d2.name if d2 else "none")
        rep.kv("design.dual", d1.name if d1 else "none")
        rep.check("design.primal", d2 is not None and d2.lam == lam2)
        rep.check("design.dual", d1 is not None and d1.lam == lam1)
        A, B = cc.distributions(ck.code, cap)
        EA, EB = ck_enumerators(F, k)
        rep.kv("enumerator", A.polynomial())
        rep.kv("enumerator.dual", B.polynomial())
        rep.check("enumerator.closed_form", A.counts == EA.counts and B.counts == EB.counts)
        rep.check("verdict.1-MDS", r.verdict == "1-MDS")
    else:
        rep.check("verdict.MDS", r.verdict == "MDS")


def cmd_design_check(args, rep: Report) -> None:
    C = cc.read_code(args.code)
    bm = supports_at_weight(C, args.weight, args.cap)
    A = cc.weight_distribution(C, args.cap)
    rep.kv("n", C.n)
    rep.kv("w", args.weight)
    rep.kv("t", args.t)
    rep.kv("blocks", len(bm))
    rep.kv("blocks.distinct", bm.distinct)
    des = check_design(bm.blocks, C.n, args.t)
    if des is None:
        rep.kv("design", "none")
        rep.check("design", False)
        return
    rep.kv("design", des.name)
    rep.kv("lambda", des.lam)
    rep.kv("b", des.b)
    rep.check("eq5.blocks", des.b * (C.q - 1) == A[args.weight])
    lam_c = complementary_params(des.t, des.n, des.w, des.lam)
    rep.kv("lambda.complement", lam_c)
    comp = check_design([tuple(sorted(set(range(1, C.n + 1)) - set(b))) for b in des.blocks], C.n, args.t) \
        if des.w < C.n else None
    rep.check("eq6.complement", comp is not None and comp.lam == lam_c)


def cmd_lrc_report(args, rep: Report) -> None:
    C = cc.read_code(args.code)
    L = locality(C, args.cap)
    rep.kv("params", f"({L.n},{L.k},{L.d},{L.q};{L.r})")
    rep.kv("r", L.r)
    rep.kv("per_coord", list(L.per_coord))
    s = singleton_like(L.n, L.k, L.d, L.r)
    c = cm_check(L.n, L.k, L.d, L.q, L.r)
    rep.kv("singleton_like.bound", f"{L.n}-{L.k}-ceil({L.k}/{L.r})+2={s.bound}")
    rep.kv("singleton_like.status", s.status)
    rep.kv("d_optimal", L.d_optimal)
    rep.kv("cm.bound", c.bound)
    rep.kv("cm.status", cm_label(c))
    rep.kv("k_optimal", L.k_optimal)


def _outcome(o, rep: Report) -> None:
    r = o.observed
    rep.kv("construction", o.construction)
    rep.kv("params", f"[{r.n},{r.k},{r.d}]_{r.q}")
    rep.kv("dual.d", r.dual_d)
    rep.kv("verdict", r.verdict)
    for p in o.predictions:
        rep.kv(f"predicted.{p.rule}", p.verdict or "-")
    for name, ok in sorted(o.checks.items()):
        rep.check(name, ok)


def cmd_prop(args, rep: Report) -> None:
    if args.rule == "uuv":
        if not (args.c1 and args.c2):
            raise InputError("uuv needs --c1 and --c2")
        o = uuv(cc.read_code(args.c1), cc.read_code(args.c2), args.cap)
        _outcome(o, rep)
        rep.kv("fsd", fsd_check(o.output, args.cap))
        _write(o.output, args.out, rep)
        return
    if not args.code:
        raise InputError(f"{args.rule} needs --code")
    C = cc.read_code(args.code)
    if args.rule == "augment":
        X = augment(C)
        r = cc.classify(X, args.cap) if X.k < X.n else None
        rep.kv("construction", "augment")
        rep.kv("params", f"[{X.n},{X.k},{cc.minimum_distance(X, args.cap)}]_{X.q}")
        rep.check("distance", cc.minimum_distance(X, args.cap) == augment_distance(C, args.cap))
        if r:
            rep.kv("verdict", r.verdict)
        _write(X, args.out, rep)
        return
    o = extend(C, args.cap) if args.rule == "extend" else expurgate(C, args.cap)
    _outcome(o, rep)
    _write(o.output, args.out, rep)


def _parse_set(F, text: Optional[str]):
    if not text:
        return set()
    return {F.parse_element(t) for t in text.split(",") if t.strip()}


def cmd_subsetsum(args, rep: Report) -> None:
    from .subsetsum import count_brute, count_closed

    F = _field(args)
    b = F.parse_element(args.b)
    excl = _parse_set(F, args.exclude)
    rep.kv("field", F.name)
    rep.kv("r", args.r)
    rep.kv("b", b)
    if excl - {0}:
        rep.kv("excluded", sorted(excl))
        rep.kv("count.brute", count_brute(F, args.r, b, excl))
        return
    closed = count_closed(F, args.r, b)
    rep.kv("count.closed", closed)
    if args.brute:
        brute = count_brute(F, args.r, b)
        rep.kv("count.brute", brute)
        rep.check("closed.eq.brute", closed == brute)


def cmd_bounds(args, rep: Report) -> None:
    what = args.what
    if what == "maxlen":
        m = maxlen_bounds(args.k, args.q, args.ell, args.base)
        for name in ("item3", "item5", "binary"):
            v = getattr(m, name)
            rep.kv(f"upper.{name}", "n/a" if v is None else v)
        rep.kv("upper", "n/a" if m.upper is None else m.upper)
        rep.kv("tightest", m.tightest or "n/a")
        rep.kv("lower_chain", m.lower_chain)
        rep.kv("lower_chain.base", f"{m.lower_base} ({m.lower_base_source})")
        if args.n is not None:
            rep.kv("excluded", m.excludes(args.n))
        if args.shift:
            s = maxlen_shift(args.k, args.q, args.ell, args.shift)
            rep.kv("shift", s.statement)
            rep.kv("shift.status", s.status)
        return
    if what == "minweight":
        mb = minweight_bounds(args.n, args.k, args.q, args.ell)
        rep.kv("boundA", mb.bound_A)
        rep.kv("boundAdual", mb.bound_Adual)
        rep.kv("tvA", mb.tv_A)
        rep.kv("tvAdual", mb.tv_Adual)
        rep.kv("improvesA", mb.improves_A)
        rep.kv("improvesAdual", mb.improves_Adual)
        return
    if what == "griesmer":
        rep.kv("griesmer", griesmer(args.k, args.d, args.q))
        return
    if what == "wdist":
        if not args.boundary and not args.dual_boundary:
            raise InputError("wdist needs --boundary and/or --dual-boundary")
        if args.boundary:
            vals = [int(x) for x in args.boundary.split(",")]
            _dist_fields(rep, "A", lmds_distribution(args.n, args.k, args.q, args.ell, vals))
        if args.dual_boundary:
            vals = [int(x) for x in args.dual_boundary.split(",")]
            _dist_fields(rep, "Adual", lmds_dual_distribution(args.n, args.k, args.q, args.ell, vals))
        return
    # check-code
    if not args.code:
        raise InputError("check-code needs --code")
    C = cc.read_code(args.code)
    ch = characterization(C, args.ell, args.cap)
    rep.kv("n", ch.n)
    rep.kv("k", ch.k)
    rep.kv("d", ch.d)
    rep.kv("dual.d", ch.dual_d)
    rep.kv("hypotheses", ch.hypotheses)
    rep.kv("distance_sum", ch.sum_condition)
    rep.kv("lmds", ch.is_lmds)
    rep.kv("status", ch.status)
    rep.check("characterization", ch.status != "counterexample")


def cmd_reproduce(args, rep: Report) -> None:
    from .reproduce import run_all

    results = run_all()
    for r in results:
        rep.kv(f"criterion{r.number}", "pass" if r.passed else "fail")
        rep.kv(f"criterion{r.number}.title", r.title)
        rep.kv(f"criterion{r.number}.seconds", f"{r.seconds:.2f}" if not args.no_ts else "-")
        for i, f in enumerate(r.failures[:5]):
            rep.kv(f"criterion{r.number}.failure{i}", f)
        for i, nte in enumerate(r.notes):
            rep.kv(f"criterion{r.number}.note{i}", nte)
        if not r.passed:
            rep.failed = True
    rep.kv("summary", f"{sum(r.passed for r in results)}/{len(results)} passed")


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=cc.DEFAULT_CAP, help="enumeration cap in codewords")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--no-ts", action="store_true", help="omit the timestamp line")

    ap = argparse.ArgumentParser(prog="lmds", description="l-MDS code toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field", parents=[common], help="field parameters and arithmetic")
    p.add_argument("--field", required=True)
    p.add_argument("--modulus")
    p.add_argument("--op", choices=["add", "sub", "mul", "div", "inv", "pow"])
    p.add_argument("--a")
    p.add_argument("--b")
    p.set_defaults(func=cmd_field)

    p = sub.add_parser("code", help="analyze codes")
    csub = p.add_subparsers(dest="action", required=True)
    a = csub.add_parser("analyze", parents=[common])
    a.add_argument("--code", required=True)
    a.add_argument("--ghw", action="store_true")
    a.set_defaults(func=cmd_code_analyze)
    a = csub.add_parser("dual", parents=[common])
    a.add_argument("--code", required=True)
    a.add_argument("--e", type=int, default=0, help="Galois exponent")
    a.add_argument("--out")
    a.set_defaults(func=cmd_code_dual)

    p = sub.add_parser("ck", help="the C_k evaluation-code family")
    csub = p.add_subparsers(dest="action", required=True)
    for name, fn in (("build", cmd_ck_build), ("verify", cmd_ck_verify)):
        a = csub.add_parser(name, parents=[common])
        a.add_argument("--field", required=True)
        a.add_argument("--modulus")
        a.add_argument("--k", type=int, required=True)
        if name == "build":
            a.add_argument("--out")
        else:
            a.add_argument("--full-enum", action="store_true", help="lift the cap for this family")
        a.set_defaults(func=fn)

    p = sub.add_parser("design", help="support designs")
    csub = p.add_subparsers(dest="action", required=True)
    a = csub.add_parser("check", parents=[common])
    a.add_argument("--code", required=True)
    a.add_argument("--weight", type=int, required=True)
    a.add_argument("--t", type=int, default=2)
    a.set_defaults(func=cmd_design_check)

    p = sub.add_parser("lrc", help="locality")
    csub = p.add_subparsers(dest="action", required=True)
    a = csub.add_parser("report", parents=[common])
    a.add_argument("--code", required=True)
    a.set_defaults(func=cmd_lrc_report)

    p = sub.add_parser("prop", help="propagation rules")
    csub = p.add_subparsers(dest="rule", required=True)
    for name in ("extend", "augment", "expurgate", "uuv"):
        a = csub.add_parser(name, parents=[common])
        if name == "uuv":
            a.add_argument("--c1")
            a.add_argument("--c2")
        else:
            a.add_argument("--code")
        a.add_argument("--out")
        a.set_defaults(func=cmd_prop)

    p = sub.add_parser("subsetsum", parents=[common], help="subset-sum counts")
    p.add_argument("--field", required=True)
    p.add_argument("--modulus")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--b", default="0")
    p.add_argument("--exclude")
    p.add_argument("--brute", action="store_true")
    p.set_defaults(func=cmd_subsetsum)

    p = sub.add_parser("bounds", help="bounds and closed forms")
    csub = p.add_subparsers(dest="what", required=True)
    specs = {
        "maxlen": ("k", "q", "ell"),
        "minweight": ("n", "k", "q", "ell"),
        "wdist": ("n", "k", "q", "ell"),
        "griesmer": ("k", "d", "q"),
        "check-code": ("ell",),
    }
    for name, req in specs.items():
        a = csub.add_parser(name, parents=[common])
        for flag in ("n", "k", "q", "ell", "d"):
            a.add_argument(f"--{flag}", type=int, required=flag in req)
        if name == "maxlen":
            a.add_argument("--base", type=int, help="known MDS maximum length for the lower chain")
            a.add_argument("--shift", type=int)
        if name == "wdist":
            a.add_argument("--boundary")
            a.add_argument("--dual-boundary")
        if name == "check-code":
            a.add_argument("--code", required=True)
        a.set_defaults(func=cmd_bounds)

    p = sub.add_parser("reproduce", parents=[common], help="run the full reference suite")
    p.set_defaults(func=cmd_reproduce)
    return ap


def main(argv=None, out=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    rep = Report(out)
    try:
        if not args.no_ts:
            rep.kv("timestamp", time.strftime("%Y-%m-%dT%H:%M:%S"))
        args.func(args, rep)
    except CapExceededError as exc:
        rep.kv("error", str(exc))
        return EXIT_CAP
    except ConsistencyError as exc:
        rep.kv("error", str(exc))
        return EXIT_CHECK
    except (InputError, ZeroDivisionError) as exc:
        rep.kv("error", str(exc))
        return EXIT_INPUT
    return EXIT_CHECK if rep.failed else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
