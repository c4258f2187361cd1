"""Command-line front end.

Exit codes: 0 success, 1 a theorem-type check found violations, 2 usage or
parse error.  Conjecture probes always exit 0; their violations are findings.
The default ``--format`` can be set with the MARY_FORMAT environment variable.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional

from . import alpha as alpha_mod
from . import hbeta, series, verify
from .mseq import MSequence, SequenceRangeError, SequenceSpecError, parse_sequence
from .partitions import OrderBudgetError, count_pm, pm_series, shifted_series

FORMATS = ("text", "json", "csv")


class UsageError(Exception):
    pass


def _ints(text: str) -> List[int]:
    if text.strip() == "":
        return []
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _seq(text: str) -> MSequence:
    try:
        return parse_sequence(text)
    except (SequenceSpecError, ValueError) as e:
        raise argparse.ArgumentTypeError(f"bad sequence spec {text!r}: {e}") from None


def _series_out(f: series.TruncatedSeries, fmt: str, meta: dict) -> str:
    if fmt == "json":
        return json.dumps({**meta, "order": f.order, "coeffs": list(f.coeffs)}, indent=2) + "\n"
    if fmt == "csv":
        return "n,coeff\n" + "".join(f"{n},{a}\n" for n, a in enumerate(f.coeffs))
    return series.dumps(f)


def _report_out(rep, fmt: str) -> str:
    if fmt == "json":
        return rep.to_json() + "\n"
    if fmt == "csv":
        return rep.to_csv()
    return rep.to_text() + "\n"


def cmd_count(a) -> tuple:
    value = count_pm(a.seq, a.n)
    if a.format == "json":
        return json.dumps({"seq": str(a.seq), "n": a.n, "value": value}) + "\n", 0
    if a.format == "csv":
        return f"n,value\n{a.n},{value}\n", 0
    return f"{value}\n", 0


def cmd_series(a) -> tuple:
    if a.r:
        f = shifted_series(a.seq, a.r, a.order)
    else:
        f = pm_series(a.seq, a.order)
    return _series_out(f, a.format, {"seq": str(a.seq), "r": a.r}), 0


def cmd_alpha(a) -> tuple:
    rs = range(1, a.r + 1) if a.all else [a.r]
    tables = [alpha_mod.alpha_table(a.m, r) for r in rs]
    if a.format == "json":
        return json.dumps([{"m": t.m, "r": t.r, "values": list(t.values)} for t in tables], indent=2) + "\n", 0
    if a.format == "csv":
        return alpha_mod.alpha_csv(tables), 0
    return "".join(f"alpha_{{{t.m},{t.r}}} = {list(t.values)}\n" for t in tables), 0


def cmd_beta(a) -> tuple:
    bm = hbeta.beta_map(a.ms)
    if a.format == "csv":
        rows = "".join(f"\"{','.join(map(str, T))}\",{v}\n" for T, v in bm.items())
        return "tuple,value\n" + rows, 0
    if a.format == "text":
        return "".join(f"beta{T} = {v}\n" for T, v in bm.items()), 0
    return bm.to_json() + "\n", 0


def cmd_hseries(a) -> tuple:
    hs = hbeta.build_h(a.ms, a.order)
    return _series_out(hs.series, a.format, {"ms": list(a.ms), "inflation": hs.inflation}), 0


def cmd_verify_theorem(a) -> tuple:
    rep = verify.verify_main_theorem(a.seq, a.r, a.n_max)
    return _report_out(rep, a.format), 0 if rep.passed else 1


def cmd_verify_identity(a) -> tuple:
    res = verify.verify_identity(a.seq, a.r, a.order)
    d = {"check": "identity", "params": {"seq": str(a.seq), "r": a.r, "order": a.order}, **res.to_dict()}
    if a.format == "json":
        out = json.dumps(d, indent=2) + "\n"
    elif a.format == "csv":
        out = "check,r,order,equal,direct_equal,verdict\n" + f"identity,{a.r},{res.order},{res.equal},{res.direct_equal},{d['verdict']}\n"
    else:
        out = f"identity: {d['verdict']} (order {res.order})\n"
    return out, 0 if res.passed else 1


def cmd_check_conjecture(a) -> tuple:
    if a.mode == "factorial":
        rep = verify.check_factorial_conjecture(a.r, a.eps, a.c, a.n_max, a.indexing)
    else:
        params = verify.ConjectureParams(a.seq, a.r, tuple(a.eps), a.c, a.indexing)
        rep = verify.check_conjecture_general(params, a.n_max)
    return _report_out(rep, a.format), 0


def cmd_counterexample(a) -> tuple:
    rep = verify.reproduce_counterexample(a.n if a.n else verify.COUNTEREXAMPLE_N)
    return _report_out(rep, a.format), 0


def cmd_classical(a) -> tuple:
    rep = verify.verify_classical_mary(a.m, a.r, a.eps, a.n_max, a.sigma_indexing)
    return _report_out(rep, a.format), 0 if rep.passed else 1


def cmd_churchhouse(a) -> tuple:
    rep = verify.verify_churchhouse(a.k, a.n_max, a.variant)
    return _report_out(rep, a.format), 0 if rep.passed else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=os.environ.get("MARY_FORMAT", "text"))
    common.add_argument("--out", help="write output to this file instead of stdout")

    p = argparse.ArgumentParser(prog="mary", description="M-ary partition counting and congruence checks.")
    sub = p.add_subparsers(dest="verb", required=True, metavar="VERB")

    def verb(name, fn, help):
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.set_defaults(fn=fn)
        return sp

    seq_help = "sequence spec: const:m[,len] | fact | list:a,b,c[,tail=const|succ]"

    sp = verb("count", cmd_count, "p_M(n)")
    sp.add_argument("--seq", type=_seq, required=True, help=seq_help)
    sp.add_argument("--n", type=int, required=True)

    sp = verb("series", cmd_series, "F_M(q), or U_{m_r}..U_{m_1}(q F_M) with --r")
    sp.add_argument("--seq", type=_seq, required=True, help=seq_help)
    sp.add_argument("--order", type=int, required=True)
    sp.add_argument("--r", type=int, default=0)

    sp = verb("alpha", cmd_alpha, "alpha_{m,r}(i) table")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--all", action="store_true", help="emit rows 1..r")

    sp = verb("beta", cmd_beta, "canonical beta coefficients for (m_1..m_r)")
    sp.add_argument("--ms", type=_ints, required=True)

    sp = verb("hseries", cmd_hseries, "H_(m_1..m_r) series")
    sp.add_argument("--ms", type=_ints, required=True)
    sp.add_argument("--order", type=int, required=True)

    sp = verb("verify-theorem", cmd_verify_theorem, "main congruence for n = 1..n-max")
    sp.add_argument("--seq", type=_seq, required=True, help=seq_help)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--n-max", type=int, default=50)

    sp = verb("verify-identity", cmd_verify_identity, "shifted generating function = H * F_r")
    sp.add_argument("--seq", type=_seq, required=True, help=seq_help)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--order", type=int, default=25)

    sp = verb("check-conjecture", cmd_check_conjecture, "probe the conjectured congruences (findings, exit 0)")
    sp.add_argument("--mode", choices=("general", "factorial"), default="general")
    sp.add_argument("--seq", type=_seq, default=MSequence.factorial(), help=seq_help)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--eps", type=_ints, default=[])
    sp.add_argument("--c", type=int, default=None)
    sp.add_argument("--indexing", choices=verify.INDEXINGS, default="aligned")
    sp.add_argument("--n-max", type=int, default=50)

    sp = verb("counterexample", cmd_counterexample, "p_M(120 n - 26) mod 20 with factorial parts")
    sp.add_argument("--n", type=_ints, default=None, help="comma-separated n (default: the six reported values)")

    sp = verb("classical", cmd_classical, "b_m(m^(r+1) n - sigma - m) = 0 mod m^r/c_r")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--eps", type=_ints, default=[])
    sp.add_argument("--n-max", type=int, default=50)
    sp.add_argument("--sigma-indexing", choices=verify.SIGMA_INDEXINGS, default="printed")

    sp = verb("churchhouse", cmd_churchhouse, "binary-partition supercongruences")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--n-max", type=int, default=100)
    sp.add_argument("--variant", choices=verify.CHURCHHOUSE_VARIANTS, default="printed")
    return p


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    a = parser.parse_args(argv)
    if getattr(a, "c", "absent") is None:
        a.c = 1 if a.mode == "factorial" else 0
    try:
        out, code = a.fn(a)
    except (ValueError, SequenceRangeError, OrderBudgetError) as e:
        print(f"mary {a.verb}: error: {e}", file=sys.stderr)
        return 2
    if a.out:
        with open(a.out, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
