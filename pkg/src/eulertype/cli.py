"""Command-line front end: ``eulertype {gen,check,sweep,oracle}``.

Exit codes: 0 when everything checked holds, 1 when a checked property or
comparison fails, 2 on usage or validation errors.
"""
from __future__ import annotations

import argparse
import shlex
import sys
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from . import analysis, oracle
from .families import FAMILY_TABLE, FamilySpec, canonical_kind, generate
from .polycore import Poly, as_scalar, format_poly, reverse
from .report import (
    dumps_csv,
    dumps_json,
    gamma_json,
    make_report,
    poly_json,
    property_json,
    rat,
    witness_json,
    write_output,
)
from .sweeps import CLAIM_GROUPS, ParamRange, SweepPlan, corollary_suite, run_sweep

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
PARAM_NAMES = ("a", "b", "c", "p", "q", "r", "k")

PROPERTY_ALIASES = {
    "unimodal": "unimodal",
    "log-concave": "log_concave",
    "logconcave": "log_concave",
    "spiral": "spiral",
    "alt-increasing": "alternatingly_increasing",
    "alternatingly-increasing": "alternatingly_increasing",
    "ratio": "ratio_monotone",
    "ratio-monotone": "ratio_monotone",
    "bigamma": "bi_gamma",
    "bi-gamma": "bi_gamma",
    "real-rooted": "real_rooted",
    "sturm": "real_rooted",
    "darroch": "darroch",
    "gamma": "gamma",
}


class UsageError(Exception):
    pass


# -- config ---------------------------------------------------------------------

def read_config(path: Optional[str]) -> Dict[str, str]:
    """Parse ``key = value`` lines; ``#`` starts a comment."""
    if not path:
        return {}
    out = {}
    try:
        with open(path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise UsageError(f"{path}:{lineno}: expected key=value")
                key, value = line.split("=", 1)
                out[key.strip().replace("-", "_")] = value.strip()
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from None
    return out


def _config_int(cfg, key, default):
    if key not in cfg:
        return default
    try:
        return int(cfg[key])
    except ValueError:
        raise UsageError(f"config {key} must be an integer") from None


# -- argument helpers -------------------------------------------------------

def parse_rational(text: str) -> Fraction:
    try:
        return as_scalar(text)
    except (ValueError, ZeroDivisionError, TypeError):
        raise UsageError(f"not an exact rational: {text!r}") from None


def parse_coeffs(text: str) -> Poly:
    parts = [t for t in text.replace(" ", "").split(",")]
    if not parts or any(not t for t in parts):
        raise UsageError(f"malformed coefficient list {text!r}")
    return Poly(parse_rational(t) for t in parts)


def parse_range(text: str) -> ParamRange:
    """``"v"``, ``"lo..hi"`` or ``"lo..hi:step"``."""
    try:
        if ".." not in text:
            return ParamRange.single(parse_rational(text))
        body, _, step = text.partition(":")
        lo, _, hi = body.partition("..")
        return ParamRange(parse_rational(lo), parse_rational(hi),
                          parse_rational(step) if step else Fraction(1))
    except ValueError as exc:
        raise UsageError(f"malformed range {text!r}: {exc}") from None


def family_spec_from_args(args) -> FamilySpec:
    try:
        kind = canonical_kind(args.family)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    needed = FAMILY_TABLE[kind].params
    params = {}
    for name in needed:
        raw = getattr(args, name, None)
        if raw is None:
            raise UsageError(f"family {kind} needs --{name}")
        params[name] = parse_rational(raw)
    extra = [n for n in PARAM_NAMES if n not in needed and getattr(args, n, None) is not None]
    if extra:
        raise UsageError(f"family {kind} does not take --{extra[0]}")
    try:
        return FamilySpec(kind, params)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _spec_inputs(spec: FamilySpec) -> Dict[str, str]:
    return {"family": spec.kind, **{k: rat(v) for k, v in sorted(spec.params.items())}}


def _spec_flags(spec: FamilySpec) -> str:
    return " ".join(f"--{k} {shlex.quote(rat(v))}" for k, v in sorted(spec.params.items()))


def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=("json", "csv", "text"), default=None,
                   help="output format (default text, or from --config)")
    p.add_argument("--out", default=None, help="output file (default stdout)")
    p.add_argument("--config", default=None, help="key=value file with defaults")


def _add_params(p: argparse.ArgumentParser):
    for name in PARAM_NAMES:
        p.add_argument(f"--{name}", default=None, help=f"rational parameter {name}")


def _require_integral(polys: Sequence[Poly]):
    if not all(p.is_integral() for p in polys):
        raise UsageError("csv output needs integer coefficients; use json or text")


# -- gen --------------------------------------------------------------------------

def cmd_gen(args, cfg) -> tuple:
    spec = family_spec_from_args(args)
    n = args.n if args.n is not None else _config_int(cfg, "n", None)
    if n is None:
        raise UsageError("gen needs --n")
    if n < 0:
        raise UsageError("--n must be nonnegative")
    cap = _config_int(cfg, "n_cap", None)
    if cap is not None and n > cap:
        raise UsageError(f"--n {n} exceeds configured n_cap {cap}")
    polys = generate(spec, n)
    inputs = {**_spec_inputs(spec), "n": n}
    fmt = args.format
    if fmt == "json":
        results = [{"n": i, "coefficients": poly_json(p), "text": format_poly(p)}
                   for i, p in enumerate(polys)]
        return dumps_json(make_report("gen", inputs, results, "pass")), EXIT_OK
    if fmt == "csv":
        _require_integral(polys)
        width = max(len(p) for p in polys)
        rows = [[i] + [str(p[j].numerator) for j in range(width)] for i, p in enumerate(polys)]
        return dumps_csv(["n"] + [f"x^{j}" for j in range(width)], rows), EXIT_OK
    lines = [f"{i}: {format_poly(p)}" for i, p in enumerate(polys)]
    return "\n".join(lines) + "\n", EXIT_OK


# -- check ------------------------------------------------------------------------

def _parse_props(text: str) -> List[str]:
    out = []
    for raw in text.split(","):
        raw = raw.strip().lower().replace("_", "-")
        if not raw:
            continue
        if raw not in PROPERTY_ALIASES:
            raise UsageError(f"unknown property {raw!r}; choose from {sorted(PROPERTY_ALIASES)}")
        out.append(PROPERTY_ALIASES[raw])
    if not out:
        raise UsageError("--props is empty")
    return out


def _darroch_result(p: Poly) -> Dict:
    rr = analysis.sturm_real_nonpositive(p)
    uni = analysis.unimodal(p)
    try:
        lo, hi = analysis.darroch_bounds(p)
    except ValueError as exc:
        return {"property": "darroch", "verdict": analysis.NOT_APPLICABLE, "witness": None,
                "reason": str(exc)}
    inside = uni.holds and all(lo <= m <= hi for m in uni.modes)
    verdict = analysis.HOLDS if inside else (analysis.FAILS if rr.holds else analysis.NOT_APPLICABLE)
    out = {"property": "darroch", "verdict": verdict, "witness": None,
           "bounds": [lo, hi], "modes": list(uni.modes or ()), "real_rooted": rr.verdict}
    if verdict == analysis.NOT_APPLICABLE:
        out["reason"] = "modes outside the bounds, but p is not real-rooted so no bound applies"
    return out


def _gamma_result(p: Poly) -> Dict:
    try:
        g = analysis.gamma_vector(p)
    except ValueError as exc:
        return {"property": "gamma", "verdict": analysis.NOT_APPLICABLE, "witness": None,
                "reason": str(exc)}
    verdict = analysis.HOLDS if g.is_nonnegative() else analysis.FAILS
    return {"property": "gamma", "verdict": verdict, "witness": None, "gamma": gamma_json(g)}


def run_checks(p: Poly, props: Sequence[str]) -> List[Dict]:
    results = []
    for prop in props:
        if prop == "darroch":
            results.append(_darroch_result(p))
        elif prop == "gamma":
            results.append(_gamma_result(p))
        else:
            results.append(property_json(analysis.PROPERTIES[prop](p)))
    return results


def cmd_check(args, cfg) -> tuple:
    props = _parse_props(args.props)
    if args.coeffs is not None:
        if args.family:
            raise UsageError("give either --coeffs or --family, not both")
        p = parse_coeffs(args.coeffs)
        source = {"coeffs": poly_json(p)}
        replay_src = f"--coeffs {','.join(poly_json(p))}"
    elif args.family:
        spec = family_spec_from_args(args)
        if args.n is None or args.n < 0:
            raise UsageError("--family needs a nonnegative --n")
        p = generate(spec, args.n)[args.n]
        if args.reciprocal:
            deg = args.n - 1 if spec.info.shifted and args.n > 0 else args.n
            p = reverse(p, deg)
        source = {**_spec_inputs(spec), "n": args.n, "reciprocal": bool(args.reciprocal)}
        replay_src = f"--family {spec.kind} {_spec_flags(spec)} --n {args.n}" + (
            " --reciprocal" if args.reciprocal else "")
    else:
        raise UsageError("check needs --coeffs or --family")
    results = run_checks(p, props)
    ok = all(r["verdict"] == analysis.HOLDS for r in results)
    for r in results:
        if r["verdict"] != analysis.HOLDS:
            r["replay"] = f"eulertype check {replay_src} --props {r['property']}"
    inputs = {**source, "props": props}
    payload = [{"coefficients": poly_json(p), "text": format_poly(p), "checks": results}]
    status = "pass" if ok else "fail"
    code = EXIT_OK if ok else EXIT_FAIL
    if args.format == "json":
        return dumps_json(make_report("check", inputs, payload, status)), code
    if args.format == "csv":
        rows = [[r["property"], r["verdict"], r.get("reason", ""),
                 "" if not r.get("witness") else f"{r['witness']['left']}>{r['witness']['right']}"]
                for r in results]
        return dumps_csv(["property", "verdict", "reason", "witness"], rows), code
    lines = [f"polynomial: {format_poly(p)}"]
    for r in results:
        line = f"{r['property']}: {r['verdict']}"
        if r.get("witness"):
            w = r["witness"]
            line += f" (witness {w['chain'] or 'link'} at {w['indices']}: {w['left']} > {w['right']})"
        if r.get("reason"):
            line += f" [{r['reason']}]"
        if "alpha" in r:
            line += f" alpha={r['alpha']['entries']} beta={r['beta']['entries']}"
        if "gamma" in r:
            line += f" gamma={r['gamma']['entries']}"
        if "bounds" in r:
            line += f" bounds={r['bounds']} modes={r['modes']}"
        lines.append(line)
    lines.append(f"status: {status}")
    return "\n".join(lines) + "\n", code


# -- sweep -------------------------------------------------------------------------

def _violation_json(v) -> Dict:
    prop_flag = {"bi_gamma": "bigamma", "ratio_monotone": "ratio", "real_rooted": "real-rooted",
                 "darroch_modes": "darroch", "gamma_paths_agree": "bigamma"}.get(v.property, v.property)
    replay = (f"eulertype check --family {v.family.kind} {_spec_flags(v.family)} --n {v.n}"
              + (" --reciprocal" if v.reciprocal else "") + f" --props {prop_flag}")
    return {
        "claim": v.claim,
        "family": v.family.kind,
        "params": {k: rat(x) for k, x in sorted(v.family.params.items())},
        "n": v.n,
        "reciprocal": v.reciprocal,
        "property": v.property,
        "witness": witness_json(v.witness),
        "reason": v.reason,
        "replay": replay,
    }


def cmd_sweep(args, cfg) -> tuple:
    claims = [c.strip() for c in args.assertion.split(",") if c.strip()]
    if not claims:
        raise UsageError("--assert is empty")
    workers = args.workers
    corollaries = [c for c in claims if c.replace("-", "_") == "corollaries"]
    rest = [c for c in claims if c.replace("-", "_") != "corollaries"]
    outcomes = []
    inputs: Dict = {"assert": claims}
    if rest:
        n_max = args.n_max if args.n_max is not None else _config_int(cfg, "n_max", None)
        if n_max is None:
            raise UsageError("sweep needs --n-max")
        try:
            kind = canonical_kind(args.family)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        ranges = {}
        for name in FAMILY_TABLE[kind].params:
            raw = getattr(args, name, None)
            if raw is None:
                raise UsageError(f"sweep over {kind} needs --{name} (value or lo..hi[:step])")
            ranges[name] = parse_range(raw)
        try:
            plan = SweepPlan(kind, ranges, n_max, tuple(rest))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        inputs.update({"family": kind, "n_max": n_max,
                       "ranges": {k: f"{rat(r.start)}..{rat(r.stop)}:{rat(r.step)}"
                                  for k, r in sorted(ranges.items())}})
        outcomes.append(("sweep", run_sweep(plan, workers)))
    if corollaries:
        outcomes.append(("corollaries", corollary_suite(workers)))
    results = []
    passed = True
    for label, oc in outcomes:
        passed = passed and oc.passed
        results.append({"campaign": label, "cells_checked": oc.cells_checked,
                        "violations": [_violation_json(v) for v in oc.violations]})
    status = "pass" if passed else "fail"
    code = EXIT_OK if passed else EXIT_FAIL
    if args.format == "json":
        return dumps_json(make_report("sweep", inputs, results, status)), code
    if args.format == "csv":
        rows = []
        for r in results:
            for v in r["violations"]:
                rows.append([r["campaign"], v["claim"], v["family"],
                             ";".join(f"{k}={x}" for k, x in v["params"].items()),
                             v["n"], v["property"], v["replay"]])
        return dumps_csv(["campaign", "claim", "family", "params", "n", "property", "replay"], rows), code
    lines = []
    for r in results:
        lines.append(f"{r['campaign']}: {r['cells_checked']} cells, {len(r['violations'])} violations")
        for v in r["violations"]:
            lines.append(f"  {v['claim']} {v['family']} {v['params']} n={v['n']} {v['property']}"
                         f" -> {v['replay']}")
    lines.append(f"status: {status}")
    return "\n".join(lines) + "\n", code


# -- oracle -------------------------------------------------------------------------

def _bipoly_rows(table) -> List[List[str]]:
    return [[str(v) for v in row] for row in table.coeffs]


def cmd_oracle(args, cfg) -> tuple:
    kind = args.kind
    n = args.n
    inputs: Dict = {"kind": kind, "compare": bool(args.compare)}
    comparisons: List[Dict] = []
    table_rows = None
    polys: List[Poly] = []
    result: Dict = {}
    try:
        if kind == "lemma2":
            if not args.values:
                raise UsageError("lemma2 needs --values a1,...,a6,lambda1,lambda2,lambda,mu")
            vals = [parse_rational(t) for t in args.values.split(",")]
            if len(vals) != 10:
                raise UsageError("lemma2 --values takes exactly 10 rationals")
            inputs["values"] = [rat(v) for v in vals]
            try:
                res = oracle.lemma2_check(vals[:6], *vals[6:])
            except oracle.Lemma2HypothesisError as exc:
                raise UsageError(str(exc)) from None
            result = {"mediant_bound": res.mediant_bound, "weighted": res.weighted,
                      "weighted_vs_last": res.weighted_vs_last,
                      "last_vs_difference": res.last_vs_difference, "conclusion": res.conclusion}
            comparisons.append({"what": "lemma conclusion and sub-inequalities", "equal": res.all_hold})
        else:
            if n is None:
                raise UsageError("oracle needs --n")
            inputs["n"] = n
            if kind == "qeulerian":
                table = oracle.qeulerian_bruteforce(n)
                table_rows = _bipoly_rows(table)
                result = {"table": table_rows, "index": "rows x-power, columns q-power"}
                if args.compare:
                    qs = [parse_rational(t) for t in (args.q or "1/2,1,2,3").split(",")]
                    for q in qs:
                        rec = generate(FamilySpec("q_eulerian", {"q": q}), n)[n]
                        comparisons.append({"what": f"A_{n}(x,{rat(q)})", "oracle": poly_json(table.substitute_q(q)),
                                            "recurrence": poly_json(rec), "equal": table.substitute_q(q) == rec})
            elif kind == "typeb":
                table = oracle.typeb_bruteforce(n)
                table_rows = _bipoly_rows(table)
                result = {"table": table_rows, "index": "rows x-power, columns q-power"}
                if args.compare:
                    qs = [parse_rational(t) for t in (args.q or "1,2,3").split(",")]
                    for q in qs:
                        rec = generate(FamilySpec("type_b_q", {"q": q}), n)[n]
                        comparisons.append({"what": f"B_{n}(x,{rat(q)})", "oracle": poly_json(table.substitute_q(q)),
                                            "recurrence": poly_json(rec), "equal": table.substitute_q(q) == rec})
            elif kind == "bigdesc":
                p = oracle.big_descent_bruteforce(n)
                polys = [p]
                result = {"coefficients": poly_json(p), "text": format_poly(p)}
                if args.compare:
                    rec = generate(FamilySpec("q_eulerian", {"q": 2}), n - 1)[n - 1]
                    comparisons.append({"what": f"A_{n - 1}(x,2)", "oracle": poly_json(p),
                                        "recurrence": poly_json(rec), "equal": p == rec})
            elif kind == "onek":
                k = parse_rational(args.k or "1")
                inputs["k"] = rat(k)
                p = oracle.one_over_k_bruteforce(k, n)
                polys = [p]
                result = {"coefficients": poly_json(p), "text": format_poly(p)}
                if args.compare:
                    rec = generate(FamilySpec("one_over_k", {"k": k}), n)[n]
                    comparisons.append({"what": f"A_{n}^({rat(k)})(x)", "oracle": poly_json(p),
                                        "recurrence": poly_json(rec), "equal": p == rec})
            elif kind == "egf":
                if not args.family:
                    raise UsageError("egf needs --family (q-eulerian, one-over-k or hcd) and its parameters")
                spec = family_spec_from_args(args)
                inputs.update(_spec_inputs(spec))
                try:
                    polys = oracle.egf_coefficients(spec, n)
                except ValueError as exc:
                    raise UsageError(str(exc)) from None
                result = {"coefficients": [poly_json(p) for p in polys]}
                if args.compare:
                    rec = generate(spec, n)
                    for i, (e, r) in enumerate(zip(polys, rec)):
                        comparisons.append({"what": f"index {i}", "oracle": poly_json(e),
                                            "recurrence": poly_json(r), "equal": e == r})
    except ValueError as exc:
        raise UsageError(str(exc)) from None

    ok = all(c["equal"] for c in comparisons)
    status = "pass" if ok else "fail"
    code = EXIT_OK if ok else EXIT_FAIL
    payload = [{"oracle": result, "comparisons": comparisons}]
    if args.format == "json":
        return dumps_json(make_report("oracle", inputs, payload, status)), code
    if args.format == "csv":
        if table_rows is not None:
            return dumps_csv(["x_power"] + [f"q^{j}" for j in range(len(table_rows[0]) if table_rows else 0)],
                             [[i] + row for i, row in enumerate(table_rows)]), code
        if polys:
            _require_integral(polys)
            width = max(len(p) for p in polys)
            return dumps_csv(["n"] + [f"x^{j}" for j in range(width)],
                             [[i] + [str(p[j].numerator) for j in range(width)]
                              for i, p in enumerate(polys)]), code
        return dumps_csv(["check", "holds"], [[k, v] for k, v in result.items()]), code
    lines = []
    if table_rows is not None:
        lines.append("x-power | coefficients by q-power (q^0, q^1, ...)")
        lines += [f"{i}: {' '.join(row)}" for i, row in enumerate(table_rows)]
    elif kind == "egf":
        lines += [f"{i}: {format_poly(p)}" for i, p in enumerate(polys)]
    elif kind == "lemma2":
        lines += [f"{k}: {v}" for k, v in result.items()]
    else:
        lines.append(result["text"])
    for c in comparisons:
        if "oracle" in c:
            lines.append(f"compare {c['what']}: {'equal' if c['equal'] else 'MISMATCH'}")
    lines.append(f"status: {status}")
    return "\n".join(lines) + "\n", code


# -- entry point ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eulertype",
        description="Generate Eulerian-type polynomials and certify their coefficient properties.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a family up to index n")
    g.add_argument("--family", required=True, help=", ".join(FAMILY_TABLE))
    _add_params(g)
    g.add_argument("--n", type=int, default=None)
    _add_common(g)

    c = sub.add_parser("check", help="check coefficient properties")
    c.add_argument("--coeffs", default=None, help="comma-separated rationals, constant term first")
    c.add_argument("--family", default=None)
    _add_params(c)
    c.add_argument("--n", type=int, default=None, help="family index to check")
    c.add_argument("--reciprocal", action="store_true", help="check the coefficient reversal")
    c.add_argument("--props", required=True,
                   help="comma list: unimodal, log-concave, spiral, alt-increasing, ratio, "
                        "bigamma, real-rooted, darroch, gamma")
    _add_common(c)

    s = sub.add_parser("sweep", help="run a verification campaign")
    s.add_argument("--assert", dest="assertion", required=True,
                   help="comma list of claims or groups: " + ", ".join(sorted(CLAIM_GROUPS))
                        + ", corollaries, or individual claim names")
    s.add_argument("--family", default="general_abc")
    for name in PARAM_NAMES:
        s.add_argument(f"--{name}", default=None, help=f"value or lo..hi[:step] for {name}")
    s.add_argument("--n-max", type=int, default=None)
    s.add_argument("--workers", type=int, default=None, help="worker processes (default $EULERTYPE_WORKERS or 1)")
    _add_common(s)

    o = sub.add_parser("oracle", help="run a brute-force or generating-function oracle")
    o.add_argument("--kind", required=True, choices=("qeulerian", "typeb", "bigdesc", "onek", "egf", "lemma2"))
    o.add_argument("--n", type=int, default=None)
    o.add_argument("--compare", action="store_true", help="compare with the recurrence; exit 1 on mismatch")
    o.add_argument("--family", default=None, help="family for --kind egf")
    _add_params(o)
    o.add_argument("--values", default=None, help="lemma2: a1,...,a6,lambda1,lambda2,lambda,mu")
    _add_common(o)
    return parser


COMMANDS = {"gen": cmd_gen, "check": cmd_check, "sweep": cmd_sweep, "oracle": cmd_oracle}


def main(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_USAGE
    try:
        cfg = read_config(args.config)
        if args.format is None:
            args.format = cfg.get("format", "text")
            if args.format not in ("json", "csv", "text"):
                raise UsageError(f"config format must be json, csv or text, not {args.format!r}")
        if getattr(args, "workers", None) is None and "workers" in cfg:
            args.workers = _config_int(cfg, "workers", None)
        text, code = COMMANDS[args.command](args, cfg)
    except UsageError as exc:
        stderr.write(f"eulertype {args.command}: error: {exc}\n")
        return EXIT_USAGE
    write_output(text, args.out, stdout)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
