"""Batch command-line front end.

Every invocation reads one JSON job and writes one JSON result::

    carlitz relations --in job.json --out result.json [--seed S] [--precision N]

Without ``--in``/``--out`` the job is read from stdin and the result goes to
stdout.  Exit codes: 0 on success, 2 when the input is invalid or outside the
mathematical domain, 1 on internal errors.  Failures still produce a result
document carrying an ``error`` object.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from importlib import resources

import jsonschema

from . import __version__
from .criteria import check_algindep_hypotheses, check_inf_criterion, check_valpha_criterion
from .exprparse import ParseError, format_value, parse_ratfunc, parse_tpoly
from .ffcore import FACTOR_SEED, GF, INF, FieldError, FieldSpec, FPoly, RatFunc, factor_seed, format_const
from .places import INFINITY, Place, ord_at
from .relsolve import RelationProblem, relation_generators
from .series import (
    DEFAULT_PRECISION,
    Completion,
    LaurentSeries,
    cpl_inf,
    cpl_v,
    log_point,
    verify_relation,
)
from .tensor import DomainError, TensorPoint, act, as_fq_poly, in_log_domain

COMMANDS = ("relations", "check-inf", "check-v", "eval-cpl", "eval-log", "verify", "act")


class JobError(ValueError):
    """The job document is malformed."""


def _load_schema(name: str) -> dict:
    return json.loads(resources.files("carlitz").joinpath("schemas", name).read_text())


# ---------------------------------------------------------------------------
# conversions between JSON and library objects
# ---------------------------------------------------------------------------


def _spec(job) -> FieldSpec:
    f = job["field"]
    return FieldSpec(f["p"], f.get("e", 1), f.get("m", 1))


def _field_header(spec: FieldSpec) -> dict:
    """Describes the constants: ``g`` is a primitive element of F_{q^m}."""
    big = spec.big
    head = {"p": spec.p, "e": spec.e, "m": spec.m, "q": spec.q, "generator": "g"}
    if big.k == 1:
        head["g"] = str(big.gen)
    else:
        # F_{q^m} = F_p[X]/(modulus) and g is the class of X
        head["g"] = "X"
        head["modulus"] = FPoly(GF(spec.p), big.modulus).to_str(var="X")
    return head


def _ratfunc(spec, text, what) -> RatFunc:
    try:
        return parse_ratfunc(spec, text)
    except ParseError as exc:
        raise JobError(f"{what}: {exc}") from exc
    except ZeroDivisionError as exc:
        raise JobError(f"{what}: division by zero") from exc


def _tpoly(spec, text, what):
    try:
        return parse_tpoly(spec, text)
    except ParseError as exc:
        raise JobError(f"{what}: {exc}") from exc
    except ZeroDivisionError as exc:
        raise JobError(f"{what}: division by zero") from exc


def _point(spec, coords, n, what) -> TensorPoint:
    if n is not None and len(coords) != n:
        raise JobError(f"{what}: expected {n} coordinates, got {len(coords)}")
    return TensorPoint(spec, tuple(_ratfunc(spec, c, f"{what}[{i}]") for i, c in enumerate(coords)))


def _place(spec, text) -> Place:
    if text == "inf":
        return INFINITY
    f = _ratfunc(spec, text, "place")
    if not f.is_poly() or f.num.deg < 1:
        raise JobError("place: expected 'inf' or a monic irreducible polynomial in x")
    try:
        return Place(f.num)
    except ValueError as exc:
        raise JobError(f"place: {exc}") from exc


def _series(s: LaurentSeries) -> dict:
    val, digits, prec = s.window()
    F = s.F
    return {
        "valuation": None if val == INF else val,
        "digits": [format_const(F, d) for d in digits],
        "precision": prec,
    }


def _val(v):
    return None if v == INF else v


def _fq_poly_str(a: FPoly) -> str:
    return a.to_str(var="t")


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def _run_relations(spec, job, opts):
    n = job["n"]
    pts = [_point(spec, c, n, f"points[{i}]") for i, c in enumerate(job["points"])]
    mod = relation_generators(RelationProblem(spec, pts))
    return {
        "generators": [[_fq_poly_str(a) for a in g] for g in mod.generators],
        "independent": not mod.generators,
        "divisor": [[w.label(), c] for w, c in mod.divisor.items()],
        "c_values": [[w.label(), c] for w, c in mod.c_values],
        "d": mod.d,
        "degree_bound": mod.delta,
    }


def _run_check_inf(spec, job, opts):
    n = job["n"]
    fs = [_tpoly(spec, s, f"polynomials[{i}]") for i, s in enumerate(job["polynomials"])]
    rep = check_inf_criterion(fs, n, solver=job.get("solver", False))
    out = rep.as_dict()
    if "weights" in job:
        ok, reasons = check_algindep_hypotheses(job["weights"], spec.q, spec.p)
        out["algebraic_independence"] = {"hypotheses_hold": ok, "violations": reasons}
    return out


def _run_check_v(spec, job, opts):
    alphas = [_ratfunc(spec, s, f"alphas[{i}]") for i, s in enumerate(job["alphas"])]
    place = _place(spec, job["place"])
    if place.is_infinite:
        raise JobError("place: check-v needs a finite place")
    return check_valpha_criterion(alphas, place, job["n"], spec).as_dict()


def _cpl_value(spec, n, alpha, place, N):
    if place.is_infinite:
        return cpl_inf(spec, n, alpha, N), None
    value, a = cpl_v(spec, n, alpha, place, N)
    return value, a


def _run_eval_cpl(spec, job, opts):
    n, N = job["n"], opts["precision"]
    alpha = _ratfunc(spec, job["alpha"], "alpha")
    place = _place(spec, job.get("place", "inf"))
    value, a = _cpl_value(spec, n, alpha, place, N)
    out = {"place": place.label(), "value": _series(value)}
    if a is not None:
        out["multiplier"] = _fq_poly_str(a)
    return out


def _run_eval_log(spec, job, opts):
    P = _point(spec, job["point"], job.get("n"), "point")
    place = _place(spec, job.get("place", "inf"))
    comp = Completion.at(spec, place)
    vec = log_point(P, opts["precision"], comp)
    out = {"place": place.label(), "log": [_series(v) for v in vec]}
    if place.is_infinite:
        out["in_domain"] = in_log_domain(P)
    return out


def _run_verify(spec, job, opts):
    n, N = job["n"], opts["precision"]
    place = _place(spec, job.get("place", "inf"))
    comp = Completion.at(spec, place)
    coeffs, values = [], []
    for i, term in enumerate(job["terms"]):
        c = _ratfunc(spec, term["coeff"], f"terms[{i}].coeff")
        alpha = _ratfunc(spec, term["alpha"], f"terms[{i}].alpha")
        # a coefficient with a pole eats digits of the value it multiplies
        slack = 0 if c.is_zero() else max(0, -ord_at(place, c))
        value, _ = _cpl_value(spec, n, alpha, place, N + slack)
        coeffs.append(c)
        values.append(value)
    res = verify_relation(values, coeffs, N)
    return {
        "place": comp.label(),
        "residual_valuation": _val(res),
        "exact_zero": res == INF,
        "precision": N,
        "vanishes": res >= N,
    }


def _run_act(spec, job, opts):
    a_tp = _tpoly(spec, job["a"], "a")
    try:
        a = as_fq_poly(spec, a_tp)
    except DomainError as exc:
        raise DomainError(f"a: {exc}") from exc
    P = _point(spec, job["point"], job.get("n"), "point")
    Q = act(a, P)
    return {"a": _fq_poly_str(a), "result": [format_value(c) for c in Q.coords]}


_HANDLERS = {
    "relations": _run_relations,
    "check-inf": _run_check_inf,
    "check-v": _run_check_v,
    "eval-cpl": _run_eval_cpl,
    "eval-log": _run_eval_log,
    "verify": _run_verify,
    "act": _run_act,
}


def run(job: dict, command: str | None = None, seed: int | None = None, precision: int | None = None) -> dict:
    """Validate and execute one job.  Raises on failure; see :func:`main` for exit codes."""
    command = command or job.get("command")
    if command not in COMMANDS:
        raise JobError(f"unknown command {command!r}")
    if job.get("command", command) != command:
        raise JobError(f"job is for {job['command']!r}, not {command!r}")
    try:
        jsonschema.validate({**job, "command": command}, _load_schema("job.schema.json"))
    except jsonschema.ValidationError as exc:
        path = "/".join(str(p) for p in exc.absolute_path)
        raise JobError(f"schema violation at '{path}': {exc.message}") from exc
    seed = job.get("seed", FACTOR_SEED) if seed is None else seed
    N = precision if precision is not None else job.get("precision", DEFAULT_PRECISION)
    try:
        spec = _spec(job)
    except FieldError as exc:
        raise JobError(f"field: {exc}") from exc
    token = factor_seed.set(seed)
    try:
        payload = _HANDLERS[command](spec, job, {"precision": N})
    finally:
        factor_seed.reset(token)
    return {
        "command": command,
        "field": _field_header(spec),
        "seed": seed,
        "result": payload,
        "version": __version__,
    }


def _error_doc(command, exc, kind):
    return {"command": command, "error": {"kind": kind, "type": type(exc).__name__, "message": str(exc)}}


def _write(doc, path):
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="carlitz", description="Relations among Carlitz tensor-power points.")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("--in", dest="inp", default=None, help="job file (default: stdin)")
    ap.add_argument("--out", dest="out", default=None, help="result file (default: stdout)")
    ap.add_argument("--seed", type=int, default=None, help="seed for randomized factoring")
    ap.add_argument("--precision", type=int, default=None, help="series precision N")
    ap.add_argument("--version", action="version", version=f"carlitz {__version__}")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.inp in (None, "-"):
            raw = sys.stdin.read()
        else:
            with open(args.inp, encoding="utf-8") as fh:
                raw = fh.read()
        job = json.loads(raw)
        if not isinstance(job, dict):
            raise JobError("the job must be a JSON object")
    except (OSError, json.JSONDecodeError, JobError) as exc:
        _write(_error_doc(args.command, exc, "input"), args.out)
        return 2
    if args.precision is not None and args.precision < 1:
        _write(_error_doc(args.command, JobError("precision must be positive"), "input"), args.out)
        return 2
    t0 = time.perf_counter()
    try:
        doc = run(job, args.command, args.seed, args.precision)
    except JobError as exc:
        _write(_error_doc(args.command, exc, "input"), args.out)
        return 2
    except DomainError as exc:
        _write(_error_doc(args.command, exc, "domain"), args.out)
        return 2
    except Exception as exc:  # noqa: BLE001 - reported as an internal failure
        _write(_error_doc(args.command, exc, "internal"), args.out)
        return 1
    doc["timing"] = {"seconds": round(time.perf_counter() - t0, 6)}
    _write(doc, args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
