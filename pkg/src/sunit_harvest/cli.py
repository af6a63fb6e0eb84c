"""Command-line front end.

Subcommands: thm1, thm2, prop1, oracle, exponents, verify {charsums|sieve|circle},
smooth, siegel.  Pipeline runs read a plain-text key=value config file (one pair
per line, '#' comments); every run writes a JSON report and, when asked,
CSV artifacts.

Exit codes: 0 success, 2 empty harvest, 3 constraint violation, 4 resource
limit, 1 malformed config or usage.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from pathlib import Path

import numpy as np

from .arith import PrimeSet, trial_factor
from .characters import (
    fourth_moment_ratio,
    large_sieve_check,
    polya_vinogradov_check,
)
from .circle import additive_decomposition, trilinear_ratio_probe
from .errors import (
    ConfigError,
    ConstraintViolation,
    EmptyHarvest,
    EnumerationCap,
    ResourceLimit,
    SunitHarvestError,
)
from .exponents import check_constraints, optimality_frontier, regime_exponents
from .oracle import brute_linear_count, brute_prop1_triples, brute_sunit_pairs
from .pipelines import (
    DEFAULT_SEED,
    HarvestConfig,
    config_from_exponents,
    prop1_run,
    thm1_run,
    thm2_run,
)
from .report import (
    write_charsum_csv,
    write_frontier_csv,
    write_json_report,
    write_solutions_csv,
    write_spectrum_csv,
)
from .smooth import enumerate_squarefree_smooth, split_disjoint_prime_sets
from .siegel import siegel_small_solution

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_EMPTY = 2
EXIT_CONSTRAINT = 3
EXIT_RESOURCE = 4

_PIPELINE_KEYS = {
    "equation",
    "x",
    "alpha",
    "variant",
    "delta",
    "epsilon",
    "w",
    "z",
    "q",
    "r",
    "y",
    "t1",
    "t2",
    "t3",
    "t_interval",
    "t_split",
    "enum_cap",
    "hit_cap",
    "triple_cap",
}


def parse_config_file(path: str | Path) -> dict:
    """key=value per line; '#' starts a comment; unknown keys are rejected."""
    params: dict[str, str] = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}", f"expected key=value, got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key in params:
            raise ConfigError(key, "duplicate key")
        params[key] = value
    for key in params:
        if key not in _PIPELINE_KEYS:
            raise ConfigError(key, "unknown key")
    return params


def _parse_primes(text: str) -> PrimeSet:
    return PrimeSet(tuple(sorted(int(tok) for tok in text.split(",") if tok.strip())))


def _prime_triple(params: dict) -> tuple[PrimeSet, PrimeSet, PrimeSet]:
    if "t_interval" in params:
        lo, hi = (int(v) for v in params["t_interval"].split(","))
        m = int(params.get("t_split", 3))
        if m != 3:
            raise ConfigError("t_split", "pipelines need exactly 3 prime sets")
        t1, t2, t3 = split_disjoint_prime_sets(lo, hi, 3)
        return t1, t2, t3
    try:
        return (
            _parse_primes(params["t1"]),
            _parse_primes(params["t2"]),
            _parse_primes(params["t3"]),
        )
    except KeyError as missing:
        raise ConfigError(str(missing), "missing prime set (t1/t2/t3 or t_interval)")


def build_harvest_config(params: dict, threads: int, seed: int, cap: int | None) -> HarvestConfig:
    equation = params.get("equation")
    if equation not in ("thm1", "thm2", "prop1"):
        raise ConfigError("equation", f"must be thm1, thm2 or prop1, got {equation!r}")
    t1, t2, t3 = _prime_triple(params)
    try:
        x = int(float(params["x"]))
    except KeyError:
        raise ConfigError("x", "missing scale X")
    kwargs = {}
    if "enum_cap" in params:
        kwargs["enum_cap"] = int(float(params["enum_cap"]))
    if "hit_cap" in params:
        kwargs["hit_cap"] = int(float(params["hit_cap"]))
    if cap is not None:
        kwargs["hit_cap"] = cap
    cfg = config_from_exponents(
        equation,
        x,
        float(params.get("alpha", "0.1666666666666667" if equation == "thm1" else "0.52")),
        params.get("variant", "unconditional"),
        float(params.get("delta", "0.1")),
        t1,
        t2,
        t3,
        epsilon=float(params.get("epsilon", "0.01")),
        threads=threads,
        seed=seed,
        **kwargs,
    )
    # explicit scale overrides after derivation
    for key in ("w",):
        if key in params:
            cfg.w_max = int(float(params[key]))
    for key in ("z", "q", "r", "y"):
        if key in params:
            setattr(cfg, key, float(params[key]))
    cfg.validate()
    return cfg


def _timing(t0: float) -> dict:
    return {"wall_seconds": time.time() - t0, "timestamp": time.strftime("%Y-%m-%dT%H:%M:%S")}


def _emit(payload: dict, out: str | None):
    if out:
        write_json_report(payload, out)
    else:
        json.dump(payload, sys.stdout, indent=2, sort_keys=True, default=str)
        sys.stdout.write("\n")


def _run_pipeline(args) -> int:
    t0 = time.time()
    params = parse_config_file(args.config)
    if args.command == "prop1":
        t1, t2, t3 = _prime_triple(params)
        x = int(float(params.get("x", "500")))
        report = prop1_run(
            x,
            t1,
            t2,
            t3,
            triple_cap=args.cap or int(float(params.get("triple_cap", "2000000"))),
            threads=args.threads,
            epsilon=float(params.get("epsilon", "0.01")),
        )
    else:
        cfg = build_harvest_config(params, args.threads, args.seed, args.cap)
        if cfg.equation != args.command:
            raise ConfigError("equation", f"config says {cfg.equation}, command is {args.command}")
        report = thm1_run(cfg) if args.command == "thm1" else thm2_run(cfg)
    payload = {"run": report.as_dict(), "timing": _timing(t0), "seed": args.seed}
    _emit(payload, args.out)
    if args.solutions:
        write_solutions_csv(report.equation, report.solution_rows, args.solutions)
    return EXIT_OK


def _run_oracle(args) -> int:
    t0 = time.time()
    if args.kind == "sunit_pairs":
        S = _parse_primes(args.primes)
        res = brute_sunit_pairs(S, args.bound, args.cap or 10**9)
        rows = [(A, C, "", "", "", "") for A, C in res.solutions]
        equation = "thm1"
    elif args.kind == "prop1_triples":
        S = _parse_primes(args.primes)
        res = brute_prop1_triples(S, args.bound, args.cap or 10**9)
        rows = [(a, b, c, "", "", "", "", "", "") for a, b, c in res.solutions]
        equation = "prop1"
    elif args.kind == "linear_count":
        a_vals = [int(v) for v in args.a_set.split(",")]
        c_vals = [int(v) for v in args.c_set.split(",")]
        res = brute_linear_count(a_vals, c_vals, args.bound, args.shift, args.cap or 10**9)
        rows = []
        equation = None
    else:
        raise ConfigError("kind", f"unknown oracle kind {args.kind!r}")
    payload = {
        "query": res.query,
        "count": res.count,
        "effort": res.effort,
        "solutions": [list(s) for s in res.solutions],
        "timing": _timing(t0),
        "seed": args.seed,
    }
    _emit(payload, args.out)
    if args.solutions and equation:
        write_solutions_csv(equation, rows, args.solutions)
    return EXIT_OK


def _run_exponents(args) -> int:
    if args.frontier:
        rows = []
        for k in range(2, args.kmax + 1):
            indices = list(range(2, k + 1))
            for mask in range(1 << len(indices)):
                I = tuple(indices[j] for j in range(len(indices)) if mask >> j & 1)
                theta, val = optimality_frontier(k, I)
                rows.append((k, theta, val))
        if args.out:
            write_frontier_csv(rows, args.out)
        else:
            for row in rows:
                print(",".join(str(v) for v in row))
        return EXIT_OK
    exps = regime_exponents(args.theorem, args.variant, args.alpha)
    payload = {
        "exponents": exps.as_dict(),
        "constraints": [
            {"name": n, "margin": v, "satisfied": ok}
            for n, v, ok in check_constraints(args.theorem, args.variant, args.alpha)
        ],
    }
    _emit(payload, args.out)
    return EXIT_OK


def _verify_charsums(args) -> tuple[dict, list]:
    rng = random.Random(args.seed)
    rows = []
    worst = {"ratio": 0.0}
    squarefree = [q for q in range(3, args.qmax + 1) if _is_squarefree(q)]
    for q in squarefree:
        rep = polya_vinogradov_check(q, q, 2 * q)
        for idx, stat, bound, ratio in rep.rows:
            rows.append((q, idx, stat, bound, ratio))
        if rep.max_ratio > worst["ratio"]:
            worst = {
                "ratio": rep.max_ratio,
                "q": q,
                "character": rep.argmax_character,
                "M": rep.argmax_M,
                "N": rep.argmax_N,
            }
    sieve_trials = []
    for _ in range(args.trials):
        qs = rng.sample(squarefree[: max(8, len(squarefree) // 4)], k=min(3, len(squarefree)))
        Y = rng.randint(0, 40)
        Z = Y + rng.randint(1, 60)
        coeffs = [complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(Z - Y)]
        lhs, rhs, holds = large_sieve_check(qs, Y, Z, coeffs)
        sieve_trials.append(holds)
    fm_max = 0.0
    for q in squarefree[:40]:
        for N in (1, q // 2 or 1, q, 2 * q):
            fm_max = max(fm_max, fourth_moment_ratio(q, N))
    summary = {
        "polya_vinogradov_max": worst,
        "polya_vinogradov_all_pass": worst["ratio"] <= 1.0,
        "large_sieve_all_hold": all(sieve_trials),
        "large_sieve_trials": len(sieve_trials),
        "fourth_moment_max_ratio": fm_max,
    }
    return summary, rows


def _run_verify(args) -> int:
    t0 = time.time()
    if args.what == "charsums":
        summary, rows = _verify_charsums(args)
        payload = {"verify": "charsums", "summary": summary, "timing": _timing(t0), "seed": args.seed}
        _emit(payload, args.out)
        if args.solutions:
            write_charsum_csv(rows, args.solutions)
        return EXIT_OK if summary["polya_vinogradov_all_pass"] and summary["large_sieve_all_hold"] else EXIT_CONSTRAINT
    if args.what == "sieve":
        rng = random.Random(args.seed)
        results = []
        for _ in range(args.trials):
            qs = sorted(rng.sample([q for q in range(3, 50) if _is_squarefree(q)], k=3))
            Y = rng.randint(0, 50)
            Z = Y + rng.randint(1, 200)
            coeffs = [complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(Z - Y)]
            lhs, rhs, holds = large_sieve_check(qs, Y, Z, coeffs)
            results.append({"Q": qs, "Y": Y, "Z": Z, "lhs": lhs, "rhs": rhs, "holds": holds})
        payload = {
            "verify": "sieve",
            "all_hold": all(r["holds"] for r in results),
            "trials": results,
            "timing": _timing(t0),
            "seed": args.seed,
        }
        _emit(payload, args.out)
        return EXIT_OK if payload["all_hold"] else EXIT_CONSTRAINT
    if args.what == "circle":
        rng = random.Random(args.seed)
        Z = args.qmax
        a_vals = sorted(rng.sample(range(max(3 * Z // 4, 2), Z + 1), k=min(4, Z - 3 * Z // 4)))
        c_vals = sorted(rng.sample(range(2, 4 * Z), k=30))
        mu = 0.5
        dec = additive_decomposition(a_vals, c_vals, mu)
        probe = trilinear_ratio_probe(
            6, 6, 6, 6, lambda n, r: complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        )
        payload = {
            "verify": "circle",
            "exact_count": dec.exact_count,
            "recombined": dec.recombined,
            "exact_match": abs(dec.recombined - dec.exact_count) <= 1e-6 * max(1, dec.exact_count),
            "main": dec.main,
            "lambda": dec.lambda_cut,
            "cutoff": dec.cutoff,
            "truncated_sum": dec.truncated_sum,
            "tail_sum": dec.tail_sum,
            "trilinear_probe": probe,
            "timing": _timing(t0),
            "seed": args.seed,
        }
        _emit(payload, args.out)
        if args.solutions:
            write_spectrum_csv(dec.rows, args.solutions)
        return EXIT_OK if payload["exact_match"] else EXIT_CONSTRAINT
    raise ConfigError("what", f"unknown verification {args.what!r}")


def _is_squarefree(q: int) -> bool:
    return all(e == 1 for _, e in trial_factor(q))


def _run_smooth(args) -> int:
    T = _parse_primes(args.primes)
    ss = enumerate_squarefree_smooth(T, args.lo, args.hi, args.cap or 2_000_000)
    payload = {
        "primes": list(T.primes),
        "lo": args.lo,
        "hi": args.hi,
        "count": len(ss),
        "members": list(ss.values()),
    }
    _emit(payload, args.out)
    return EXIT_OK


def _run_siegel(args) -> int:
    alpha = tuple(int(v) for v in args.alpha.split(","))
    sol = siegel_small_solution(alpha, args.bound)
    payload = {"alpha": list(alpha), "B": args.bound, "z": list(sol.z), "bound": sol.bound}
    _emit(payload, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sunit-harvest")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", help="write the JSON report here")
        p.add_argument("--solutions", help="write the CSV artifact here")
        p.add_argument("--threads", type=int, default=1)
        p.add_argument("--seed", type=int, default=DEFAULT_SEED)
        p.add_argument("--cap", type=int, default=None, help="resource cap override")

    for name in ("thm1", "thm2", "prop1"):
        p = sub.add_parser(name, help=f"run the {name} harvest pipeline")
        p.add_argument("--config", required=True)
        common(p)

    p = sub.add_parser("oracle", help="brute-force ground truth")
    p.add_argument("--kind", required=True, choices=["sunit_pairs", "prop1_triples", "linear_count"])
    p.add_argument("--primes", help="comma-separated prime set")
    p.add_argument("--bound", type=int, help="enumeration bound (or W for linear_count)")
    p.add_argument("--a-set", dest="a_set", help="comma-separated moduli (linear_count)")
    p.add_argument("--c-set", dest="c_set", help="comma-separated coefficients (linear_count)")
    p.add_argument("--shift", type=int, default=1)
    common(p)

    p = sub.add_parser("exponents", help="regime exponent tables and the frontier")
    p.add_argument("--theorem", choices=["thm1", "thm2"])
    p.add_argument("--variant", choices=["conditional", "unconditional"])
    p.add_argument("--alpha", type=float)
    p.add_argument("--frontier", action="store_true")
    p.add_argument("--kmax", type=int, default=12)
    common(p)

    p = sub.add_parser("verify", help="analytic identity and inequality suites")
    p.add_argument("what", choices=["charsums", "sieve", "circle"])
    p.add_argument("--qmax", type=int, default=50)
    p.add_argument("--trials", type=int, default=100)
    common(p)

    p = sub.add_parser("smooth", help="enumerate squarefree smooth numbers")
    p.add_argument("--primes", required=True)
    p.add_argument("--lo", type=int, required=True)
    p.add_argument("--hi", type=int, required=True)
    common(p)

    p = sub.add_parser("siegel", help="small solution of a linear form")
    p.add_argument("--alpha", required=True, help="comma-separated coefficients")
    p.add_argument("--bound", type=int, required=True, help="coefficient bound B")
    common(p)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    random.seed(args.seed)
    np.random.seed(args.seed % 2**32)
    try:
        if args.command in ("thm1", "thm2", "prop1"):
            return _run_pipeline(args)
        if args.command == "oracle":
            return _run_oracle(args)
        if args.command == "exponents":
            return _run_exponents(args)
        if args.command == "verify":
            return _run_verify(args)
        if args.command == "smooth":
            return _run_smooth(args)
        if args.command == "siegel":
            return _run_siegel(args)
        parser.error(f"unknown command {args.command}")
    except ConfigError as err:
        print(f"config error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except EmptyHarvest as err:
        print(f"empty harvest: {err}", file=sys.stderr)
        return EXIT_EMPTY
    except ConstraintViolation as err:
        print(f"constraint violation: {err}", file=sys.stderr)
        return EXIT_CONSTRAINT
    except (ResourceLimit, EnumerationCap) as err:
        print(f"resource limit: {err}", file=sys.stderr)
        return EXIT_RESOURCE
    except SunitHarvestError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
