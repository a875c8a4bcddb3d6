"""Command-line interface: compute, simulate, classify, verify.

Subcommands emit a JSON envelope {command, params, results, tests, version,
seed} on stdout; bulk samples go to CSV.  Exact integers are serialized as
decimal strings so values above 2**53 survive the trip through JSON.

Exit codes: 0 success, 1 validation or parse error, 2 verification-suite
failure.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .combinatorics import stirling2, stirling2_row
from .graph import EdgeListError, GnpParams, read_edge_list, degree_sequence
from .indices import check_star_identity, star_vector, zagreb_vector
from .limits import CLT_REGIMES, PLawParseError, classify_regime, parse_plaw, standardizer
from .moments import (
    SOURCE_ASYMPTOTIC,
    asymp_cov_zagreb,
    asymp_mean_zagreb,
    enumerate_oracle,
    exact_cov_zagreb_matrix,
)
from .montecarlo import McConfig, run_experiment, write_samples_csv
from .verify import DEFAULT_SEED, SUITES, run_suite

ENV_WORKERS = "ZAGREB_WORKERS"


class _CliParser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad flags; the CLI contract wants 1
    # for validation errors and reserves 2 for verification failures.
    # Abbreviated flags are disabled so flags can be recognized verbatim.
    def __init__(self, *args, **kwargs):
        kwargs.setdefault("allow_abbrev", False)
        super().__init__(*args, **kwargs)

    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(self._cli_fail(message))

    def _cli_fail(self, message) -> int:
        print(f"error: {message}", file=sys.stderr)
        return 1


def _envelope(command: str, params: dict, results, tests=None, seed=None) -> dict:
    return {
        "command": command,
        "params": params,
        "results": results,
        "tests": [t.to_dict() for t in tests] if tests else [],
        "version": __version__,
        "seed": seed,
    }


def _emit(payload: dict) -> None:
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _int_strings(values) -> list[str]:
    return [str(int(v)) for v in values]


def _default_workers() -> int:
    raw = os.environ.get(ENV_WORKERS, "").strip()
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return 1


def _merge_config(args: argparse.Namespace, explicit: set[str]) -> None:
    """Fill flags the user did not pass from the --config JSON file.

    Merge order is file < flags: a flag typed on the command line wins even
    when it repeats the parser default.
    """
    path = getattr(args, "config", None)
    if not path:
        return
    with open(path, "r", encoding="utf-8") as fh:
        file_conf = json.load(fh)
    if not isinstance(file_conf, dict):
        raise ValueError("config file must hold a JSON object")
    for key, value in file_conf.items():
        attr = key.replace("-", "_")
        if not hasattr(args, attr):
            raise ValueError(f"config file sets unknown option {key!r}")
        if attr not in explicit:
            setattr(args, attr, value)


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def _cmd_stirling(args) -> int:
    if args.m is not None:
        print(stirling2(args.k, args.m))
    else:
        print(" ".join(str(v) for v in stirling2_row(args.k)))
    return 0


def _cmd_index(args) -> int:
    with open(args.input, "r", encoding="utf-8") as fh:
        g = read_edge_list(fh, n_override=args.n)
    d = degree_sequence(g)
    zv = zagreb_vector(d, args.k)
    results = {
        "n": g.n,
        "edges": g.edge_count,
        "zagreb": _int_strings(zv.values),
        "identity_check": check_star_identity(d, args.k).holds,
    }
    if args.stars:
        results["stars"] = _int_strings(star_vector(d, args.k).values)
    _emit(_envelope("index", {"input": args.input, "k": args.k, "n": args.n}, results))
    return 0


def _require(args, *names) -> None:
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise ValueError(
            "missing required option(s): " + ", ".join(f"--{n}" for n in missing)
            + " (set on the command line or in --config)"
        )


def _cmd_moments(args) -> int:
    _require(args, "n", "p", "k")
    if args.mode not in ("exact", "asymptotic", "enumerate"):
        raise ValueError(f"--mode must be exact, asymptotic or enumerate, got {args.mode!r}")
    params = GnpParams(args.n, args.p)
    if args.mode == "exact":
        rep = exact_cov_zagreb_matrix(params, args.k)
        results = {
            "source": rep.source,
            "labels": list(rep.labels),
            "mean": rep.mean.tolist(),
            "var": rep.cov.diagonal().tolist(),
            "cov": rep.cov.tolist(),
        }
    elif args.mode == "asymptotic":
        mean = [asymp_mean_zagreb(params, m) for m in range(1, args.k + 1)]
        cov = [
            [asymp_cov_zagreb(params, m, l) for l in range(1, args.k + 1)]
            for m in range(1, args.k + 1)
        ]
        results = {
            "source": SOURCE_ASYMPTOTIC,
            "labels": [f"Z{m}" for m in range(1, args.k + 1)],
            "mean": mean,
            "var": [cov[m][m] for m in range(args.k)],
            "cov": cov,
        }
    else:  # enumerate
        rep = enumerate_oracle(params, args.k)
        results = {
            "source": rep.source,
            "labels": list(rep.labels),
            "mean": rep.mean.tolist(),
            "var": rep.cov.diagonal().tolist(),
            "cov": rep.cov.tolist(),
        }
    _emit(_envelope("moments", {"n": args.n, "p": args.p, "k": args.k, "mode": args.mode}, results))
    return 0


def _cmd_sample(args) -> int:
    _require(args, "n", "k", "replicates", "seed")
    if (args.p is None) == (args.plaw is None):
        print("error: exactly one of --p and --plaw is required", file=sys.stderr)
        return 1
    law = parse_plaw(args.plaw) if args.plaw is not None else None
    config = McConfig(
        n=args.n,
        k=args.k,
        replicates=args.replicates,
        master_seed=args.seed,
        p=args.p,
        plaw=law,
        collect=("zagreb", "stars") if args.stars else ("zagreb",),
    )
    matrix, report = run_experiment(config, workers=args.workers)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            write_samples_csv(matrix, fh)
    results = {
        "n": args.n,
        "p": config.resolved_p,
        "k": args.k,
        "replicates": args.replicates,
        "collect": list(config.collect),
        "labels": list(report.labels),
        "mean": report.mean.tolist(),
        "cov": report.cov.tolist(),
        "csv": args.out,
    }
    params = {
        "n": args.n,
        "p": args.p,
        "plaw": args.plaw,
        "k": args.k,
        "replicates": args.replicates,
        "workers": args.workers,
    }
    _emit(_envelope("sample", params, results, seed=args.seed))
    return 0


def _cmd_regime(args) -> int:
    law = parse_plaw(args.plaw)
    report = classify_regime(law, args.k)
    results = report.to_dict()
    if report.regime in CLT_REGIMES and args.n:
        params = GnpParams(args.n, law.evaluate(args.n))
        norms, target = standardizer(report, params, args.k)
        results["normalizers"] = [
            {"order": nm.order, "center": nm.center, "scale": nm.scale} for nm in norms
        ]
        results["target"] = {"kind": target.kind, "c": target.c, "matrix": target.matrix.tolist()}
    _emit(_envelope("regime", {"plaw": args.plaw, "k": args.k, "n": args.n}, results))
    return 0


def _cmd_verify(args) -> int:
    try:
        checks = run_suite(args.suite, seed=args.seed, workers=args.workers)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    for c in checks:
        print(c.line(), file=sys.stderr)
    ok = all(c.passed for c in checks)
    results = {
        "suite": args.suite,
        "passed": ok,
        "checks": [{"criterion": c.criterion, "pass": c.passed, "detail": c.detail} for c in checks],
    }
    tests = [c.test for c in checks if c.test is not None]
    _emit(
        _envelope(
            "verify", {"suite": args.suite, "workers": args.workers}, results, tests, seed=args.seed
        )
    )
    return 0 if ok else 2


# ---------------------------------------------------------------------------
# Parser wiring
# ---------------------------------------------------------------------------


def _build_parser() -> _CliParser:
    parser = _CliParser(prog="zagreb", description=__doc__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("stirling", help="partition numbers {k m} or a whole row")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, default=None)
    p.set_defaults(fn=_cmd_stirling)

    p = sub.add_parser("index", help="indices and star counts of an edge-list file")
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--stars", action="store_true", help="include star counts in the report")
    p.add_argument("--n", type=int, default=None, help="declare isolated trailing vertices")
    p.set_defaults(fn=_cmd_index)

    p = sub.add_parser("moments", help="moments of the index vector under G(n, p)")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--p", type=float, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--mode", default="exact", help="exact, asymptotic or enumerate")
    p.add_argument("--config", default=None, help="JSON file merged under explicit flags")
    p.set_defaults(fn=_cmd_moments)

    p = sub.add_parser("sample", help="seeded Monte Carlo replication")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--p", type=float, default=None)
    p.add_argument("--plaw", default=None, help="p(n) law evaluated at --n")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--replicates", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--stars", action="store_true")
    p.add_argument("--out", default=None, help="write the sample matrix CSV here")
    p.add_argument("--workers", type=int, default=_default_workers())
    p.add_argument("--config", default=None, help="JSON file merged under explicit flags")
    p.set_defaults(fn=_cmd_sample)

    p = sub.add_parser("regime", help="classify a p(n) law into its limit regime")
    p.add_argument("--plaw", required=True)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--n", type=int, default=None, help="also emit normalizers at this n")
    p.set_defaults(fn=_cmd_regime)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("--suite", required=True, help=f"one of: {', '.join([*SUITES, 'all'])}")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--workers", type=int, default=_default_workers())
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    subparser = parser._subparsers._group_actions[0].choices[args.subcommand]
    explicit = {
        a.dest for a in subparser._actions if any(s in argv for s in a.option_strings)
    }
    try:
        _merge_config(args, explicit)
        return args.fn(args)
    except (PLawParseError, EdgeListError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
