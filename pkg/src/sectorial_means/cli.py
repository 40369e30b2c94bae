"""Command-line front end.

Subcommands: ``mean`` (compute a mean of matrices from JSON files),
``verify`` (run the verification campaign and persist a report), ``angle``
(certify the sector angle of a matrix), and ``gen`` (generate test
matrices).  Exit codes: 0 success, 1 verification failure, 2 domain
precondition failure, 3 malformed input or config.
"""

import argparse
import json
import math
import sys

import numpy as np

from . import theorems
from .errors import (
    ConfigError,
    DomainError,
    InputError,
    InvalidWeights,
    NoConvergence,
    SectorialMeansError,
)
from .linalg import ToleranceConfig, sectorial_angle
from .matrixio import dump_matrix, load_matrix
from .means import ah_mean, arithmetic_mean, geometric_mean, harmonic_mean, resolvent_average
from .rand import check_rng, rand_pd, rand_sectorial, rand_unitary

MEAN_KINDS = ("arith", "harm", "geom", "resolvent", "ah")
GEN_KINDS = ("pd", "sectorial", "unitary")


class _Parser(argparse.ArgumentParser):
    # usage errors must exit 3, not argparse's default 2
    def error(self, message):
        raise ConfigError(message)


def _build_parser():
    parser = _Parser(
        prog="sectorial-means",
        description="Means of accretive matrices and the matrix-inequality "
        "verification campaign.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_mean = sub.add_parser(
        "mean", help="compute a mean of the matrices in the given JSON files"
    )
    p_mean.add_argument("kind", choices=MEAN_KINDS)
    p_mean.add_argument("inputs", nargs="+", metavar="FILE")
    p_mean.add_argument(
        "--weights",
        nargs="+",
        type=float,
        default=None,
        help="positive weights, one per input (default: uniform); normalized "
        "with a warning when they do not sum to 1",
    )
    p_mean.add_argument(
        "--lambda",
        dest="lam",
        type=float,
        default=0.5,
        help="weight of the second matrix in the geometric mean",
    )
    p_mean.add_argument(
        "--mu",
        default=None,
        help="shift parameter; a float, 'inf' or '-inf' (required for "
        "resolvent and ah)",
    )
    p_mean.set_defaults(func=_cmd_mean)

    p_verify = sub.add_parser("verify", help="run the verification campaign")
    p_verify.add_argument("--config", default=None, metavar="FILE")
    p_verify.add_argument("--samples", type=int, default=None)
    p_verify.add_argument("--dims", nargs="+", type=int, default=None)
    p_verify.add_argument("--seed", type=int, default=None, help="master seed")
    p_verify.add_argument(
        "--checks", nargs="+", default=None, help="run only these check ids"
    )
    p_verify.add_argument("--report", default=None, help="report file path")
    p_verify.add_argument("--format", choices=("json", "csv"), default=None)
    p_verify.set_defaults(func=_cmd_verify)

    p_angle = sub.add_parser(
        "angle", help="certify the sector angle of an accretive matrix"
    )
    p_angle.add_argument("input", metavar="FILE")
    p_angle.set_defaults(func=_cmd_angle)

    p_gen = sub.add_parser("gen", help="generate a test matrix as JSON")
    p_gen.add_argument("kind", choices=GEN_KINDS)
    p_gen.add_argument("n", type=int)
    p_gen.add_argument("--h", type=float, default=0.5, help="lower spectral bound")
    p_gen.add_argument("--k", type=float, default=2.0, help="upper spectral bound")
    p_gen.add_argument("--alpha", type=float, default=0.5, help="sector angle")
    p_gen.add_argument("--seed", type=int, default=None)
    p_gen.set_defaults(func=_cmd_gen)

    return parser


def _parse_mu(text, kind):
    if text is None:
        raise ConfigError(f"--mu is required for the {kind} mean")
    try:
        return float(text)
    except ValueError as exc:
        raise ConfigError(f"--mu must be a float, 'inf' or '-inf', got {text!r}") from exc


def _weights_for(args, count):
    if args.weights is None:
        return np.full(count, 1.0 / count)
    w = np.asarray(args.weights, dtype=np.float64)
    if w.size != count:
        raise InvalidWeights(f"{w.size} weights for {count} matrices")
    if np.any(w <= 0.0):
        raise InvalidWeights("weights must be positive")
    total = float(w.sum())
    if abs(total - 1.0) > 1e-12:
        print(
            f"warning: weights sum to {total!r}; normalizing", file=sys.stderr
        )
        w = w / total
    return w


def _cmd_mean(args):
    mats = [load_matrix(path) for path in args.inputs]
    if args.kind == "geom":
        if len(mats) != 2:
            raise ConfigError("the geometric mean takes exactly two matrices")
        if not (0.0 <= args.lam <= 1.0):
            raise ConfigError(f"--lambda must lie in [0, 1], got {args.lam}")
        out = geometric_mean(mats[0], mats[1], args.lam)
    elif args.kind == "arith":
        out = arithmetic_mean(mats, _weights_for(args, len(mats)))
    elif args.kind == "harm":
        out = harmonic_mean(mats, _weights_for(args, len(mats)))
    elif args.kind == "resolvent":
        mu = _parse_mu(args.mu, args.kind)
        out = resolvent_average(mats, _weights_for(args, len(mats)), mu)
    else:
        mu = _parse_mu(args.mu, args.kind)
        out = ah_mean(mats, _weights_for(args, len(mats)), mu)
    print(dump_matrix(out))
    return 0


def _load_campaign_config(args):
    data = {}
    if args.config:
        try:
            with open(args.config, "r", encoding="utf-8") as fh:
                data = json.load(fh)
        except OSError as exc:
            raise ConfigError(f"cannot read config {args.config}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ConfigError(f"invalid config JSON: {exc}") from exc
        if not isinstance(data, dict):
            raise ConfigError("config must be a JSON object")
    kwargs = {}
    if "dims" in data:
        kwargs["dims"] = tuple(data["dims"])
    if "samples" in data:
        kwargs["samples"] = data["samples"]
    if "master_seed" in data:
        kwargs["master_seed"] = data["master_seed"]
    if "checks" in data and data["checks"] is not None:
        kwargs["checks"] = tuple(data["checks"])
    if "report_path" in data:
        kwargs["report_path"] = data["report_path"]
    if "format" in data:
        kwargs["report_format"] = data["format"]
    if "tolerances" in data:
        try:
            kwargs["tolerances"] = ToleranceConfig(**data["tolerances"])
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"bad tolerances: {exc}") from exc
    if args.samples is not None:
        kwargs["samples"] = args.samples
    if args.dims is not None:
        kwargs["dims"] = tuple(args.dims)
    if args.seed is not None:
        kwargs["master_seed"] = args.seed
    if args.checks is not None:
        kwargs["checks"] = tuple(args.checks)
    if args.report is not None:
        kwargs["report_path"] = args.report
    if args.format is not None:
        kwargs["report_format"] = args.format
    try:
        cfg = theorems.CampaignConfig(**kwargs)
    except TypeError as exc:
        raise ConfigError(str(exc)) from exc
    if cfg.report_path is None:
        path = "sectorial-means-report." + cfg.report_format
        cfg = theorems.CampaignConfig(
            dims=cfg.dims,
            samples=cfg.samples,
            master_seed=cfg.master_seed,
            tolerances=cfg.tolerances,
            checks=cfg.checks,
            report_path=path,
            report_format=cfg.report_format,
        )
    return cfg


def _fmt(value):
    return "-" if value is None else f"{value:11.3e}"


def _cmd_verify(args):
    cfg = _load_campaign_config(args)
    result = theorems.run_all(cfg)
    print(f"{'check':34s} {'kind':15s} {'samples':>7s} {'worst margin':>12s} "
          f"{'worst resid':>12s} {'time':>7s}  status")
    for r in result.reports:
        tag = "PASS" if r.passed else ("fail*" if not r.required else "FAIL")
        print(
            f"{r.id:34s} {r.kind:15s} {r.samples_run:7d} {_fmt(r.worst_margin):>12s} "
            f"{_fmt(r.worst_residual):>12s} {r.wall_time:6.2f}s  {tag}"
        )
    summary = result.summary
    print(
        f"{summary['passed']}/{summary['total']} checks passed; report written "
        f"to {cfg.report_path}"
    )
    if summary["required_failed"]:
        print("failing required checks: " + ", ".join(summary["required_failed"]))
        return 1
    return 0


def _cmd_angle(args):
    cert = sectorial_angle(load_matrix(args.input))
    print(
        json.dumps(
            {"alpha": cert.alpha, "accretivity_margin": cert.accretivity_margin},
            indent=2,
        )
    )
    return 0


def _cmd_gen(args):
    if args.n < 1:
        raise ConfigError(f"dimension must be positive, got {args.n}")
    seed = args.seed if args.seed is not None else theorems.default_master_seed()
    rng = check_rng(seed, f"gen:{args.kind}:{args.n}", 0)
    if args.kind == "pd":
        out = rand_pd(args.n, args.h, args.k, rng)
    elif args.kind == "sectorial":
        out = rand_sectorial(args.n, args.alpha, rng).matrix
    else:
        out = rand_unitary(args.n, rng)
    print(dump_matrix(out))
    return 0


def main(argv=None):
    try:
        args = _build_parser().parse_args(argv)
        return args.func(args)
    except (InputError,) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (DomainError, NoConvergence) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SectorialMeansError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
