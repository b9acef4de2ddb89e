"""Command-line interface.

Subcommands: solve, target, fit, predict, probability, verify, encode,
decode.  Exit codes: 0 success, 1 usage or input error, 2 verification
mismatch, 3 unexpected runtime failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import codec, published, runner, stats
from .core import energy, expand_skew, half_dim

__all__ = ["main"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); keep 2 for mismatches
        raise UsageError(message)


def _budget(text: str) -> int:
    value = float(text)
    if value != int(value) or value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return int(value)


def _build_parser() -> _Parser:
    parser = _Parser(prog="skewsaw", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_run_flags(p, with_target=True):
        p.add_argument("--length", type=int, required=True, help="sequence length L (odd)")
        p.add_argument("--walkers", type=int, default=None, help="walks per batch (default: logical cores)")
        p.add_argument("--walk-factor", type=int, default=8, help="walk length n = factor * D")
        p.add_argument("--seed", type=int, default=1, help="64-bit master seed")
        p.add_argument("--max-nses", type=_budget, default=None, help="evaluation budget")
        p.add_argument("--max-runtime", type=float, default=None, help="wall-clock budget in seconds")
        if with_target:
            p.add_argument("--target-energy", type=int, default=None, help="stop at this energy")

    p = sub.add_parser("solve", help="search for a low-energy sequence")
    add_run_flags(p)
    p.add_argument("--output", default=None, help="also write the JSON record to this file")

    p = sub.add_parser("target", help="repeated runs measuring evaluations to a target energy")
    add_run_flags(p)
    p.add_argument("--runs", type=int, default=100, help="number of repetitions")
    p.add_argument("--output", default=None, help="also write the CSV to this file")

    p = sub.add_parser("fit", help="fit exponential rates (and a trend across lengths) from sample CSVs")
    p.add_argument("csv", nargs="+", help="sample CSV files from the target command")
    p.add_argument("--output", default=None, help="also write the JSON to this file")

    p = sub.add_parser("predict", help="evaluation budget for a target optimality probability")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--probability", type=float, required=True)
    p.add_argument("--runs", type=int, default=100)
    p.add_argument("--model", default="paper", help="'paper' or path to a trend-model JSON")

    p = sub.add_parser("probability", help="optimality probability of a completed effort")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--total-nses", type=float, required=True)
    p.add_argument("--model", default="paper", help="'paper' or path to a trend-model JSON")

    p = sub.add_parser("verify", help="recompute energies of recorded sequences")
    p.add_argument("file", nargs="?", default=None, help="records `L 0xHEX [E [F]]`, one per line")
    p.add_argument("--builtin", action="store_true", help="check the embedded best-known table")

    p = sub.add_parser("encode", help="hex-encode a +/- half sequence")
    p.add_argument("spins", help="half sequence, e.g. '++-+-' (use -- before one starting with -)")

    p = sub.add_parser("decode", help="decode hex into spins, energy, and merit factor")
    p.add_argument("hex", help="hex code, e.g. 0x4")
    p.add_argument("--length", type=int, required=True, help="full sequence length L (odd)")

    return parser


def _run_config(args) -> runner.RunConfig:
    if args.length < 3 or args.length % 2 == 0:
        raise UsageError(f"--length must be odd and >= 3, got {args.length}")
    target = getattr(args, "target_energy", None)
    if args.max_nses is None and args.max_runtime is None and target is None:
        raise UsageError("need a stopping condition: --max-nses, --max-runtime, or --target-energy")
    try:
        return runner.RunConfig(
            L=args.length,
            walkers=args.walkers,
            walk_factor=args.walk_factor,
            master_seed=args.seed,
            max_nses=args.max_nses,
            max_runtime=args.max_runtime,
            target_E=target,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(text: str, output: str | None):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")
    if output:
        with open(output, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")


def _load_model(spec_text: str) -> stats.TrendModel:
    if spec_text == "paper":
        return stats.PUBLISHED_TREND
    try:
        with open(spec_text) as fh:
            return stats.TrendModel.from_json_dict(json.load(fh))
    except (OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        raise UsageError(f"cannot load model from {spec_text!r}: {exc}") from None


def _cmd_solve(args) -> int:
    record = runner.solve(_run_config(args))
    _emit(record.to_json(), args.output)
    return 0


def _cmd_target(args) -> int:
    config = _run_config(args)
    if config.target_E is None:
        raise UsageError("target command needs --target-energy")
    if config.max_nses is None and config.max_runtime is None:
        raise UsageError("target command needs a per-run budget (--max-nses or --max-runtime)")
    if args.runs < 1:
        raise UsageError("--runs must be >= 1")
    samples = runner.target_campaign(config, args.runs)
    _emit(samples.to_csv(), args.output)
    return 0


def _cmd_fit(args) -> int:
    fits = []
    points = []
    for path in args.csv:
        try:
            with open(path) as fh:
                samples = runner.SampleSet.from_csv(fh.read())
        except OSError as exc:
            raise UsageError(str(exc)) from None
        except ValueError as exc:
            raise UsageError(f"{path}: {exc}") from None
        fit = stats.fit_exponential(samples)
        a2 = stats.anderson_darling_exponential(samples, fit)
        fits.append(
            {
                "L": samples.L,
                "lambda": fit.lam,
                "sample_count": fit.sample_count,
                "mean_nses": fit.mean_nses,
                "censored": samples.censored_count,
                "a2": a2,
            }
        )
        points.append((samples.L, fit.lam))
    trend = None
    if len({length for length, _ in points}) >= 2:
        trend = stats.fit_lambda_trend(points).to_json_dict()
    _emit(json.dumps({"fits": fits, "trend": trend}, indent=2), args.output)
    return 0


def _cmd_predict(args) -> int:
    model = _load_model(args.model)
    try:
        per_run = stats.nses_limit(args.length, args.probability, args.runs, model)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out = {
        "L": args.length,
        "probability": args.probability,
        "runs": args.runs,
        "lambda": model.rate(args.length),
        "nses_limit_per_run": per_run,
        "nses_limit_total": per_run * args.runs,
    }
    sys.stdout.write(json.dumps(out, indent=2) + "\n")
    return 0


def _cmd_probability(args) -> int:
    model = _load_model(args.model)
    try:
        prob = stats.optimality_probability(args.length, args.total_nses, model)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out = {
        "L": args.length,
        "total_nses": args.total_nses,
        "lambda": model.rate(args.length),
        "probability": prob,
    }
    sys.stdout.write(json.dumps(out, indent=2) + "\n")
    return 0


def _verify_rows(rows) -> int:
    header = f"{'L':>5} {'E claim':>9} {'E calc':>9} {'F claim':>9} {'F calc':>9}  status"
    lines = [header]
    failures = 0
    for length, hex_text, claimed_e, claimed_f in rows:
        try:
            half = codec.decode(hex_text, length)
        except codec.DecodeError as exc:
            failures += 1
            lines.append(f"{length:>5} {'-':>9} {'-':>9} {'-':>9} {'-':>9}  decode-error: {exc}")
            continue
        rec = energy(expand_skew(half))
        problems = []
        if claimed_e is not None and rec.E != claimed_e:
            problems.append("E mismatch")
        # published merit factors carry 4 decimals; allow their last-digit rounding
        if claimed_f is not None and abs(rec.F - claimed_f) >= 1e-4:
            problems.append("F mismatch")
        if problems:
            failures += 1
        lines.append(
            f"{length:>5} "
            f"{claimed_e if claimed_e is not None else '-':>9} "
            f"{rec.E:>9} "
            f"{f'{claimed_f:.4f}' if claimed_f is not None else '-':>9} "
            f"{rec.F:>9.4f}  "
            f"{'ok' if not problems else ', '.join(problems)}"
        )
    lines.append(f"{len(rows) - failures}/{len(rows)} rows ok")
    sys.stdout.write("\n".join(lines) + "\n")
    return 2 if failures else 0


def _cmd_verify(args) -> int:
    if args.builtin == (args.file is not None):
        raise UsageError("verify needs exactly one of --builtin or a records file")
    if args.builtin:
        rows = [(r.L, r.hex, r.E, r.F) for r in published.BEST_KNOWN]
    else:
        rows = []
        try:
            with open(args.file) as fh:
                raw_lines = fh.readlines()
        except OSError as exc:
            raise UsageError(str(exc)) from None
        for lineno, line in enumerate(raw_lines, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            try:
                rows.append(codec.parse_record_line(stripped))
            except ValueError as exc:
                raise UsageError(f"{args.file}:{lineno}: {exc}") from None
        if not rows:
            raise UsageError(f"{args.file}: no records found")
    return _verify_rows(rows)


def _cmd_encode(args) -> int:
    mapping = {"+": 1, "-": -1}
    try:
        half = [mapping[ch] for ch in args.spins]
    except KeyError:
        raise UsageError("spins must be a string of '+' and '-' characters") from None
    if not half:
        raise UsageError("empty spin string")
    sys.stdout.write(codec.encode(half) + "\n")
    return 0


def _cmd_decode(args) -> int:
    if args.length < 1 or args.length % 2 == 0:
        raise UsageError(f"--length must be odd, got {args.length}")
    try:
        half = codec.decode(args.hex, args.length)
    except codec.DecodeError as exc:
        raise UsageError(str(exc)) from None
    rec = energy(expand_skew(half))
    spins = "".join("+" if v > 0 else "-" for v in half)
    sys.stdout.write(f"half: {spins}\n")
    sys.stdout.write(f"D: {half_dim(args.length)}\n")
    sys.stdout.write(f"E: {rec.E}\n")
    sys.stdout.write(f"F: {rec.F:.4f}\n" if rec.F is not None and math.isfinite(rec.F) else "F: undefined\n")
    return 0


_COMMANDS = {
    "solve": _cmd_solve,
    "target": _cmd_target,
    "fit": _cmd_fit,
    "predict": _cmd_predict,
    "probability": _cmd_probability,
    "verify": _cmd_verify,
    "encode": _cmd_encode,
    "decode": _cmd_decode,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (KeyboardInterrupt, SystemExit):
        raise
    except Exception as exc:  # pragma: no cover - defensive
        print(f"failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
