"""Command-line driver.

    esdqec sweep --family phi --alpha 0.7853981633974483 --code nonlocal62 --out phi.csv
    esdqec esd-threshold --family psi --alpha 0.785 --code local41
    esdqec verify

Options may also come from ``--config FILE`` holding ``key=value`` lines
(keys as the long flags, with or without dashes); flags win over the file.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .experiments import CODES, OUTPUTS, ConfigError, SweepConfig, concurrence_fn, run_sweep
from .measures import esd_threshold
from .states import FAMILIES
from .verification import verify_paper_claims

DEFAULTS = {
    "family": None,
    "alpha": None,
    "beta": 0.0,
    "code": "nonlocal62",
    "gamma_min": 0.0,
    "gamma_max": 1.0,
    "gamma_steps": 201,
    "outputs": ",".join(OUTPUTS),
    "format": "csv",
    "out": None,
    "tol": 1e-6,
}

_CASTS = {"alpha": float, "beta": float, "gamma_min": float, "gamma_max": float, "gamma_steps": int, "tol": float}


def read_config_file(path: str | Path) -> dict[str, str]:
    values = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError("config", f"{path}:{lineno}: expected key=value, got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        key = key.lstrip("-").replace("-", "_")
        if key not in DEFAULTS:
            raise ConfigError(key, f"{path}:{lineno}: unknown option")
        values[key] = value
    return values


def _sweep_options(p: argparse.ArgumentParser) -> None:
    # defaults are None so that file values can be told apart from flags
    p.add_argument("--config", help="key=value file; command-line flags override it")
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--alpha", type=float, help="state angle in radians")
    p.add_argument("--beta", type=float, help="relative phase in radians (default 0)")
    p.add_argument("--code", choices=CODES, help="default nonlocal62")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="esdqec", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="fidelity/concurrence against gamma")
    _sweep_options(sweep)
    sweep.add_argument("--gamma-min", type=float)
    sweep.add_argument("--gamma-max", type=float)
    sweep.add_argument("--gamma-steps", type=int, help="grid points (default 201)")
    sweep.add_argument("--outputs", help="comma list from fidelity,concurrence")
    sweep.add_argument("--format", choices=("csv", "json"))
    sweep.add_argument("--out", help="output path (default stdout)")
    sweep.add_argument("--timestamp", action="store_true", help="add creation time to JSON metadata")

    esd = sub.add_parser("esd-threshold", help="damping at which the concurrence first stays zero")
    _sweep_options(esd)
    esd.add_argument("--tol", type=float, help="bisection tolerance (default 1e-6)")

    sub.add_parser("verify", help="run the verification battery; nonzero exit on failure")
    return parser


def resolve(args: argparse.Namespace) -> dict:
    """Merge defaults < config file < flags and cast values."""
    merged = dict(DEFAULTS)
    if getattr(args, "config", None):
        merged.update(read_config_file(args.config))
    merged.update({k: v for k, v in vars(args).items() if k in DEFAULTS and v is not None})
    for key, cast in _CASTS.items():
        if merged[key] is not None:
            try:
                merged[key] = cast(merged[key])
            except ValueError:
                raise ConfigError(key, f"cannot parse {merged[key]!r}") from None
    for key in ("family", "alpha"):
        if merged[key] is None:
            raise ConfigError(key, "is required")
    return merged


def _config(opts: dict) -> SweepConfig:
    outputs = tuple(o.strip() for o in str(opts["outputs"]).split(",") if o.strip())
    return SweepConfig(
        family=opts["family"],
        alpha=opts["alpha"],
        beta=opts["beta"],
        code=opts["code"],
        gamma_min=opts["gamma_min"],
        gamma_max=opts["gamma_max"],
        gamma_steps=opts["gamma_steps"],
        outputs=outputs,
    )


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "verify":
        claims = verify_paper_claims()
        for claim in claims:
            print(claim.line())
        failed = sum(not c.passed for c in claims)
        print(f"{len(claims) - failed}/{len(claims)} claims passed")
        return 1 if failed else 0

    try:
        opts = resolve(args)
        config = _config(opts)
    except ConfigError as exc:
        parser.error(str(exc))

    if args.command == "esd-threshold":
        fn = concurrence_fn(config.family, config.alpha, config.beta, config.code)
        try:
            print(f"{esd_threshold(fn, tol=opts['tol']):.10g}")
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        return 0

    result = run_sweep(config)
    fmt = opts["format"]
    if fmt not in ("csv", "json"):
        parser.error(f"format: must be csv or json, got {fmt!r}")
    text = result.to_csv() if fmt == "csv" else result.to_json(timestamp=args.timestamp)
    if opts["out"]:
        Path(opts["out"]).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
