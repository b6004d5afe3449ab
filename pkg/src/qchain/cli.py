"""Command line front end.

Builds a chain state from an expression such as ``"b[5] vac"``, samples its
wavefunction at uniform random points, and writes a parallel-axes graphic
(one polyline per sample, colored by the wavefunction value).  A separate
mode renders a two-dimensional oscillator eigenstate as a scatter chart.

Exit codes: 0 success, 1 usage or expression error, 2 numeric failure,
3 I/O failure.  Output files are written atomically, so a failed run never
leaves a partial file behind.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
import tempfile
from dataclasses import dataclass

from .chain import ChainParams, real_mode_basis
from .expr import StateExprError, evaluate_expr, parse_state_expr, pretty
from .fock import dump_state
from .render import render_parallel_axes, render_scatter2d
from .sampling import (
    COLOR_MODES,
    RenderSpec,
    chain_window,
    default_window,
    dump_samples,
    sample_chain_state,
    sample_oscillator2d,
)

__all__ = ["PRESETS", "RunConfig", "build_arg_parser", "run", "run_oscillator2d", "main"]

# Named presets for the stock figures.  fig1 is the 2D oscillator; the rest
# are chain states.  N for fig7/fig8* is a documented choice (11), not a
# published value.
PRESETS = {
    "fig1": {"mode2d": True, "nu1": 2, "nu2": 1},
    "fig2": {"n": 15, "state": "vac"},
    "fig3": {"n": 15, "state": "a[0] vac"},
    "fig4": {"n": 15, "state": "a[0] a[0] vac"},
    "fig5": {"n": 15, "state": "a[1] vac"},
    "fig6": {"n": 11, "state": "b[5] vac"},
    "fig7": {"n": 11, "state": "b[3] b[8] vac"},
    "fig8a": {"n": 11, "state": "b[5] b[6] vac"},
    "fig8b": {"n": 11, "state": "b[5] b[5] vac"},
}


@dataclass(frozen=True)
class RunConfig:
    """Everything one chain run needs: physics, state, render, destinations."""

    chain: ChainParams
    state: object  # parsed state expression (AST root)
    render: RenderSpec
    output_path: str
    samples_path: str | None = None
    state_dump_path: str | None = None


class _ArgumentParser(argparse.ArgumentParser):
    # argparse exits with 2 on bad flags; this tool reserves 2 for numeric
    # failures, so usage problems are remapped to 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def build_arg_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="qchain",
        description="Sample and draw wavefunctions of a harmonic chain.",
    )
    parser.add_argument("preset", nargs="?", choices=sorted(PRESETS),
                        help="figure preset; explicit flags override its values")
    parser.add_argument("--n", type=int, help="number of chain sites (odd)")
    parser.add_argument("--mass", type=float, help="site mass m (default 1)")
    parser.add_argument("--kappa", type=float, help="on-site stiffness (default 1)")
    parser.add_argument("--gamma", type=float, help="neighbor coupling (default 1)")
    parser.add_argument("--state", help="state expression, e.g. 'a[0] a[0] vac'")
    parser.add_argument("--samples", type=int, help="number of sample points (default 20000)")
    parser.add_argument("--window", type=float,
                        help="half-width of the sampling box (default from the spectrum)")
    parser.add_argument("--seed", type=int, help="random seed (default 0)")
    parser.add_argument("--out", help="output graphic path (default <preset>.svg)")
    parser.add_argument("--dump-samples", metavar="PATH",
                        help="also write the sample table to PATH")
    parser.add_argument("--dump-state", metavar="PATH",
                        help="also write the state's occupation terms to PATH")
    parser.add_argument("--color-mode", choices=COLOR_MODES,
                        help="diverging_real (default) or phase_hue")
    parser.add_argument("--mode2d", action="store_true",
                        help="render a 2D oscillator eigenstate instead of a chain")
    parser.add_argument("--nu1", type=int, help="first 2D quantum number (default 0)")
    parser.add_argument("--nu2", type=int, help="second 2D quantum number (default 0)")
    parser.add_argument("--width", type=int, help="graphic width in px (default 900)")
    parser.add_argument("--height", type=int, help="graphic height in px (default 560)")
    return parser


def _apply_preset(args: argparse.Namespace):
    if args.preset is None:
        return
    for key, value in PRESETS[args.preset].items():
        if key == "mode2d":
            args.mode2d = args.mode2d or value
        elif getattr(args, key) is None:
            setattr(args, key, value)


def _default(value, fallback):
    return fallback if value is None else value


def _write_atomic(path: str, text: str):
    """Write via a temp file in the same directory, then rename into place."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".qchain-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def run(config: RunConfig) -> int:
    """Chain pipeline: basis, state, samples, graphic (and optional dumps)."""
    basis = real_mode_basis(config.chain)
    state = evaluate_expr(config.state, config.chain)
    label = pretty(config.state)

    spec = config.render
    batch = sample_chain_state(state, basis, spec, state_label=label)
    svg = render_parallel_axes(batch)

    _write_atomic(config.output_path, svg)
    if config.samples_path is not None:
        _write_atomic(config.samples_path, dump_samples(batch))
    if config.state_dump_path is not None:
        _write_atomic(config.state_dump_path, dump_state(state))
    print(f"n={config.chain.n_sites} state='{label}' samples={spec.sample_count} "
          f"seed={spec.seed} out={config.output_path}")
    return 0


def run_oscillator2d(nu1: int, nu2: int, mass: float, kappa: float,
                     render: RenderSpec, output_path: str,
                     samples_path: str | None = None) -> int:
    """2D oscillator pipeline: sample the (nu1, nu2) eigenstate, write a scatter chart."""
    spec = render
    batch = sample_oscillator2d(nu1, nu2, mass, kappa, spec)
    svg = render_scatter2d(batch)
    _write_atomic(output_path, svg)
    if samples_path is not None:
        _write_atomic(samples_path, dump_samples(batch))
    print(f"n=2 state='{batch.state_label}' samples={spec.sample_count} "
          f"seed={spec.seed} out={output_path}")
    return 0


def main(argv=None) -> int:
    parser = build_arg_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    _apply_preset(args)

    mass = _default(args.mass, 1.0)
    kappa = _default(args.kappa, 1.0)
    gamma = _default(args.gamma, 1.0)

    try:
        if args.mode2d:
            if args.n is not None or args.state is not None:
                raise ValueError("--mode2d takes --nu1/--nu2, not --n or --state")
            if args.dump_state is not None:
                raise ValueError("--dump-state applies only to chain states")
            nu1 = _default(args.nu1, 0)
            nu2 = _default(args.nu2, 0)
            if nu1 < 0 or nu2 < 0:
                raise ValueError(f"quantum numbers must be >= 0, got ({nu1}, {nu2})")
            if mass <= 0 or kappa <= 0:
                raise ValueError("mass and kappa must be positive")
            window = _default(args.window,
                              default_window([math.sqrt(kappa / mass)], mass))
            spec = RenderSpec(
                sample_count=_default(args.samples, 20000),
                window=window,
                seed=_default(args.seed, 0),
                mode="scatter2d",
                color_mode=_default(args.color_mode, "diverging_real"),
                width=_default(args.width, 900),
                height=_default(args.height, 560),
            )
            out = _default(args.out, f"{args.preset}.svg" if args.preset else "oscillator2d.svg")
        else:
            if args.nu1 is not None or args.nu2 is not None:
                raise ValueError("--nu1/--nu2 require --mode2d")
            if args.n is None:
                raise ValueError("--n is required (or use a preset)")
            if args.state is None:
                raise ValueError("--state is required (or use a preset)")
            chain = ChainParams(n_sites=args.n, mass=mass, kappa=kappa, gamma=gamma)
            ast = parse_state_expr(args.state, chain.n_sites)
            window = _default(args.window, chain_window(real_mode_basis(chain)))
            spec = RenderSpec(
                sample_count=_default(args.samples, 20000),
                window=window,
                seed=_default(args.seed, 0),
                mode="parallel_axes",
                color_mode=_default(args.color_mode, "diverging_real"),
                width=_default(args.width, 900),
                height=_default(args.height, 560),
            )
            out = _default(args.out, f"{args.preset}.svg" if args.preset else "chain.svg")
    except (StateExprError, ValueError) as exc:
        print(f"qchain: error: {exc}", file=sys.stderr)
        return 1

    try:
        if args.mode2d:
            return run_oscillator2d(nu1, nu2, mass, kappa, spec, out,
                                    samples_path=args.dump_samples)
        config = RunConfig(chain=chain, state=ast, render=spec, output_path=out,
                           samples_path=args.dump_samples,
                           state_dump_path=args.dump_state)
        return run(config)
    except OSError as exc:
        print(f"qchain: i/o error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, ArithmeticError) as exc:
        print(f"qchain: numeric error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
