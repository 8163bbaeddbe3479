import argparse

from src import __version__
from src.errors import ConfigError
from src.cli.config import Command, RunConfig, SweepAxis, build_config
from src.cli.validation import SUITES


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="main.py", description="Exact solution of the anisotropic Hopfield model: polariton frequencies, "
                                    "field spectra, thermometry and oracle validation.")
    parser.add_argument("command", nargs="?", choices=[command.value for command in Command],
                        help="What to compute, may come from --preset")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

    model = parser.add_argument_group("model")
    model.add_argument("--omega-c", type=float, help="Cavity frequency (unit of all other values)")
    model.add_argument("--omega-b", type=float, help="Matter frequency")
    model.add_argument("--resonance", action="store_true", help="Set omega_b = omega_c")
    model.add_argument("--g", type=float, help="Isotropic coupling g1 = g2 = g")
    model.add_argument("--g1", type=float, help="Co-rotating coupling")
    model.add_argument("--g2", type=float, help="Counter-rotating coupling")
    model.add_argument("--d-rule", help="Comma separated D-rules: trk, zero, rwa, scaled:<d>, explicit:<D>")
    model.add_argument("--overlay", help="Comma separated D-rules whose dispersions are added to spectrum runs")

    spectrum = parser.add_argument_group("spectrum")
    spectrum.add_argument("--gamma", type=float, help="Filter half-width")
    spectrum.add_argument("--t-obs", type=float, help="Observation time, default 10 / gamma")
    spectrum.add_argument("--t-average", type=float, help="Averaging window after t_obs for explicit --t-obs")
    spectrum.add_argument("--no-beat-average", action="store_true",
                          help="Do not average the long-time spectrum over two polariton beat periods")
    spectrum.add_argument("--omega-grid", nargs=3, type=float, metavar=("START", "STOP", "COUNT"))
    spectrum.add_argument("--state", nargs=2, type=int, metavar=("N", "M"), help="Initial Fock state |n, m>")
    spectrum.add_argument("--method", help="quadrature, closed_form, rwa or dsc_limit")

    thermometry = parser.add_argument_group("thermometry")
    thermometry.add_argument("--temperature", type=float, help="k_B T in units of omega_c")
    thermometry.add_argument("--mode", choices=["equilibrium", "critical"], help="Thermometry formula")
    thermometry.add_argument("--measurements", type=int, help="Number N of independent measurements")
    thermometry.add_argument("--cavity-frequency", type=float, help="Cavity frequency in Hz for SI columns")

    run = parser.add_argument_group("run")
    run.add_argument("--sweep", nargs="+", action="append", metavar="ARG",
                     help="VARIABLE START STOP COUNT [linear|log], repeat for a second axis")
    run.add_argument("--levels", type=int, help="Number of energy levels")
    run.add_argument("--cutoff", type=int, help="Fock cutoff of the oracle eigenvalues, propagation uses 4/5 of it")
    run.add_argument("--max-dimension", type=int, help="Largest dense matrix the oracle may build")
    run.add_argument("--suite", choices=["all", *SUITES], help="Validation suite")
    run.add_argument("--workers", type=int, help="Worker processes for sweep points")
    run.add_argument("--out", help="Output path prefix for .csv and .json")
    run.add_argument("--hdf5", action="store_true", help="Also write an HDF5 archive")
    run.add_argument("--preset", help="Named figure recipe from src/cli/presets.yaml")
    run.add_argument("--config", help="YAML file with a recipe")

    logs = parser.add_argument_group("logging")
    logs.add_argument("--debug", action="store_true", help="Log on DEBUG level")
    logs.add_argument("--no-log-file", action="store_true", help="Do not write logs/<timestamp>.log")
    return parser


def _sweep(tokens: list[str]) -> SweepAxis:
    if len(tokens) not in (4, 5):
        raise ConfigError(f"Config: --sweep takes VARIABLE START STOP COUNT [SCALE], got {tokens}.")
    try:
        return SweepAxis.from_value([tokens[0], float(tokens[1]), float(tokens[2]), int(tokens[3]), *tokens[4:]])
    except ValueError as error:
        raise ConfigError(f"Config: Cannot read --sweep {' '.join(tokens)}: {error}") from error


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """
    RunConfig from parsed Arguments, explicit Flags override Preset Values
    :raises ConfigError:
    """
    if args.command is None and args.preset is None and args.config is None:
        raise ConfigError("Config: Give a command, --preset or --config.")
    overrides = {
        "command": args.command, "omega_c": args.omega_c, "omega_b": args.omega_b, "g": args.g, "g1": args.g1,
        "g2": args.g2, "d_rules": args.d_rule, "overlay_rules": args.overlay, "gamma": args.gamma,
        "t_obs": args.t_obs, "t_average": args.t_average, "omega_grid": args.omega_grid, "state": args.state,
        "method": args.method, "temperature": args.temperature, "thermometry_mode": args.mode,
        "measurements": args.measurements, "levels": args.levels, "cutoff": args.cutoff,
        "max_dimension": args.max_dimension, "suite": args.suite, "workers": args.workers, "output": args.out,
        "cavity_frequency": args.cavity_frequency,
        "sweeps": [_sweep(tokens) for tokens in args.sweep] if args.sweep else None,
        "hdf5": True if args.hdf5 else None,
        "average_beat": False if args.no_beat_average else None,
    }
    if args.resonance:
        overrides["omega_b"] = args.omega_c if args.omega_c is not None else 1.0
    return build_config(overrides, preset=args.preset, config_file=args.config)
