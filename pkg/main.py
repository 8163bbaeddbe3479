"""
Exact Solution of the anisotropic Hopfield Model
Command Line Entry Point for Parameter Sweeps, Figure Datasets and Oracle Validation.
See README.md for more details.

License: The Open Software License 3.0 (OSL-3.0)
"""

import os
import sys
import json
import logging
import platform
import datetime
import subprocess

from src import __version__
from src.errors import HopfieldError
from src.cli import Run, build_parser, config_from_args


def software_version() -> str:
    """
    Git Tag of the Checkout, Package Version outside of a Repository
    """
    try:
        output = subprocess.check_output(['git', 'describe', '--tags'], stderr=subprocess.DEVNULL)
        return output.decode('ascii').strip()
    except (OSError, subprocess.CalledProcessError):
        return __version__


def setup_logging(debug: bool, log_file: bool):
    handlers: list[logging.Handler] = [logging.StreamHandler(sys.stdout)]
    if log_file:
        os.makedirs("logs", exist_ok=True)
        log_path = os.path.join("logs", f"{datetime.datetime.now():%Y-%m-%d_%H-%M-%S}.log")
        handlers.insert(0, logging.FileHandler(log_path))
    logging.basicConfig(
        level="DEBUG" if debug else "WARNING",
        format="%(asctime)s: [%(levelname)s] - %(message)s",
        handlers=handlers,
        force=True,
    )

    # Log Meta Info
    system = platform.uname()
    logging.log(level=100, msg=f"System: {system.system}, Node Name: {system.node}, Release: {system.release}, "
                f"Version: {system.version}, Machine: {system.machine}")
    python_version = sys.version.replace('\n', '')
    logging.log(level=100, msg=f"Python Version: {python_version}")
    logging.log(level=100, msg=f"Hopfield Version: {software_version()}")


def write_error_record(output: str | None, error: HopfieldError):
    """
    Machine-readable Error Record next to the requested Output
    """
    record = {"error": type(error).__name__, "message": str(error), "exit_code": error.exit_code}
    path = f"{output}.error.json" if output else "error.json"
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, 'w', encoding="utf-8") as file:
        json.dump(record, file, indent=2, sort_keys=True)
    print(json.dumps(record, sort_keys=True), file=sys.stderr)


def main(argv: list[str] | None = None) -> int:
    """
    Parse Arguments, run the Command and return the Exit Code
    0 Success, 2 Configuration Error, 3 Computation Error, 4 Validation Failure
    """
    args = build_parser().parse_args(argv)
    setup_logging(args.debug, not args.no_log_file)

    output = args.out
    try:
        config = config_from_args(args)
        output = config.output
        Run(config).run()
    except HopfieldError as error:
        logging.error(f"{type(error).__name__}: {error}")
        write_error_record(output, error)
        return error.exit_code
    return 0


if __name__ == "__main__":
    sys.exit(main())
