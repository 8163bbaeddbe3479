from .config import PRESETS_PATH, Command, SweepAxis, RunConfig, load_presets, build_config
from .commands import AXIS_COLUMNS, model_params, frequencies, evaluate_point
from .validation import SUITES, Check, run_suite
from .run import Run, format_value, json_ready
from .parser import build_parser, config_from_args
__all__ = [
    "PRESETS_PATH", "Command", "SweepAxis", "RunConfig", "load_presets", "build_config",
    "AXIS_COLUMNS", "model_params", "frequencies", "evaluate_point",
    "SUITES", "Check", "run_suite",
    "Run", "format_value", "json_ready",
    "build_parser", "config_from_args",
]
