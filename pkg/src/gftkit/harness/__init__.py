from .config import Config, load_config
from .report import CheckResult, VerificationReport, render_csv, render_json, render_table
from .scenarios import REGISTRY, Scenario, list_scenarios, run_many, run_scenario

__all__ = [
    "CheckResult",
    "Config",
    "REGISTRY",
    "Scenario",
    "VerificationReport",
    "list_scenarios",
    "load_config",
    "render_csv",
    "render_json",
    "render_table",
    "run_many",
    "run_scenario",
]
