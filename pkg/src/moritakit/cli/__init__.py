"""Command line interface and the randomized verification suite."""

from .main import build_parser, main, run_command
from .suite import REGISTRY, VerifyConfig, format_report, verify_suite

__all__ = ["REGISTRY", "VerifyConfig", "build_parser", "format_report", "main", "run_command", "verify_suite"]
