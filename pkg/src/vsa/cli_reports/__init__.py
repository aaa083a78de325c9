"""
cli_reports/__init__.py
"""

from .reports import EXIT_CLEAN, EXIT_ERROR, EXIT_VIOLATIONS, Report
from .fixtures import (
    ACTION_CUTOFFS,
    ACTION_FIXTURES,
    ALGEBRA_FIXTURES,
    HOPF_FIXTURES,
    algebra_from_json,
    fixture_listing,
    load_action,
    load_algebra,
    load_hopf,
    parse_h,
)
from .cli import build_parser, main, run
