"""
Entry point for `python -m vsa`.
"""

from vsa.cli_reports.cli import main

raise SystemExit(main())
