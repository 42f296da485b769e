"""
Command-line interface package
"""

from .config import CliConfig, Command, OutputFormat, load_defaults
from .report import REPORT_COLUMNS, emit_report, render_records, write_atomic
from .commands import build_parser, resolve_config, run

__all__ = [
    'CliConfig', 'Command', 'OutputFormat', 'load_defaults',
    'REPORT_COLUMNS', 'emit_report', 'render_records', 'write_atomic',
    'build_parser', 'resolve_config', 'run',
]
