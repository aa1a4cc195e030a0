# services/rendering/__init__.py
from .report_formatter import report_to_json, report_to_json_line, parse_report, report_to_table, verdict_dataframe
from .picture_renderer import render_svg, render_tikz, render_table, to_decimal_string, RENDERERS

__all__ = [
    "report_to_json", "report_to_json_line", "parse_report", "report_to_table", "verdict_dataframe",
    "render_svg", "render_tikz", "render_table", "to_decimal_string", "RENDERERS",
]
