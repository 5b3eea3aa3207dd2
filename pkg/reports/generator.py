"""
Human-readable rendering with Jinja2 templates
"""
import logging
from pathlib import Path
from typing import List

from jinja2 import Environment, FileSystemLoader

from config.settings import TEMPLATES_DIR
from reports.serializers import Output, format_cell
from verify.base_suite import SuiteResult

logger = logging.getLogger(__name__)


class ReportGenerator:
    """Renders command results and verification reports"""

    def __init__(self, templates_dir: Path = TEMPLATES_DIR):
        """
        Initialize report generator

        Args:
            templates_dir: Directory holding the .j2 templates
        """
        self.templates_dir = templates_dir
        self.env = Environment(loader=FileSystemLoader(str(self.templates_dir)),
                               trim_blocks=True, lstrip_blocks=True, keep_trailing_newline=False)

    def render_pretty(self, output: Output) -> str:
        """
        Render a result as an aligned table

        Args:
            output: Command result

        Returns:
            Rendered text
        """
        template = self.env.get_template('pretty.txt.j2')
        cells = [[format_cell(value) for value in row] for row in output.rows]
        widths = [len(name) for name in output.header]
        for row in cells:
            widths = [max(width, len(value)) for width, value in zip(widths, row)]
        return template.render(
            title=output.title or output.kind,
            header=[name.ljust(width) for name, width in zip(output.header, widths)],
            rows=[[value.ljust(width) for value, width in zip(row, widths)] for row in cells],
        ).rstrip()

    def render_verification(self, results: List[SuiteResult]) -> str:
        """
        Render the verification report

        Args:
            results: Suite results in run order

        Returns:
            Rendered text
        """
        template = self.env.get_template('verify_report.txt.j2')
        return template.render(
            results=results,
            passed=all(result.passed for result in results),
        ).rstrip()

    def write_report(self, results: List[SuiteResult], output_file: Path) -> Path:
        """Write the verification report to a file"""
        output_file.parent.mkdir(parents=True, exist_ok=True)
        output_file.write_text(self.render_verification(results) + "\n", encoding='utf-8')
        logger.info(f"Generated: {output_file}")
        return output_file
