import datetime
import logging
import os
import traceback
from typing import Optional

from reportlab.lib import colors
from reportlab.lib.enums import TA_CENTER, TA_LEFT
from reportlab.lib.pagesizes import letter
from reportlab.lib.styles import ParagraphStyle, getSampleStyleSheet
from reportlab.lib.units import inch
from reportlab.platypus import Paragraph, SimpleDocTemplate, Spacer, Table, TableStyle

from schemas import VerificationReport

logger = logging.getLogger("report_generator")


class ReportGenerator:
    """
    Class for generating PDF reports from verification results.
    """

    @staticmethod
    def generate_report(report: VerificationReport, report_path: str) -> Optional[str]:
        """
        Generate a PDF report from a verification report.

        Args:
            report: The verification results to include in the report.
            report_path: Where to write the PDF.

        Returns:
            str: Path to the generated report file, or None if generation failed.
        """
        try:
            logger.info(f"Starting report generation at {report_path}")
            doc = SimpleDocTemplate(
                report_path,
                pagesize=letter,
                rightMargin=0.75 * inch,
                leftMargin=0.75 * inch,
                topMargin=1.1 * inch,
                bottomMargin=1.1 * inch
            )

            styles = getSampleStyleSheet()
            title_style = ParagraphStyle(
                'CustomTitle',
                parent=styles['Title'],
                fontSize=18,
                alignment=TA_CENTER,
                spaceAfter=12
            )
            heading_style = ParagraphStyle(
                'CustomHeading1',
                parent=styles['Heading1'],
                fontSize=14,
                spaceAfter=8,
                spaceBefore=12
            )
            cell_style = ParagraphStyle(
                'Cell',
                parent=styles['Normal'],
                fontSize=8,
                alignment=TA_LEFT
            )

            elements = []
            title = report.name or "unnamed lattice"
            elements.append(Paragraph(f"Toric Hilbert scheme verification: {title}", title_style))
            elements.append(Paragraph(f"Generated on {datetime.datetime.now().strftime('%B %d, %Y')}", styles['Normal']))
            elements.append(Spacer(1, 18))

            elements.append(Paragraph("Parameters", heading_style))
            rows = [[Paragraph(str(k), cell_style), Paragraph(str(v), cell_style)] for k, v in report.parameters.items()]
            if rows:
                elements.append(Table(rows, colWidths=[2 * inch, 4.5 * inch]))
            elements.append(Spacer(1, 12))

            elements.append(Paragraph("Checks", heading_style))
            rows = [["Check", "Property", "Result"]]
            for check in report.checks:
                rows.append([
                    Paragraph(check.name, cell_style),
                    Paragraph(check.ref, cell_style),
                    "pass" if check.passed else "FAIL",
                ])
            table = Table(rows, colWidths=[1.7 * inch, 4 * inch, 0.8 * inch], repeatRows=1)
            style = [
                ('BACKGROUND', (0, 0), (-1, 0), colors.lightgrey),
                ('GRID', (0, 0), (-1, -1), 0.25, colors.grey),
                ('VALIGN', (0, 0), (-1, -1), 'TOP'),
            ]
            for row, check in enumerate(report.checks, start=1):
                if not check.passed:
                    style.append(('TEXTCOLOR', (2, row), (2, row), colors.red))
            table.setStyle(TableStyle(style))
            elements.append(table)
            elements.append(Spacer(1, 12))

            verdict = "all checks passed" if report.overall else "some checks FAILED"
            elements.append(Paragraph(f"Overall: {verdict}", heading_style))

            def add_page_template(canvas_obj, doc_obj):
                canvas_obj.setFont("Helvetica", 10)
                canvas_obj.drawRightString(555, 25, f"Page {doc_obj.page}")

            doc.build(elements, onFirstPage=add_page_template, onLaterPages=add_page_template)
            logger.info(f"Successfully generated report at {report_path}")
            return report_path

        except Exception as e:
            logger.error(f"Error generating report: {str(e)}")
            logger.error(traceback.format_exc())
            return None


def default_report_path(reports_dir: str, name: Optional[str]) -> str:
    stem = (name or "lattice").replace(" ", "_")
    return os.path.join(reports_dir, f"verification_{stem}.pdf")
