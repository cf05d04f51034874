import logging
from typing import Optional

from document_generator.report_generator import ReportGenerator
from schemas import VerificationReport

logger = logging.getLogger("verification_report")


def generate_verification_report(report: VerificationReport, report_path: str) -> Optional[str]:
    """
    Generate the PDF rendering of a verification report.

    Returns:
        str: Path to the generated report file, or None if generation failed
    """
    path = ReportGenerator.generate_report(report, report_path)
    if path:
        logger.info(f"Verification report generated successfully: {path}")
    else:
        logger.error("Failed to generate verification report.")
    return path
