import logging
import traceback
from abc import ABC, abstractmethod
from typing import List, Optional

from schemas import VerificationReport
from toric.intlinalg import GaleLattice

logger = logging.getLogger("pipeline")


class Pipeline(ABC):
    """Base abstract class for verification pipelines"""

    def __init__(self, lattice: GaleLattice):
        self.lattice = lattice

    @abstractmethod
    def _run_pipeline_steps(self, selected_blocks: Optional[List[str]] = None) -> VerificationReport:
        """Execute the pipeline steps on the lattice"""
        pass

    def _generate_report(self, report: VerificationReport, pdf_path: Optional[str] = None) -> Optional[str]:
        """Render the report to a file; returns the path written, if any"""
        return None

    def process(self, selected_blocks: Optional[List[str]] = None,
                pdf_path: Optional[str] = None) -> Optional[VerificationReport]:
        """
        Run the lattice through the pipeline

        Args:
            selected_blocks: Optional list of building block IDs to run; all blocks if None
            pdf_path: Optional path of a rendered report

        Returns:
            The report, or None if the pipeline itself broke down
        """
        try:
            report = self._run_pipeline_steps(selected_blocks)
            if pdf_path:
                self._generate_report(report, pdf_path)
            return report
        except Exception as e:
            logger.error(f"Error in pipeline processing: {str(e)}")
            logger.error(traceback.format_exc())
            return None
