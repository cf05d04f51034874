import logging
from typing import List, Optional

import numpy as np

from pipeline.verification.verification_pipeline import VerificationPipeline
from schemas import VerificationReport, VerifyOptions
from toric.errors import InvalidInput
from toric.intlinalg import GaleLattice, normalize_gale

logger = logging.getLogger("fuzz")

MAX_N = 6
MAX_ENTRY = 5


def random_lattice(rng: np.random.Generator) -> GaleLattice:
    """A normalized rank two Gale matrix with at most MAX_N rows and entries
    in [-MAX_ENTRY, MAX_ENTRY]."""
    while True:
        n = int(rng.integers(2, MAX_N + 1))
        rows = rng.integers(-MAX_ENTRY, MAX_ENTRY + 1, size=(n, 2)).tolist()
        try:
            lattice, _ = normalize_gale(rows)
        except InvalidInput:
            continue
        return GaleLattice(lattice.rows, name=str(rows))


def fuzz(seed: int, count: int, options: Optional[VerifyOptions] = None) -> List[VerificationReport]:
    rng = np.random.default_rng(seed)
    options = options or VerifyOptions(seed=seed)
    reports = []
    for k in range(count):
        lattice = random_lattice(rng)
        logger.info(f"fuzz case {k + 1}/{count}: {lattice.rows}")
        report = VerificationPipeline(lattice, options).process()
        if report is None:
            report = VerificationReport(name=lattice.name, checks=[], overall=False)
        if not report.overall:
            logger.error(f"fuzz case {k + 1} failed for {lattice.rows}")
        reports.append(report)
    return reports
