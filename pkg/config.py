import os
from typing import Optional

from dotenv import load_dotenv

# Load environment variables
load_dotenv()


def _optional_int(name: str) -> Optional[int]:
    value = os.getenv(name)
    return int(value) if value else None


# Oracle degree bounds; unset means derived from the Graver basis
DEGREE_BOUND = _optional_int("TORIC_DEGREE_BOUND")
MARGIN = _optional_int("TORIC_MARGIN")

# Radius cap of the standard monomial search; unset means derived per call
SEARCH_CAP = _optional_int("TORIC_SEARCH_CAP")

JOBS = int(os.getenv("TORIC_JOBS", "1"))

# The exhaustive oracle is skipped beyond these sizes
ORACLE_MAX_GRAVER = int(os.getenv("TORIC_ORACLE_MAX_GRAVER", "12"))
ORACLE_MAX_MONOMIALS = int(os.getenv("TORIC_ORACLE_MAX_MONOMIALS", "200000"))

RANDOM_WEIGHTS = int(os.getenv("TORIC_RANDOM_WEIGHTS", "5"))

REPORTS_DIR = os.getenv("TORIC_REPORTS_DIR", "reports")
