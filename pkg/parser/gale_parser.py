import json
import logging
from typing import Tuple

from pydantic import ValidationError

from schemas import GaleInput
from toric.errors import InvalidInput
from toric.intlinalg import GaleLattice, NormalizationLog, normalize_gale

logger = logging.getLogger("gale_parser")


class GaleParser:
    @staticmethod
    def parse_text(text: str) -> GaleInput:
        """
        Validate a JSON document of the form {"name": ..., "basis": [[a, b], ...]}.
        Non-integer entries (floats, booleans, strings) are rejected.
        """
        try:
            return GaleInput.model_validate_json(text)
        except ValidationError as e:
            raise InvalidInput(f"malformed input: {e.errors()[0]['msg']}") from e
        except json.JSONDecodeError as e:
            raise InvalidInput(f"malformed JSON: {e}") from e

    @staticmethod
    def parse_input(path: str) -> Tuple[GaleLattice, NormalizationLog]:
        """
        Read a Gale matrix from a JSON file and normalize it.
        The normalization log goes to the logger, never to stdout.
        """
        try:
            with open(path) as f:
                text = f.read()
        except OSError as e:
            raise InvalidInput(f"cannot read {path}: {e}") from e

        data = GaleParser.parse_text(text)
        lattice, log = normalize_gale(data.basis)
        lattice = GaleLattice(lattice.rows, name=data.name)
        if log.empty:
            logger.info(f"read {lattice.n} Gale vectors, nothing to normalize")
        else:
            logger.info(f"normalized {log.n_original} Gale vectors to {lattice.n}")
        return lattice, log
