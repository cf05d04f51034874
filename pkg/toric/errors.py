class ToricError(Exception):
    """Base class for every error raised by the toric package."""

    exit_code = 1


class InvalidInput(ToricError):
    exit_code = 2


class RankDeficient(InvalidInput):
    """The Gale matrix (or a lattice basis) does not have rank two."""


class ZeroVector(InvalidInput):
    pass


class DegenerateGale(InvalidInput):
    """Fewer than two distinct rays among the Gale vectors."""


class NotProper(ToricError):
    pass


class NotAChamber(ToricError):
    """The complements of the minimal primes do not form a chamber."""


class CapExceeded(ToricError):
    """The standard monomial search hit its radius cap."""


class NotWeaklyGraded(ToricError):
    pass


class WeightOutsideSupport(ToricError):
    exit_code = 2


class WitnessFailed(ToricError):
    pass


class FlipCountViolation(ToricError):
    pass


class FlipTargetMismatch(ToricError):
    pass


class WallNotCoherent(ToricError):
    pass


class InvalidPair(ToricError):
    exit_code = 2


class TooManyGraverElements(ToricError):
    pass
