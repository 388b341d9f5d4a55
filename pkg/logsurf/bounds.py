# Import Libraries
from   fractions import Fraction
from   typing import Iterable, NamedTuple, Optional

# Import Utilities
from .Utilities import DomainError

# Creates the GlueResult class
class GlueResult(NamedTuple):
    """
    Volume and genus of a stable surface glued from normal pieces.

    :param totalVolume: Sum of the piece volumes.
    :param totalPg: Sum of the piece geometric genera.
    :param noetherOk: ``totalVolume >= totalPg / 143``.
    :param gorensteinViolatedFor: The Gorenstein bound the total volume fails to exceed, else None.
    :param hypothesisViolated: ``totalVolume <= totalPg - 3``.
    """
    totalVolume: Fraction
    totalPg: int
    noetherOk: bool
    gorensteinViolatedFor: Optional[Fraction]
    hypothesisViolated: bool

# Creates the Bounds class
class Bounds:
    """
    Use this class to evaluate the closed-form volume bounds exactly.
    """
    # Denominator of the smallest volume of a stable log surface
    kMinimalVolumeDenominator = 143

    @staticmethod
    def gorensteinNoetherBound(pg: int) -> Fraction:
        """
        The Noether-type bound ``pg - 3 + 4/(pg + 1)`` for normal Gorenstein stable log surfaces.

        :param pg: The geometric genus, at least 1.
        """
        if (pg < 1):
            raise DomainError("invalid-parameter", f"pg must be at least 1, got {pg}")
        return pg - 3 + Fraction(4, pg + 1)

    @staticmethod
    def ellipticCaseVolume(m: int, mults: Iterable[int] = ()) -> Fraction:
        """
        Volume ``m - 2 + 4/(2 + m + sum m_j) + sum (m_j - 1)`` of the log surfaces whose
        semistable part gives an elliptic Iitaka fibration.

        :param m: Multiplicity of the horizontal curve, at least 1.
        :param mults: The multiplicities ``m_j``, each at least 2.
        """
        mults = list(mults)
        if (m < 1 or any(mult < 2 for mult in mults)):
            raise DomainError("invalid-parameter", f"need m >= 1 and every m_j >= 2, got {m}, {mults}")

        return m - 2 + Fraction(4, 2 + m + sum(mults)) + sum(mult - 1 for mult in mults)

    @staticmethod
    def ellipticCaseBound(pg: int) -> Fraction:
        """
        :param pg: The geometric genus, at least 1.
        :return: ``max(1/3, gorensteinNoetherBound(pg))``.
        """
        return max(Fraction(1, 3), Bounds.gorensteinNoetherBound(pg))

    @staticmethod
    def stableNoetherBound(pg: int) -> Fraction:
        """
        :param pg: The geometric genus.
        :return: ``pg / 143``.
        """
        if (pg < 0):
            raise DomainError("invalid-parameter", f"pg must be non-negative, got {pg}")
        return Fraction(pg, Bounds.kMinimalVolumeDenominator)

    @staticmethod
    def bigSemistableBound(pg: int) -> Fraction:
        """
        :param pg: The geometric genus.
        :return: ``max(1, pg - 2)``, the bound when K + C is already big.
        """
        if (pg < 0):
            raise DomainError("invalid-parameter", f"pg must be non-negative, got {pg}")
        return Fraction(max(1, pg - 2))

    @staticmethod
    def singularBoundaryBound(m: int) -> Fraction:
        """
        Lower bound for the volume over a boundary of arithmetic genus at least 2 with a point of
        multiplicity m.

        :param m: The multiplicity, at least 1.
        :return: ``2/9`` for m <= 3, else ``1 - 3/m``.
        """
        if (m < 1):
            raise DomainError("invalid-parameter", f"m must be at least 1, got {m}")
        if (m <= 3):
            return Fraction(2, 9)
        return 1 - Fraction(3, m)

    @staticmethod
    def pullbackVolumeBound(volumeEY: Fraction, m: int) -> Fraction:
        """
        :param volumeEY: vol of the boundary on the base.
        :param m: The largest boundary multiplicity at a blown-up point.
        :return: ``volumeEY / m^2``, a lower bound for every higher model.
        """
        if (m < 1):
            raise DomainError("invalid-parameter", f"m must be at least 1, got {m}")
        return Fraction(volumeEY) / (m * m)

    @staticmethod
    def glueVolumes(components: Iterable[tuple]) -> GlueResult:
        """
        Adds up volumes and genera of the normalised pieces of a non-normal stable surface.

        :param components: ``(volume, pg)`` per piece.
        :return: The totals and the bound checks.
        """
        totalVolume = Fraction(0)
        totalPg     = 0
        for volume, pg in components:
            volume = Fraction(volume)
            if (volume < 0 or pg < 0):
                raise DomainError("invalid-parameter", f"piece ({volume}, {pg}) must be non-negative")
            totalVolume += volume
            totalPg     += pg

        violated = None
        if (totalPg >= 1):
            bound = Bounds.gorensteinNoetherBound(totalPg)
            if (totalVolume <= bound):
                violated = bound

        return GlueResult(
            totalVolume,
            totalPg,
            (totalVolume >= Bounds.stableNoetherBound(totalPg)),
            violated,
            (totalVolume <= totalPg - 3),
        )
