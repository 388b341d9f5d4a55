# Import Libraries
from   fractions import Fraction
from   itertools import combinations
from   typing import Iterable, NamedTuple

# Import Classes
from .lattice import CurveConfig, QDivisor

# Import Utilities
from .Utilities import Logger, MatrixUtil, Rationals, DomainError, SingularMatrixError

# Creates the ZariskiResult class
class ZariskiResult(NamedTuple):
    """
    A Zariski decomposition ``D = P + N``.

    :param positive: The nef part P.
    :param negative: The effective part N with negative definite support.
    :param support: The curves carrying N.
    :param big: True iff P^2 > 0.
    :param volume: P^2 when big, else 0.
    """
    positive: QDivisor
    negative: QDivisor
    support: frozenset
    big: bool
    volume: Fraction

    def toJson(self) -> dict:
        """
        :return: The JSON form with "p/q" strings.
        """
        return {
            "positive": self.positive.toJson()["coeffs"],
            "negative": self.negative.toJson()["coeffs"],
            "support":  sorted(self.support),
            "big":      self.big,
            "volume":   Rationals.format(self.volume),
        }

# Creates the Zariski class
class Zariski:
    """
    Use this class to compute Zariski decompositions and volumes of effective Q-divisors
    relative to a curve configuration.

    :param config: The configuration the divisors live on.
    """
    # Largest config the subset oracle will enumerate
    kOracleLimit = 12

    def __init__(self, config: CurveConfig) -> None:
        """
        Constructor for the Zariski class.

        :param config: The configuration the divisors live on.
        """
        # Localize parameters
        self.config = config

        # Variables
        self.logStatus = False

        # Updates log
        Logger.logDebug(f"Zariski initialized on {len(config)} curves", True)

    def decompose(self, divisor: QDivisor) -> ZariskiResult:
        """
        Computes the Zariski decomposition by Fujita's iteration. The candidate support starts
        as the curves meeting ``divisor`` negatively and only grows; at each round the negative
        part is the unique divisor on the support making ``(D - N).C_j = 0`` for all j in it.

        :param divisor: An effective divisor.
        :return: The decomposition.
        """
        self._checkEffective(divisor)

        support  = set(self.config.negativeCurves(divisor))
        negative = QDivisor()
        rounds   = 0

        while (len(support) > 0):
            rounds += 1
            negative = self._solveNegativePart(divisor, support)

            if (not negative.isEffective()):
                raise DomainError("negative-part-not-effective", f"solved negative part {negative} has a negative coefficient")

            # Curves newly met negatively by D - N join the support
            newCurves = set(self.config.negativeCurves(divisor - negative)) - support
            Logger.logDebug(f"Round {rounds}: support {sorted(support)}, new {sorted(newCurves)}", self.logStatus)

            if (len(newCurves) == 0):
                break
            support |= newCurves

        if (not self.config.isNegativeDefinite(negative.support())):
            raise DomainError("not-negative-definite", f"support {sorted(negative.support())} is not negative definite")

        result = self._result(divisor - negative, negative)
        Logger.logInfo(f"Zariski decomposition after {rounds} rounds, volume {Rationals.format(result.volume)}", self.logStatus)

        return result

    def volume(self, divisor: QDivisor) -> Fraction:
        """
        :param divisor: An effective divisor.
        :return: P^2 of the positive part, or 0 when the divisor is not big.
        """
        return self.decompose(divisor).volume

    def oracle(self, divisor: QDivisor) -> ZariskiResult:
        """
        Brute-force decomposition: tries every subset of curves as the support of N and keeps
        the candidates that satisfy all decomposition invariants. Meant for testing.

        :param divisor: An effective divisor.
        :return: The unique valid decomposition.
        """
        if (len(self.config) > Zariski.kOracleLimit):
            raise DomainError("oracle-too-large", f"{len(self.config)} curves, the oracle stops at {Zariski.kOracleLimit}")
        self._checkEffective(divisor)

        found = []
        names = self.config.names
        for size in range(len(names) + 1):
            for subset in combinations(names, size):
                try:
                    negative = self._solveNegativePart(divisor, subset)
                except DomainError:
                    continue

                positive = divisor - negative
                if (not self.isValidDecomposition(divisor, positive, negative)):
                    continue

                result = self._result(positive, negative)
                if (result not in found):
                    found.append(result)

        if (len(found) == 0):
            raise DomainError("no-valid-decomposition", "no subset of curves supports a valid negative part")
        if (len(found) > 1):
            raise DomainError("ambiguous", f"{len(found)} distinct decompositions found")

        return found[0]

    def isValidDecomposition(self, divisor: QDivisor, positive: QDivisor, negative: QDivisor) -> bool:
        """
        Checks the four decomposition invariants: ``P + N = D``, P nef on the tracked curves,
        N effective with negative definite support, and ``P.N_i = 0`` on that support.

        :param divisor: The decomposed divisor D.
        :param positive: The candidate P.
        :param negative: The candidate N.
        """
        if (positive + negative != divisor or not negative.isEffective()):
            return False
        if (not self.config.isNefOnTracked(positive)):
            return False
        if (any(self.config.pairingWithCurve(positive, name) != 0 for name in negative.support())):
            return False

        return self.config.isNegativeDefinite(negative.support())

    def enableLogging(self):
        """
        Enables logging for this class.
        """
        self.logStatus = True

    def _checkEffective(self, divisor: QDivisor):
        if (not divisor.isEffective()):
            raise DomainError("divisor-not-effective", f"{divisor} has a negative coefficient")

    def _solveNegativePart(self, divisor: QDivisor, support: Iterable[str]) -> QDivisor:
        """
        Solves ``N.C_j = D.C_j`` for j in ``support`` with N supported on ``support``.
        """
        names = sorted(set(support), key = self.config.index)
        if (len(names) == 0):
            return QDivisor()

        rhs = [self.config.pairingWithCurve(divisor, name) for name in names]
        try:
            solution = MatrixUtil.solve(self.config.submatrix(names), rhs)
        except SingularMatrixError:
            raise DomainError("gram-singular", f"Gram submatrix on {names} is singular")

        return QDivisor(dict(zip(names, solution)))

    def _result(self, positive: QDivisor, negative: QDivisor) -> ZariskiResult:
        square = self.config.pairing(positive, positive)
        big    = (square > 0)

        return ZariskiResult(positive, negative, negative.support(), big, square if big else Fraction(0))
