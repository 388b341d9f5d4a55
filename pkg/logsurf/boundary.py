# Import Libraries
import networkx as nx
from   fractions import Fraction
from   typing import Iterable, NamedTuple

# Import Classes
from .lattice    import CurveConfig, QDivisor
from .birational import BlowupStep, History

# Import Utilities
from .Utilities import DomainError

# Creates the BoundarySplit class
class BoundarySplit(NamedTuple):
    """
    A boundary split into its semistable part and the complement.

    :param semistable: The semistable part C.
    :param complement: The complement E = delta - C.
    :param componentGenera: ``(component names, pa of the reduced sum)`` per connected component of C.
    """
    semistable: frozenset
    complement: frozenset
    componentGenera: tuple

    def toJson(self) -> dict:
        return {
            "C": sorted(self.semistable),
            "E": sorted(self.complement),
            "component_genera": [{"curves": sorted(names), "pa": pa} for names, pa in self.componentGenera],
        }

# Creates the ComponentReport class
class ComponentReport(NamedTuple):
    """
    Shape of one connected component of the complement E.

    :param curves: The curves of the component.
    :param isTree: The dual graph is a tree with simple edges.
    :param allRational: Every curve has pa 0.
    :param pointsOnSemistable: Summed intersection with the semistable part.
    """
    curves: frozenset
    isTree: bool
    allRational: bool
    pointsOnSemistable: int

# Creates the Boundary class
class Boundary:
    """
    Use this class to split a boundary into its semistable part and complement, and to build
    the blow-up tower at a point of the semistable part.
    """
    @staticmethod
    def semistablePart(config: CurveConfig, delta: Iterable[str]) -> BoundarySplit:
        """
        Discards rational curves of ``delta`` meeting the rest of the current set in fewer than
        two points until none is left. Discarding only lowers the other counts, so the fixpoint
        does not depend on the order.

        :param config: The config.
        :param delta: The boundary curves.
        :return: The split.
        """
        delta = set(delta)
        for name in delta:
            config.index(name)

        current = set(delta)
        changed = True
        while (changed == True):
            changed = False
            for name in sorted(current, key = config.index):
                if (config.pa(name) != 0):
                    continue

                meets = sum(config.intersection(name, other) for other in current if other != name)
                if (meets < 2):
                    current.discard(name)
                    changed = True

        graph  = config.dualGraph(current)
        genera = []
        for component in sorted(nx.connected_components(graph), key = lambda names: min(config.index(name) for name in names)):
            genera.append((frozenset(component), int(config.paOf(QDivisor.fromCurves(component)))))

        return BoundarySplit(frozenset(current), frozenset(delta - current), tuple(genera))

    @staticmethod
    def complementComponents(config: CurveConfig, split: BoundarySplit) -> list:
        """
        :param config: The config the split was computed on.
        :param split: A boundary split.
        :return: A ``ComponentReport`` per connected component of the complement.
        """
        graph   = config.dualGraph(split.complement)
        reports = []

        for component in sorted(nx.connected_components(graph), key = lambda names: min(config.index(name) for name in names)):
            subgraph = graph.subgraph(component)
            simple   = all(weight == 1 for _, _, weight in subgraph.edges(data = "weight"))
            points   = sum(config.intersection(name, other) for name in component for other in split.semistable)

            reports.append(ComponentReport(
                frozenset(component),
                (nx.is_tree(subgraph) and simple),
                all(config.pa(name) == 0 for name in component),
                points,
            ))

        return reports

    @staticmethod
    def tower(config: CurveConfig, klass: QDivisor, delta: Iterable[str], cName: str, eName: str, n: int, prefix: str = "G") -> tuple:
        """
        Blows up the point ``C n E`` and then, n - 1 times, the point where C meets the newest
        exceptional curve. Every exceptional curve but the last joins the boundary.

        The coefficient b of E in the positive part of ``klass`` plays no role in the construction;
        it only enters ``towerLowerBound`` and ``towerThreshold``, which bound the resulting volumes.

        :param config: The base config.
        :param klass: The class of K + delta on the base.
        :param delta: The base boundary, containing C and E.
        :param cName: The curve C.
        :param eName: The curve E.
        :param n: The number of blow-ups.
        :param prefix: Exceptional curves are named ``prefix + k``.
        :return: ``(history, class of K + delta^(n))``.
        """
        if (not isinstance(n, int) or n < 1):
            raise DomainError("invalid-parameter", f"tower height must be a positive integer, got {n!r}")
        if (config.intersection(cName, eName) < 1):
            raise DomainError("invalid-parameter", f"{cName} and {eName} do not meet")

        delta = set(delta)
        if (cName not in delta or eName not in delta):
            raise DomainError("invalid-parameter", f"{cName} and {eName} must both lie in the boundary")

        steps    = []
        previous = eName
        for k in range(1, n + 1):
            name = f"{prefix}{k}"
            steps.append(BlowupStep.at(name, [(cName, 1), (previous, 1)], joinsBoundary = (k < n)))
            previous = name

        history = History(config, steps)
        return history, history.totalTransform(klass) + history.boundaryAdjustment(delta)

    @staticmethod
    def towerLowerBound(volume: Fraction, b: Fraction, n: int) -> Fraction:
        """
        :param volume: vol(K + delta) on the base.
        :param b: The coefficient of E in the positive part.
        :param n: The tower height.
        :return: ``volume - b^2 / n``, a lower bound for the tower volume.
        """
        if (n < 1):
            raise DomainError("invalid-parameter", f"tower height must be positive, got {n}")
        return Fraction(volume) - Fraction(b) ** 2 / n

    @staticmethod
    def towerThreshold(volume: Fraction, b: Fraction) -> Fraction:
        """
        :param volume: vol(K + delta) on the base, positive.
        :param b: The coefficient of E in the positive part.
        :return: ``b^2 / volume``; towers higher than this stay big.
        """
        if (Fraction(volume) <= 0):
            raise DomainError("invalid-parameter", "the base class must be big")
        return Fraction(b) ** 2 / Fraction(volume)
