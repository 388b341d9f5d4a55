# Import Libraries
import random
import pytest
from   fractions import Fraction

# Import Classes
from logsurf import CurveConfig, QDivisor, Catalog

def makeConfig(curves, edges = ()):
    """
    Shorthand for ``CurveConfig.fromCurves``.
    """
    return CurveConfig.fromCurves(curves, edges)

def randomConfig(rng: random.Random, size: int, maxPa: int = 1) -> CurveConfig:
    """
    A validate-clean config with self-intersections in -3..3, genera in 0..maxPa and
    off-diagonal entries in 0..3.
    """
    names  = [f"x{i}" for i in range(size)]
    curves = [(name, rng.randint(-3, 3), rng.randint(0, maxPa)) for name in names]

    edges = []
    for i in range(size):
        for j in range(i + 1, size):
            m = max(0, rng.randint(-3, 3))
            if (m > 0):
                edges.append((names[i], names[j], m))

    return makeConfig(curves, edges)


def randomDivisor(rng: random.Random, names, effective: bool = True) -> QDivisor:
    """
    A divisor with small numerators and denominators in 1..3.
    """
    low = 0 if effective else -4
    return QDivisor({name: Fraction(rng.randint(low, 4), rng.randint(1, 3)) for name in names})

@pytest.fixture
def typeIIPair():
    # Cuspidal fibre class and a (-2)-tail
    return makeConfig([("C1", 0, 1), ("C2", -2, 0)], [("C1", "C2", 1)])

@pytest.fixture
def i3Cycle():
    return makeConfig([("a", -2, 0), ("b", -2, 0), ("c", -2, 0)], [("a", "b", 1), ("b", "c", 1), ("a", "c", 1)])

@pytest.fixture
def e8Tree():
    # E8: chain of seven with a branch at the third curve
    names = [f"e{i}" for i in range(8)]
    edges = [(names[i], names[i + 1], 1) for i in range(6)] + [("e2", "e7", 1)]
    return makeConfig([(name, -2, 0) for name in names], edges)

@pytest.fixture
def iiStarTree(e8Tree):
    # One more curve on the long arm gives the II* fibre, which is only semidefinite
    curves = [(name, -2, 0) for name in e8Tree.names] + [("e8", -2, 0)]
    edges  = [(a, b, 1) for a, b in e8Tree.dualGraph().edges] + [("e6", "e8", 1)]
    return makeConfig(curves, edges)

@pytest.fixture(scope = "session")
def catalog():
    return Catalog()
