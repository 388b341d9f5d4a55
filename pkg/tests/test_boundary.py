# Import Libraries
import random
import pytest
from   fractions import Fraction

# Import Classes
from logsurf import Boundary, CurveConfig, QDivisor, Zariski
from logsurf.Utilities import DomainError

from conftest import makeConfig, randomConfig

def _permuted(config: CurveConfig, rng: random.Random) -> CurveConfig:
    order = list(range(len(config)))
    rng.shuffle(order)

    records = [config.curves[i] for i in order]
    gram    = [[config.gram[i, j] for j in order] for i in order]
    return CurveConfig(records, gram, config.assumeTrackedComplete)

@pytest.fixture
def ellipticPair():
    # Elliptic F of square 0 meeting a (-2)-curve E once; K is numerically trivial
    return makeConfig([("F", 0, 1), ("E", -2, 0)], [("F", "E", 1)])

def test_chain_of_rational_curves_has_no_semistable_part():
    config = makeConfig([("a", -2, 0), ("b", -2, 0), ("c", -2, 0)], [("a", "b", 1), ("b", "c", 1)])
    split  = Boundary.semistablePart(config, config.names)

    assert split.semistable == frozenset()
    assert split.complement == frozenset({"a", "b", "c"})
    assert split.componentGenera == ()

    reports = Boundary.complementComponents(config, split)
    assert len(reports) == 1
    assert reports[0].isTree and reports[0].allRational
    assert reports[0].pointsOnSemistable == 0

def test_fibre_with_tail(typeIIPair):
    split = Boundary.semistablePart(typeIIPair, ["C1", "C2"])

    assert split.semistable == frozenset({"C1"})
    assert split.complement == frozenset({"C2"})
    assert split.componentGenera == ((frozenset({"C1"}), 1),)
    assert split.toJson() == {"C": ["C1"], "E": ["C2"], "component_genera": [{"curves": ["C1"], "pa": 1}]}

def test_cycle_survives(i3Cycle):
    split = Boundary.semistablePart(i3Cycle, i3Cycle.names)

    assert split.semistable == frozenset(i3Cycle.names)
    assert split.componentGenera == ((frozenset(i3Cycle.names), 1),)

def test_unknown_boundary_curve(typeIIPair):
    with pytest.raises(DomainError):
        Boundary.semistablePart(typeIIPair, ["C1", "Q"])

def test_semistable_part_is_an_order_free_closure():
    rng = random.Random(404)
    for _ in range(300):
        config = randomConfig(rng, rng.randint(1, 6))
        delta  = rng.sample(config.names, rng.randint(0, len(config)))
        split  = Boundary.semistablePart(config, delta)

        assert Boundary.semistablePart(config, split.semistable).semistable == split.semistable
        assert split.semistable | split.complement == frozenset(delta)

        shuffled = Boundary.semistablePart(_permuted(config, rng), delta)
        assert shuffled.semistable == split.semistable
        assert set(shuffled.componentGenera) == set(split.componentGenera)

        # The discarded curves always form a forest of rational curves
        for report in Boundary.complementComponents(config, split):
            assert report.isTree and report.allRational

def test_tower_of_height_one(ellipticPair):
    klass = QDivisor({"F": 1, "E": 1})
    history, top = Boundary.tower(ellipticPair, klass, ["F", "E"], "F", "E", 1)

    assert history.exceptionalNames() == ("G1",)
    assert top == history.totalTransform(klass) - QDivisor({"G1": 1})

@pytest.mark.parametrize("n", [1, 2, 5, 12])
def test_tower_chain_shape(ellipticPair, n):
    history, _ = Boundary.tower(ellipticPair, QDivisor({"F": 1, "E": 1}), ["F", "E"], "F", "E", n)
    top = history.top

    assert top.minusOneCurves() == [f"G{n}"]
    assert top.selfIntersection("F") == -n
    assert top.selfIntersection("E") == -3
    assert all(top.selfIntersection(f"G{k}") == -2 for k in range(1, n))

    # E - G1 - ... - Gn - F
    chain = ["E"] + [f"G{k}" for k in range(1, n + 1)] + ["F"]
    graph = top.dualGraph()
    assert graph.number_of_edges() == len(chain) - 1
    assert all(graph.has_edge(a, b) for a, b in zip(chain, chain[1:]))

    # Every exceptional curve but the last joins the boundary
    assert history.runningBoundary(["F", "E"]) == frozenset(chain) - {f"G{n}"}

def test_tower_volumes_stay_between_the_bounds(ellipticPair):
    klass = QDivisor({"F": 1, "E": 1})
    base  = Zariski(ellipticPair).decompose(klass)
    b     = base.positive["E"]

    assert base.volume == Fraction(1, 2)
    assert b == Fraction(1, 2)
    assert Boundary.towerThreshold(base.volume, b) == Fraction(1, 2)

    previous = Fraction(0)
    for n in range(1, 51):
        history, top = Boundary.tower(ellipticPair, klass, ["F", "E"], "F", "E", n)
        volume = Zariski(history.top).volume(top)

        assert volume == Fraction(n, 2 * n + 1)
        assert Boundary.towerLowerBound(base.volume, b, n) <= volume < base.volume
        assert volume > previous
        previous = volume

def test_tower_preconditions(ellipticPair):
    klass = QDivisor({"F": 1, "E": 1})

    for args in [(["F", "E"], "F", "E", 0), (["F"], "F", "E", 2), (["F", "E"], "F", "E", "3")]:
        with pytest.raises(DomainError) as info:
            Boundary.tower(ellipticPair, klass, *args)
        assert info.value.errorName == "invalid-parameter"

    apart = makeConfig([("F", 0, 1), ("E", -2, 0)])
    with pytest.raises(DomainError):
        Boundary.tower(apart, klass, ["F", "E"], "F", "E", 1)

def test_tower_bound_helpers():
    assert Boundary.towerLowerBound(Fraction(1, 2), Fraction(1, 2), 4) == Fraction(7, 16)
    assert Boundary.towerThreshold(Fraction(1, 143), Fraction(1, 11)) == Fraction(143, 121)

    with pytest.raises(DomainError):
        Boundary.towerLowerBound(1, 1, 0)
    with pytest.raises(DomainError):
        Boundary.towerThreshold(0, 1)
