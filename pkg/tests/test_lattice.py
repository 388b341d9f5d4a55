# Import Libraries
import json
import random
import pytest
import networkx as nx
from   fractions import Fraction
from   itertools import combinations

# Import Classes
from logsurf import CurveConfig, CurveRecord, QDivisor
from logsurf.Utilities import DomainError, MalformedInputError

from conftest import makeConfig, randomConfig, randomDivisor

def _cofactorDeterminant(rows) -> Fraction:
    """
    Determinant by expansion along the first row.
    """
    if (len(rows) == 0):
        return Fraction(1)

    total = Fraction(0)
    for j, value in enumerate(rows[0]):
        if (value != 0):
            minor = [row[:j] + row[j + 1:] for row in rows[1:]]
            total += (-1) ** j * value * _cofactorDeterminant(minor)
    return total

def _isNegativeDefiniteByMinors(config: CurveConfig, names) -> bool:
    rows = [[config.intersection(a, b) for b in names] for a in names]
    return all((-1) ** k * _cofactorDeterminant([row[:k] for row in rows[:k]]) > 0 for k in range(1, len(names) + 1))

def test_validate_accepts_adjunction():
    assert CurveConfig([CurveRecord("A", 0, 0)], [[-2]]).validate() == []
    assert CurveConfig([CurveRecord("C", 1, 0)], [[0]]).validate() == []

def test_validate_names_the_bad_kdeg():
    violations = CurveConfig([CurveRecord("A", 0, 5)], [[-2]]).validate()

    assert len(violations) == 1
    assert "kdeg" in violations[0]

def test_validate_reports_gram_problems():
    config = CurveConfig([CurveRecord("A", 0, 0), CurveRecord("A", 0, 0)], [[-2, 1], [-1, -2]])
    violations = config.validate()

    assert any("duplicate" in text for text in violations)
    assert any("symmetric" in text for text in violations)
    assert any("negative" in text for text in violations)

def test_pairing_examples(typeIIPair):
    assert typeIIPair.pairing(QDivisor({"C1": 1}), QDivisor({"C2": 1})) == 1

    half = QDivisor({"C1": 1, "C2": Fraction(1, 2)})
    assert typeIIPair.pairing(half, half) == Fraction(1, 2)

    ab = makeConfig([("A", 1, 0), ("B", -2, 0)])
    assert ab.pairing(QDivisor({"A": 1, "B": 1}), QDivisor({"A": 1, "B": 1})) == -1

def test_pairing_rejects_unknown_curves(typeIIPair):
    with pytest.raises(DomainError) as info:
        typeIIPair.pairing(QDivisor({"X": 1}), QDivisor({"C1": 1}))

    assert info.value.errorName == "unknown-curve"
    assert "X" in str(info.value)

def test_pairing_is_symmetric_and_bilinear():
    rng = random.Random(11)
    for _ in range(200):
        config = randomConfig(rng, rng.randint(1, 5))
        d1, d2, d3 = (randomDivisor(rng, config.names, effective = False) for _ in range(3))
        a, b = Fraction(rng.randint(-5, 5), rng.randint(1, 4)), Fraction(rng.randint(-5, 5), rng.randint(1, 4))

        assert config.pairing(d1, d2) == config.pairing(d2, d1)
        assert config.pairing(a * d1 + b * d2, d3) == a * config.pairing(d1, d3) + b * config.pairing(d2, d3)
        assert config.kdot(a * d1 + b * d2) == a * config.kdot(d1) + b * config.kdot(d2)

def test_kdot_examples(typeIIPair):
    assert makeConfig([("A", -2, 0)]).kdot(QDivisor({"A": 1})) == 0
    assert makeConfig([("L", 1, 0)]).kdot(QDivisor({"L": 1})) == -3
    assert typeIIPair.kdot(QDivisor({"C1": 1, "C2": 1})) == 0

    with pytest.raises(DomainError):
        typeIIPair.kdot(QDivisor({"Z": 1}))

def test_pa_of_examples():
    assert makeConfig([("A", -2, 0)]).paOf(QDivisor({"A": 1})) == 0
    assert makeConfig([("C1", -2, 0), ("C2", -2, 0)], [("C1", "C2", 2)]).paOf(QDivisor({"C1": 1, "C2": 1})) == 1
    assert makeConfig([("F", 0, 1)]).paOf(QDivisor({"F": 1})) == 1

def test_pa_of_single_curve_returns_stored_genus():
    rng = random.Random(5)
    for _ in range(100):
        config = randomConfig(rng, rng.randint(1, 4), maxPa = 3)
        for record in config.curves:
            assert config.paOf(QDivisor({record.name: 1})) == record.pa

def test_negative_definite_examples(e8Tree, iiStarTree, i3Cycle):
    assert e8Tree.isNegativeDefinite(e8Tree.names) == True
    assert iiStarTree.isNegativeDefinite(iiStarTree.names) == False
    assert iiStarTree.inertia() == (0, 8, 1)
    assert iiStarTree.isNegativeDefinite(e8Tree.names) == True
    assert i3Cycle.isNegativeDefinite(i3Cycle.names) == False
    assert i3Cycle.isNegativeDefinite(["a"]) == True
    assert i3Cycle.isNegativeDefinite([]) == True

def test_negative_definite_matches_cofactor_minors():
    rng = random.Random(2024)
    for _ in range(300):
        config = randomConfig(rng, rng.randint(1, 6))
        for size in range(1, len(config) + 1):
            for subset in combinations(config.names, size):
                assert config.isNegativeDefinite(subset) == _isNegativeDefiniteByMinors(config, subset)

def test_inertia_of_a_fibre(i3Cycle):
    assert i3Cycle.inertia() == (0, 2, 1)

def test_nef_on_tracked(typeIIPair):
    assert typeIIPair.isNefOnTracked(QDivisor({"C1": 1, "C2": Fraction(1, 2)})) == True
    assert typeIIPair.isNefOnTracked(QDivisor()) == True

    single = makeConfig([("A", -2, 0)])
    assert single.isNefOnTracked(QDivisor({"A": 1})) == False
    assert single.negativeCurves(QDivisor({"A": 1})) == ["A"]

def test_geq():
    assert QDivisor({"C1": 1, "C2": 1}).geq(QDivisor({"C1": 1, "C2": Fraction(1, 2)})) == True
    assert QDivisor({"C1": 1}).geq(QDivisor({"C2": 1})) == False
    assert QDivisor().geq(QDivisor()) == True

def test_divisor_arithmetic_drops_zeros():
    d = QDivisor({"a": 1, "b": "1/2"}) - QDivisor({"a": 1})

    assert d == QDivisor({"b": Fraction(1, 2)})
    assert d.support() == frozenset({"b"})
    assert (2 * d)["b"] == 1
    assert d.without(["b"]).isZero()
    assert QDivisor({"a": -1}).isEffective() == False

def test_minus_one_curves():
    config = makeConfig([("G", -1, 0), ("H", -1, 1), ("A", -2, 0)])

    assert config.isMinusOneCurve("G") == True
    assert config.isMinusOneCurve("H") == False
    assert config.minusOneCurves() == ["G"]

def test_dual_graph(e8Tree, i3Cycle):
    graph = e8Tree.dualGraph()

    assert nx.is_tree(graph)
    assert graph.nodes["e0"]["selfIntersection"] == -2
    assert sorted(degree for _, degree in graph.degree()) == [1, 1, 1, 2, 2, 2, 2, 3]
    assert len(i3Cycle.dualGraph(["a", "b"]).edges) == 1

def test_json_round_trip(tmp_path):
    rng = random.Random(3)
    for _ in range(20):
        config = randomConfig(rng, rng.randint(1, 5), maxPa = 2)
        path = tmp_path / "config.json"
        path.write_text(json.dumps(config.toJson()))

        assert CurveConfig.load(str(path)) == config

    divisor = QDivisor({"a": "2/3", "b": 4})
    assert QDivisor.fromJson(divisor.toJson()) == divisor
    assert divisor.toJson() == {"coeffs": {"a": "2/3", "b": "4"}}

def test_stored_kdeg_overrides_adjunction():
    data = {"curves": [{"name": "A", "self": -2, "pa": 0, "kdeg": 5}], "edges": []}
    assert len(CurveConfig.fromJson(data).validate()) == 1

@pytest.mark.parametrize("data", [
    [],
    {"curves": [{"name": "A", "self": "-2", "pa": 0}]},
    {"curves": [{"name": "A", "self": -2, "pa": 0}], "edges": [{"a": "A", "b": "B", "m": 1}]},
    {"curves": [{"name": "A", "self": -2, "pa": 0}, {"name": "B", "self": -2, "pa": 0}], "edges": [{"a": "A", "b": "B", "m": 1.5}]},
    {"curves": [{"name": "A", "self": -2, "pa": 0}], "assume_tracked_complete": "yes"},
])
def test_malformed_configs(data):
    with pytest.raises(MalformedInputError):
        CurveConfig.fromJson(data)

def test_malformed_divisors(tmp_path):
    with pytest.raises(MalformedInputError):
        QDivisor.fromJson({"coeffs": {"a": 0.5}})

    path = tmp_path / "broken.json"
    path.write_text("{ not json")
    with pytest.raises(MalformedInputError):
        QDivisor.load(str(path))
