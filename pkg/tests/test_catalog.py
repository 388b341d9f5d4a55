# Import Libraries
import pytest
from   fractions import Fraction

# Import Classes
from logsurf import Birational, Boundary, Bounds, Catalog, Kodaira, MmpRule, Zariski
from logsurf.Utilities import DomainError, Rationals

kExpectedRows = {
    "I_b:1":  ("1/2", "1/7"),
    "I_b:2":  ("1/2", "1/7"),
    "I_b:3":  ("1/2", "1/7"),
    "II":     ("1/2", "1/7"),
    "III":    ("1/2", "1/7"),
    "IV":     ("1/2", "1/15"),
    "I_0*":   ("1/2", "5/21"),
    "I_b*:0": ("1/6", "1/15"),
    "I_b*:1": ("1/6", "1/22"),
    "I_b*:2": ("1/6", "1/22"),
    "II*":    ("1/42", "1/143"),
    "III*":   ("1/20", "1/63"),
    "IV*":    ("1/12", "1/35"),
}

@pytest.fixture(scope = "module")
def table(catalog):
    return {row["id"]: row for row in catalog.table1()}

def test_catalog_ids(catalog):
    assert catalog.tableIds == list(kExpectedRows)
    assert {"example-143", "example-25-84", "example-rational", "example-tower"} <= set(catalog.ids())

    with pytest.raises(DomainError) as info:
        catalog.entry("V")
    assert info.value.errorName == "unknown-entry"

def test_table_values(table):
    for id, (volumeEY, minVolume) in kExpectedRows.items():
        row = table[id]
        assert Rationals.format(row["vol_EY"]) == volumeEY
        assert Rationals.format(row["min_volume"]) == minVolume
        assert row["snc"] == True
        assert row["pg"] == 1

def test_table_flags_only_the_leaf_tail_row(table):
    assert [id for id, row in table.items() if row["match"] == False] == ["I_b*:0"]
    assert table["I_b*:0"]["expected_min_volume"] == "1/22"

    text = Catalog.formatTable(list(table.values()))
    assert text.count("MISMATCH") == 1
    assert "1/143" in text

def test_minimal_volume_pipeline_examples(catalog):
    assert catalog.minVolumePipeline(catalog.entry("II*")) == Fraction(1, 143)
    assert catalog.minVolumePipeline(catalog.entry("IV")) == Fraction(1, 15)

def test_full_ii_star_resolution(catalog):
    result = catalog.runPipeline(catalog.entry("II*"))

    assert len(result.history.top) == 19
    assert len(result.contracted) == 8
    assert len(result.config) == 11
    assert Catalog.minimalShapeCheck(result.config) == []

def test_every_entry_replays_cleanly(catalog):
    for id in catalog.ids():
        entry = catalog.entry(id)
        assert catalog.replay(entry).top.validate() == []

def test_pipeline_volumes_respect_the_noether_bound_and_never_grow(catalog):
    for id in catalog.ids():
        entry  = catalog.entry(id)
        volume = catalog.minVolumePipeline(entry)

        if (entry.pgAnnotation is not None):
            assert volume >= Bounds.stableNoetherBound(entry.pgAnnotation)
        assert volume <= catalog.baseVolume(entry)

def test_pipeline_volumes_respect_the_pullback_bound(catalog):
    for id in catalog.tableIds + ["example-143"]:
        entry = catalog.entry(id)
        m     = max(catalog.replay(entry).maxMultiplicity(entry.boundary), 1)

        history, klass = catalog.pipelineClass(entry)
        volume = Zariski(history.top).volume(klass)
        assert volume >= Bounds.pullbackVolumeBound(catalog.baseVolume(entry), m)

def test_example_143(catalog):
    report   = catalog.example143()
    computed = report["computed"]

    assert all(check["match"] for check in report["checks"].values())
    assert computed["volume"] == Fraction(1, 143)
    assert computed["volume_full_resolution"] == Fraction(1, 143)
    assert computed["class_coefficient_G"] == 1
    assert computed["routes_isomorphic"] == True

    positive = computed["positive_part"]
    assert [positive[f"c{i}"] for i in (0, 1, 2)] == [Fraction(2, 11), Fraction(4, 11), Fraction(6, 11)]
    assert [positive[name] for name in ("c3", "c4", "c5", "c6", "c7", "t")] == [Fraction(k, 13) for k in range(6, 0, -1)]
    assert positive["c8"] == Fraction(3, 11)
    assert Fraction(6, 11) + Fraction(6, 13) - 1 == computed["volume"]

def test_minimal_shape_check_flags_the_fibre_itself():
    assert Catalog.minimalShapeCheck(Kodaira.config("II*")) != []

def test_example_25_84(catalog):
    report   = catalog.example2584()
    computed = report["computed"]

    assert all(check["match"] for check in report["checks"].values())
    assert computed["volume"] == Fraction(25, 84)
    assert computed["self_L3"] == -16
    assert computed["positive_L3"] == Fraction(7, 8)
    assert computed["semistable"] == frozenset({"C"})
    assert computed["first_hypothesis_violation"] == 5

    glue = report["glue"]
    assert [row["copies"] for row in glue] == [1, 2, 3, 4, 5, 6]
    assert glue[4]["gorenstein_violated_for"] == Fraction(8, 3)
    assert all(row["noether_ok"] for row in glue)

def test_example_25_84_boundary_shape(catalog):
    entry   = catalog.entry("example-25-84")
    history = catalog.replay(entry)
    delta   = history.runningBoundary(entry.boundary)

    split = Boundary.semistablePart(history.top, delta)
    for report in Boundary.complementComponents(history.top, split):
        assert report.isTree and report.allRational
        assert report.pointsOnSemistable <= 1

def test_example_rational(catalog):
    report = catalog.exampleRational()

    assert all(check["match"] for check in report["checks"].values())
    assert report["computed"]["volume"] == Fraction(1, 143)
    assert report["computed"]["contracted"] == ["G"]

def test_example_tower(catalog):
    report = catalog.exampleTower(range(1, 11))

    assert all(check["match"] for check in report["checks"].values())
    assert [row["volume"] for row in report["tower"]] == [Fraction(n, 2 * n + 1) for n in range(1, 11)]
    assert all(row["within_bounds"] for row in report["tower"])

def test_reports_carry_provenance(catalog):
    report = catalog.example143()

    assert set(report) == {"id", "computed", "checks"}
    for check in report["checks"].values():
        assert check["provenance"] in Catalog.kProvenances
        assert set(check) == {"computed", "expected", "provenance", "match"}

def test_entry_json_round_trip(catalog):
    entry = catalog.entry("example-143")
    again = Catalog.entryFromJson(entry.toJson())

    assert again == entry
    assert again.boundaryRule == (False,)

def test_expected_keys_without_a_computed_value_fail(catalog):
    data = catalog.entry("II*").toJson()
    data["expected"]["volum"] = {"value": "1/143", "provenance": "reference"}
    entry = Catalog.entryFromJson(data)

    computed = {"vol_EY": catalog.baseVolume(entry), "min_volume": catalog.minVolumePipeline(entry)}
    checks   = catalog.checkExpected(entry, computed)

    assert checks["vol_EY"]["match"] == True
    assert checks["min_volume"]["match"] == True
    assert checks["volum"] == {"computed": None, "expected": "1/143", "provenance": "reference", "match": False}

def test_both_log_mmp_rules_give_the_same_volumes(catalog):
    for id in catalog.tableIds + ["example-143"]:
        history, klass = catalog.pipelineClass(catalog.entry(id))

        volumes = {}
        contracted = {}
        for rule in MmpRule:
            config, pushed, names = Birational.mmpContractLog(history.top, klass, rule)
            volumes[rule]    = Zariski(config).volume(pushed)
            contracted[rule] = names

        assert volumes[MmpRule.kNull] == volumes[MmpRule.kNegative]
        assert contracted[MmpRule.kNegative] == []

        if (id == "II*"):
            assert len(contracted[MmpRule.kNull]) == 8
            assert volumes[MmpRule.kNull] == Fraction(1, 143)
