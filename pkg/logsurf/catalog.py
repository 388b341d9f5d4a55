# Import Libraries
import json
import networkx as nx
from   fractions import Fraction
from   importlib import resources
from   typing import NamedTuple, Optional

# Import Classes
from .lattice    import CurveConfig, QDivisor
from .zariski    import Zariski
from .birational import Birational, History, MmpRule
from .boundary   import Boundary
from .kodaira    import Kodaira
from .bounds     import Bounds

# Import Utilities
from .Utilities import Logger, Rationals, DomainError, MalformedInputError

# Creates the ExpectedValue class
class ExpectedValue(NamedTuple):
    """
    An expected output with its provenance.

    :param value: The JSON form of the value ("p/q" strings for numbers).
    :param provenance: "reference" for published values, "derived" for values worked out by hand.
    """
    value: object
    provenance: str

# Creates the CatalogEntry class
class CatalogEntry(NamedTuple):
    """
    A named, scripted pipeline.

    :param id: The entry id.
    :param base: The base config.
    :param script: The blow-up steps.
    :param boundary: The base curves in the boundary.
    :param baseClass: The class of K + boundary on the base, pulled back by the pipeline.
    :param expected: Expected values by name.
    :param pgAnnotation: The stated geometric genus, if any.
    :param parameters: Entry specific inputs of the detailed reports.
    :param notes: Free text.
    """
    id: str
    base: CurveConfig
    script: tuple
    boundary: frozenset
    baseClass: QDivisor
    expected: dict
    pgAnnotation: Optional[int]
    parameters: dict
    notes: str

    @property
    def boundaryRule(self) -> tuple:
        """
        :return: The per-step ``joinsBoundary`` flags.
        """
        return tuple(step.joinsBoundary for step in self.script)

    def toJson(self) -> dict:
        return {
            "id":         self.id,
            "base":       self.base.toJson(),
            "script":     [step.toJson() for step in self.script],
            "boundary":   sorted(self.boundary),
            "base_class": self.baseClass.toJson(),
            "expected":   {key: {"value": item.value, "provenance": item.provenance} for key, item in sorted(self.expected.items())},
            "pg":         self.pgAnnotation,
            "parameters": self.parameters,
            "notes":      self.notes,
        }

# Creates the PipelineResult class
class PipelineResult(NamedTuple):
    """
    :param history: The replayed blow-ups.
    :param config: The config after the log MMP.
    :param klass: The K + boundary class on ``config``.
    :param contracted: The contracted curves in order.
    :param volume: The volume of ``klass``.
    """
    history: History
    config: CurveConfig
    klass: QDivisor
    contracted: list
    volume: Fraction

# Creates the Catalog class
class Catalog:
    """
    Use this class to replay the catalogued pipelines and compare them with their expected values.
    Entries are read from the JSON files of ``logsurf.Catalog_Data``.
    """
    # Data files, table rows first
    kDataFiles = ("table1", "example_143", "example_25_84", "example_rational", "example_tower")
    kProvenances = ("reference", "derived")

    def __init__(self) -> None:
        """
        Constructor for the Catalog class. Loads every entry.
        """
        # Variables
        self.logStatus = False
        self.entries   = {}
        self.tableIds  = []

        for name in Catalog.kDataFiles:
            for data in Catalog._readData(name)["entries"]:
                entry = Catalog.entryFromJson(data)
                if (entry.id in self.entries):
                    raise MalformedInputError(f"Catalog id {entry.id} is listed twice")

                self.entries[entry.id] = entry
                if (name == "table1"):
                    self.tableIds.append(entry.id)

        # Updates log
        Logger.logDebug(f"Catalog initialized with {len(self.entries)} entries", True)

    @staticmethod
    def _readData(name: str) -> dict:
        """
        Reads one JSON file of the data package.
        """
        with resources.files("logsurf.Catalog_Data").joinpath(name + ".json").open("rb") as fp:
            return json.load(fp)

    @staticmethod
    def entryFromJson(data: dict) -> CatalogEntry:
        """
        Builds an entry. The base is either a config or ``{"kodaira": {"kind", "b", "with_tail"}}``;
        the script "resolution" stands for the Kodaira resolution script; the boundary "all" for every
        base curve; the base class "boundary" for the reduced boundary.

        :param data: The decoded JSON entry.
        """
        if (not isinstance(data, dict) or not isinstance(data.get("id"), str) or "base" not in data):
            raise MalformedInputError(f"Catalog entry {data!r} needs an id and a base")

        # Base config
        fiber = data["base"].get("kodaira") if isinstance(data["base"], dict) else None
        if (fiber is not None):
            base = Kodaira.config(fiber["kind"], fiber.get("b"), fiber.get("with_tail", True))
        else:
            base = CurveConfig.fromJson(data["base"])

        # Script
        script = data.get("script", [])
        if (script == "resolution"):
            if (fiber is None):
                raise MalformedInputError(f"{data['id']}: only Kodaira bases have a resolution script")
            script = Kodaira.resolutionScript(fiber["kind"], fiber.get("b"), fiber.get("with_tail", True))
        else:
            script = History.scriptFromJson(script)

        # Boundary and base class
        boundary = data.get("boundary", [])
        boundary = frozenset(base.names if boundary == "all" else boundary)

        baseClass = data.get("base_class", "boundary")
        baseClass = QDivisor.fromCurves(sorted(boundary)) if baseClass == "boundary" else QDivisor.fromJson(baseClass)

        # Expected values
        expected = {}
        for key, item in data.get("expected", {}).items():
            if (not isinstance(item, dict) or "value" not in item or item.get("provenance") not in Catalog.kProvenances):
                raise MalformedInputError(f"{data['id']}: expected value {key} needs a value and a provenance tag")
            expected[key] = ExpectedValue(item["value"], item["provenance"])

        return CatalogEntry(
            data["id"],
            base,
            tuple(script),
            boundary,
            baseClass,
            expected,
            data.get("pg"),
            data.get("parameters", {}),
            data.get("notes", ""),
        )

    def ids(self) -> list:
        return list(self.entries)

    def entry(self, id: str) -> CatalogEntry:
        """
        :param id: An entry id.
        """
        if (id not in self.entries):
            raise DomainError("unknown-entry", f"no catalog entry {id!r}; known: {', '.join(self.entries)}")
        return self.entries[id]

    def replay(self, entry: CatalogEntry) -> History:
        return History(entry.base, entry.script)

    def pipelineClass(self, entry: CatalogEntry) -> tuple:
        """
        :param entry: A catalog entry.
        :return: ``(history, class of K + boundary on the top)``.
        """
        history = self.replay(entry)
        return history, history.totalTransform(entry.baseClass) + history.boundaryAdjustment(entry.boundary)

    def baseVolume(self, entry: CatalogEntry) -> Fraction:
        """
        :param entry: A catalog entry.
        :return: The volume of the base class on the base.
        """
        return Zariski(entry.base).volume(entry.baseClass)

    def runPipeline(self, entry: CatalogEntry) -> PipelineResult:
        """
        Replays the script, forms the K + boundary class, runs the log MMP and takes the volume.

        :param entry: A catalog entry.
        """
        history, klass = self.pipelineClass(entry)
        config, klass, contracted = Birational.mmpContractLog(history.top, klass, MmpRule.kNull, self.logStatus)
        volume = Zariski(config).volume(klass)

        Logger.logInfo(f"{entry.id}: {len(history.steps)} blow-ups, {len(contracted)} contractions, volume {Rationals.format(volume)}", self.logStatus)

        return PipelineResult(history, config, klass, contracted, volume)

    def minVolumePipeline(self, entry: CatalogEntry) -> Fraction:
        """
        :param entry: A catalog entry.
        :return: The volume at the end of the pipeline.
        """
        return self.runPipeline(entry).volume

    def table1(self) -> list:
        """
        Computes the volume of the reduced fibre plus tail and the smallest volume over its
        higher models for every tabulated fibre type.

        :return: One row dict per type.
        """
        rows = []
        for id in self.tableIds:
            entry  = self.entry(id)
            result = self.runPipeline(entry)
            computed = {
                "vol_EY":     self.baseVolume(entry),
                "min_volume": result.volume,
            }
            checks = self.checkExpected(entry, computed)

            rows.append({
                "id":                  id,
                "vol_EY":              computed["vol_EY"],
                "min_volume":          computed["min_volume"],
                "expected_vol_EY":     entry.expected["vol_EY"].value,
                "expected_min_volume": entry.expected["min_volume"].value,
                "pg":                  entry.pgAnnotation,
                "snc":                 Kodaira.isSnc(result.history.top, entry.base.names),
                "match":               all(check["match"] for check in checks.values()),
            })

        return rows

    @staticmethod
    def formatTable(rows: list) -> str:
        """
        :param rows: The rows of ``table1``.
        :return: A fixed-width text table.
        """
        header = f"{'type':<8} {'vol(E_Y)':>9} {'expected':>9} {'min vol':>9} {'expected':>9}  status"
        lines  = [header, "-" * len(header)]

        for row in rows:
            status = "match" if row["match"] else "MISMATCH"
            lines.append(
                f"{row['id']:<8} {Rationals.format(row['vol_EY']):>9} {row['expected_vol_EY']:>9} "
                f"{Rationals.format(row['min_volume']):>9} {row['expected_min_volume']:>9}  {status}"
            )

        return "\n".join(lines)

    def example143(self) -> dict:
        """
        Reaches the volume 1/143 two ways: one blow-up of the node between the branch curve of II*
        and its long-arm neighbour, and the full resolution followed by the log MMP.

        :return: The report.
        """
        entry = self.entry("example-143")
        history, klass = self.pipelineClass(entry)
        single = Zariski(history.top).decompose(klass)
        full   = self.runPipeline(self.entry(entry.parameters["full_resolution"]))

        computed = {
            "volume":                 single.volume,
            "volume_full_resolution": full.volume,
            "positive_part":          dict(single.positive.items()),
            "class_coefficient_G":    klass["G"],
            "self_intersections":     {name: history.top.selfIntersection(name) for name in ("c2", "c3", "G")},
            "contracted":             len(full.contracted),
            "final_curves":           len(full.config),
            "routes_isomorphic":      Catalog._sameShape(history.top.dualGraph(), full.config.dualGraph()),
            "shape_violations":       Catalog.minimalShapeCheck(full.config),
        }

        return {"id": entry.id, "computed": computed, "checks": self.checkExpected(entry, computed)}

    def example2584(self, glueCounts = range(1, 7)) -> dict:
        """
        The log surface of volume 25/84 over a cubic and three lines, and the stable surfaces glued
        from copies of it.

        :param glueCounts: The numbers of glued copies to report.
        :return: The report.
        """
        entry = self.entry("example-25-84")
        history, klass = self.pipelineClass(entry)
        top    = history.top
        result = Zariski(top).decompose(klass)

        delta = history.runningBoundary(entry.boundary)
        split = Boundary.semistablePart(top, delta)
        kc    = history.boundaryAdjustment(entry.parameters["semistable"], useJoins = False)

        glue = []
        for n in glueCounts:
            glued = Bounds.glueVolumes([(result.volume, entry.pgAnnotation)] * n)
            glue.append({
                "copies":                   n,
                "volume":                   glued.totalVolume,
                "pg":                       glued.totalPg,
                "noether_ok":               glued.noetherOk,
                "gorenstein_violated_for":  glued.gorensteinViolatedFor,
                "hypothesis_violated":      glued.hypothesisViolated,
            })

        computed = {
            "volume":                     result.volume,
            "positive_L3":                result.positive["L3"],
            "self_C":                     top.selfIntersection("C"),
            "kdeg_C":                     top.kdeg("C"),
            "self_L1":                    top.selfIntersection("L1"),
            "self_L2":                    top.selfIntersection("L2"),
            "self_L3":                    top.selfIntersection("L3"),
            "pairing_P_L1":               top.pairingWithCurve(result.positive, "L1"),
            "pairing_P_G1":               top.pairingWithCurve(result.positive, "G1"),
            "kc_multiplicity_G1":         kc["G1"],
            "kc_multiplicity_G2":         kc["G2"],
            "boundary_size":              len(delta),
            "semistable":                 split.semistable,
            "complement_trees":           Catalog._complementIsForest(top, split),
            "first_hypothesis_violation": next((row["copies"] for row in glue if row["hypothesis_violated"]), None),
        }

        return {"id": entry.id, "computed": computed, "glue": glue, "checks": self.checkExpected(entry, computed)}

    def exampleRational(self) -> dict:
        """
        Successive blow-ups at the points where a line meets a smooth cubic, followed by contracting
        the (-1)-curves away from the cubic, leave a II* fibre plus tail of (-2)-curves.

        :return: The report.
        """
        entry = self.entry("example-rational")
        history, klass = self.pipelineClass(entry)
        marked = entry.parameters["marked"]

        final, contracted = Birational.mmpContractDisjoint(history.top, marked, self.logStatus)
        chain = sorted(history.runningBoundary(entry.boundary) - set(marked))

        computed = {
            "volume":              Zariski(history.top).volume(klass),
            "contracted":          contracted,
            "chain_all_minus_two": all(final.selfIntersection(name) == -2 for name in chain),
            "ii_star_shape":       Catalog._sameShape(final.dualGraph(chain), Kodaira.config(Kodaira.Fiber.kIIStar).dualGraph()),
            "k_plus_c_trivial":    all(final.kdeg(name) + sum(final.intersection(name, other) for other in marked) == 0 for name in final.names),
        }

        return {"id": entry.id, "computed": computed, "checks": self.checkExpected(entry, computed)}

    def exampleTower(self, heights = range(1, 51)) -> dict:
        """
        The tower of blow-ups at a point where the semistable part meets the complement.

        :param heights: The tower heights to evaluate.
        :return: The report.
        """
        entry  = self.entry("example-tower")
        cName  = entry.parameters["C"]
        eName  = entry.parameters["E"]
        base   = Zariski(entry.base).decompose(entry.baseClass)
        b      = base.positive[eName]

        rows = []
        for n in heights:
            history, klass = Boundary.tower(entry.base, entry.baseClass, entry.boundary, cName, eName, n)
            volume = Zariski(history.top).volume(klass)
            lower  = Boundary.towerLowerBound(base.volume, b, n)
            rows.append({"n": n, "volume": volume, "lower_bound": lower, "within_bounds": (lower <= volume < base.volume)})

        computed = {
            "volume":            base.volume,
            "b":                 b,
            "threshold":         Boundary.towerThreshold(base.volume, b),
            "all_within_bounds": all(row["within_bounds"] for row in rows),
            "increasing":        all(rows[i]["volume"] < rows[i + 1]["volume"] for i in range(len(rows) - 1)),
        }

        return {"id": entry.id, "computed": computed, "tower": rows, "checks": self.checkExpected(entry, computed)}

    @staticmethod
    def minimalShapeCheck(config: CurveConfig) -> list:
        """
        Compares a config with the shape reaching volume 1/143: a single (-1)-curve G meeting two
        (-3)-curves once each, every other curve a (-2)-curve, and contracting G gives II* plus tail.

        :param config: The config.
        :return: One description per deviation. Empty when the shape matches.
        """
        minusOnes = config.minusOneCurves()
        if (len(minusOnes) != 1):
            return [f"expected one (-1)-curve, found {len(minusOnes)}"]

        violations = []
        g = minusOnes[0]
        neighbours = [name for name in config.names if name != g and config.intersection(name, g) != 0]

        if (sorted(config.selfIntersection(name) for name in neighbours) != [-3, -3]):
            violations.append(f"{g} meets {neighbours}, expected two (-3)-curves")
        if (any(config.intersection(name, g) != 1 for name in neighbours)):
            violations.append(f"{g} meets a neighbour more than once")

        for name in config.names:
            if (name != g and name not in neighbours and config.selfIntersection(name) != -2):
                violations.append(f"{name} has self-intersection {config.selfIntersection(name)}, expected -2")

        contracted = Birational.contractMinusOne(config, g)
        if (not Catalog._sameShape(contracted.dualGraph(), Kodaira.config(Kodaira.Fiber.kIIStar).dualGraph())):
            violations.append(f"contracting {g} does not give II* plus tail")

        return violations

    def enableLogging(self):
        """
        Enables logging for this class.
        """
        self.logStatus = True

    @staticmethod
    def _sameShape(graph: nx.Graph, other: nx.Graph) -> bool:
        """
        Dual graph isomorphism respecting self-intersections, genera and intersection numbers.
        """
        nodeMatch = lambda a, b: (a["selfIntersection"] == b["selfIntersection"] and a["pa"] == b["pa"])
        edgeMatch = lambda a, b: (a["weight"] == b["weight"])
        return nx.is_isomorphic(graph, other, node_match = nodeMatch, edge_match = edgeMatch)

    @staticmethod
    def _complementIsForest(config: CurveConfig, split) -> bool:
        reports = Boundary.complementComponents(config, split)
        return all(report.isTree and report.allRational and report.pointsOnSemistable <= 1 for report in reports)

    def checkExpected(self, entry: CatalogEntry, computed: dict) -> dict:
        """
        Compares computed values with the entry's expected values in JSON form. An expected key
        with no computed value is reported as a failed check with ``computed`` set to None.

        :param entry: A catalog entry.
        :param computed: The computed values by name.
        :return: One check dict per expected key.
        """
        checks = {}
        for key, item in entry.expected.items():
            if (key not in computed):
                checks[key] = {"computed": None, "expected": item.value, "provenance": item.provenance, "match": False}
                Logger.logWarning(f"{entry.id}: expected {key} has no computed value", self.logStatus)
                continue

            value = Rationals.jsonable(computed[key])
            checks[key] = {"computed": value, "expected": item.value, "provenance": item.provenance, "match": (value == item.value)}

            if (value != item.value):
                Logger.logWarning(f"{entry.id}: {key} is {value}, expected {item.value} ({item.provenance})", self.logStatus)

        return checks
