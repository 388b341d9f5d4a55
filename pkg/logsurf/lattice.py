# Import Libraries
import json
import numpy as np
import networkx as nx
from   fractions import Fraction
from   typing import Iterable, Mapping, NamedTuple, Optional, Sequence

# Import Utilities
from .Utilities import MatrixUtil, Rationals, DomainError, MalformedInputError

# Creates the CurveRecord class
class CurveRecord(NamedTuple):
    """
    One tracked curve. The self-intersection lives in the Gram matrix of the owning config.

    :param name: The curve's unique name.
    :param pa: The arithmetic genus.
    :param kdeg: The canonical degree K.C.
    """
    name: str
    pa: int
    kdeg: int

# Creates the QDivisor class
class QDivisor:
    """
    A Q-linear combination of named curves. Zero coefficients are never stored, so two
    divisors are equal exactly when their coefficient maps agree.

    :param coeffs: A mapping from curve names to rationals.
    """
    def __init__(self, coeffs: Optional[Mapping] = None):
        """
        Constructor for the QDivisor class.

        :param coeffs: A mapping from curve names to rationals (ints, Fractions or "p/q" strings).
        """
        self._coeffs = {}
        for name, value in (coeffs or {}).items():
            value = Rationals.parse(value) if isinstance(value, str) else Fraction(value)
            if (value != 0):
                self._coeffs[name] = value

    @classmethod
    def fromCurves(cls, names: Iterable[str], coefficient = 1):
        """
        Builds the divisor putting the same coefficient on every named curve.

        :param names: The curves.
        :param coefficient: The common coefficient.
        """
        return cls({name: coefficient for name in names})

    @classmethod
    def fromJson(cls, data):
        """
        Reads ``{"coeffs": {name: "p/q", ...}}``.

        :param data: The decoded JSON value.
        """
        if (not isinstance(data, dict) or not isinstance(data.get("coeffs"), dict)):
            raise MalformedInputError("A divisor must be an object with a \"coeffs\" object")

        coeffs = {}
        for name, value in data["coeffs"].items():
            if (not isinstance(name, str) or name == ""):
                raise MalformedInputError(f"Bad curve name {name!r} in divisor")
            coeffs[name] = Rationals.parse(value)

        return cls(coeffs)

    @classmethod
    def load(cls, path: str):
        """
        Reads a divisor JSON file.

        :param path: The file path.
        """
        return cls.fromJson(_readJson(path))

    def toJson(self) -> dict:
        """
        :return: The JSON form with names sorted and "p/q" strings.
        """
        return {"coeffs": {name: Rationals.format(self._coeffs[name]) for name in sorted(self._coeffs)}}

    def coefficient(self, name: str) -> Fraction:
        """
        :param name: A curve name.
        :return: The coefficient, 0 when absent.
        """
        return self._coeffs.get(name, Fraction(0))

    def __getitem__(self, name: str) -> Fraction:
        return self.coefficient(name)

    def items(self):
        return self._coeffs.items()

    def names(self) -> tuple:
        return tuple(self._coeffs)

    def support(self) -> frozenset:
        """
        :return: The names with nonzero coefficient.
        """
        return frozenset(self._coeffs)

    def isZero(self) -> bool:
        return (len(self._coeffs) == 0)

    def isEffective(self) -> bool:
        """
        :return: True iff no coefficient is negative.
        """
        return all(value > 0 for value in self._coeffs.values())

    def geq(self, other: "QDivisor") -> bool:
        """
        Componentwise comparison ``self >= other``.

        :param other: The divisor to compare against.
        :return: True iff every coefficient of ``self - other`` is non-negative.
        """
        return (self - other).isEffective()

    def restrictedTo(self, names: Iterable[str]) -> "QDivisor":
        """
        :param names: The curves to keep.
        :return: The part of the divisor supported on ``names``.
        """
        keep = set(names)
        return QDivisor({name: value for name, value in self._coeffs.items() if name in keep})

    def without(self, names: Iterable[str]) -> "QDivisor":
        """
        :param names: The curves to drop.
        :return: The divisor with those coefficients removed.
        """
        drop = set(names)
        return QDivisor({name: value for name, value in self._coeffs.items() if name not in drop})

    def __add__(self, other: "QDivisor") -> "QDivisor":
        coeffs = dict(self._coeffs)
        for name, value in other.items():
            coeffs[name] = coeffs.get(name, Fraction(0)) + value
        return QDivisor(coeffs)

    def __sub__(self, other: "QDivisor") -> "QDivisor":
        return self + (-other)

    def __neg__(self) -> "QDivisor":
        return QDivisor({name: -value for name, value in self._coeffs.items()})

    def __mul__(self, scalar) -> "QDivisor":
        scalar = Fraction(scalar)
        return QDivisor({name: scalar * value for name, value in self._coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if (not isinstance(other, QDivisor)):
            return NotImplemented
        return (self._coeffs == other._coeffs)

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __len__(self) -> int:
        return len(self._coeffs)

    def __repr__(self) -> str:
        terms = " + ".join(f"{Rationals.format(value)}*{name}" for name, value in sorted(self._coeffs.items()))
        return f"QDivisor({terms or '0'})"

# Creates the CurveConfig class
class CurveConfig:
    """
    A configuration of tracked curves on a smooth projective surface: names, arithmetic
    genera, canonical degrees and the symmetric intersection (Gram) matrix.

    Instances are never mutated. Every transform returns a new config.

    :param curves: The curve records, in matrix order.
    :param gram: The integer intersection matrix.
    :param assumeTrackedComplete: Records that nefness against the tracked curves is taken to mean nefness.
    """
    def __init__(self, curves: Sequence[CurveRecord], gram, assumeTrackedComplete: bool = True):
        """
        Constructor for the CurveConfig class.

        :param curves: The curve records, in matrix order.
        :param gram: The integer intersection matrix, any nested sequence or array.
        :param assumeTrackedComplete: Records that nefness against the tracked curves is taken to mean nefness.
        """
        # Localize parameters
        self._curves = tuple(CurveRecord(*record) for record in curves)
        self.assumeTrackedComplete = bool(assumeTrackedComplete)

        # Copies the Gram matrix into a read-only object array of Python ints
        n = len(self._curves)
        if (len(gram) != n):
            raise MalformedInputError("The Gram matrix must be square and match the curve list")

        matrix = np.empty((n, n), dtype = object)
        for i in range(n):
            if (len(gram[i]) != n):
                raise MalformedInputError("The Gram matrix must be square and match the curve list")
            for j in range(n):
                value = gram[i][j]
                if (Fraction(value).denominator != 1):
                    raise MalformedInputError(f"Non-integer intersection number {value!r}")
                matrix[i, j] = int(value)
        matrix.flags.writeable = False
        self._gram = matrix

        # Variables
        self._index = {record.name: i for i, record in enumerate(self._curves)}

    @classmethod
    def fromCurves(cls, curves: Iterable[tuple], edges: Iterable[tuple] = (), assumeTrackedComplete: bool = True):
        """
        Builds a config from ``(name, self, pa)`` triples and ``(a, b, m)`` edges. The canonical degree
        of each curve comes from adjunction.

        :param curves: The ``(name, selfIntersection, pa)`` triples.
        :param edges: The ``(a, b, intersection)`` triples; absent pairs meet in 0.
        :param assumeTrackedComplete: See the class documentation.
        """
        curves  = list(curves)
        records = [CurveRecord(name, pa, 2 * pa - 2 - selfInt) for name, selfInt, pa in curves]
        index   = {name: i for i, (name, _, _) in enumerate(curves)}

        gram = [[0] * len(curves) for _ in curves]
        for i, (_, selfInt, _) in enumerate(curves):
            gram[i][i] = selfInt

        seen = set()
        for a, b, m in edges:
            if (a not in index or b not in index):
                raise MalformedInputError(f"Edge {a}-{b} names an unknown curve")
            if (a == b):
                raise MalformedInputError(f"Edge {a}-{b} joins a curve to itself")

            key = frozenset((a, b))
            if (key in seen):
                raise MalformedInputError(f"Edge {a}-{b} is listed twice")
            seen.add(key)

            gram[index[a]][index[b]] = m
            gram[index[b]][index[a]] = m

        return cls(records, gram, assumeTrackedComplete)

    @classmethod
    def fromJson(cls, data):
        """
        Reads the config JSON schema
        ``{"curves": [{"name", "self", "pa"}], "edges": [{"a", "b", "m"}], "assume_tracked_complete": bool}``.
        An optional ``"kdeg"`` per curve overrides the adjunction value, so inconsistent data can be validated.

        :param data: The decoded JSON value.
        """
        if (not isinstance(data, dict) or not isinstance(data.get("curves"), list)):
            raise MalformedInputError("A config must be an object with a \"curves\" list")

        curves = []
        kdegs  = {}
        for entry in data["curves"]:
            if (not isinstance(entry, dict)):
                raise MalformedInputError("Every curve must be an object")

            name    = entry.get("name")
            selfInt = entry.get("self")
            pa      = entry.get("pa")
            if (not isinstance(name, str) or not _isInteger(selfInt) or not _isInteger(pa)):
                raise MalformedInputError(f"Curve entry {entry!r} needs a string name and integer self and pa")
            curves.append((name, selfInt, pa))

            if ("kdeg" in entry):
                if (not _isInteger(entry["kdeg"])):
                    raise MalformedInputError(f"Curve {name}: kdeg must be an integer")
                kdegs[name] = entry["kdeg"]

        edges = []
        for entry in data.get("edges", []):
            if (not isinstance(entry, dict) or not _isInteger(entry.get("m"))):
                raise MalformedInputError(f"Edge entry {entry!r} needs names a, b and an integer m")
            edges.append((entry.get("a"), entry.get("b"), entry["m"]))

        flag = data.get("assume_tracked_complete", True)
        if (not isinstance(flag, bool)):
            raise MalformedInputError("assume_tracked_complete must be a boolean")

        config = cls.fromCurves(curves, edges, flag)
        if (len(kdegs) == 0):
            return config

        # Stored canonical degrees replace the derived ones
        records = [record._replace(kdeg = kdegs.get(record.name, record.kdeg)) for record in config.curves]
        return cls(records, config.gram, flag)

    @classmethod
    def load(cls, path: str):
        """
        Reads a config JSON file.

        :param path: The file path.
        """
        return cls.fromJson(_readJson(path))

    def toJson(self) -> dict:
        """
        :return: The JSON form, curves in matrix order and edges listed once.
        """
        curves = [{"name": record.name, "self": self._gram[i, i], "pa": record.pa, "kdeg": record.kdeg} for i, record in enumerate(self._curves)]

        edges = []
        for i in range(len(self._curves)):
            for j in range(i + 1, len(self._curves)):
                if (self._gram[i, j] != 0):
                    edges.append({"a": self._curves[i].name, "b": self._curves[j].name, "m": self._gram[i, j]})

        return {"curves": curves, "edges": edges, "assume_tracked_complete": self.assumeTrackedComplete}

    @property
    def curves(self) -> tuple:
        return self._curves

    @property
    def names(self) -> tuple:
        return tuple(record.name for record in self._curves)

    @property
    def gram(self) -> np.ndarray:
        return self._gram

    def __len__(self) -> int:
        return len(self._curves)

    def __contains__(self, name) -> bool:
        return (name in self._index)

    def index(self, name: str) -> int:
        """
        :param name: A curve name.
        :return: The row of the curve in the Gram matrix.
        """
        if (name not in self._index):
            raise DomainError("unknown-curve", f"no tracked curve named {name!r}")
        return self._index[name]

    def record(self, name: str) -> CurveRecord:
        return self._curves[self.index(name)]

    def selfIntersection(self, name: str) -> int:
        i = self.index(name)
        return self._gram[i, i]

    def intersection(self, a: str, b: str) -> int:
        return self._gram[self.index(a), self.index(b)]

    def pa(self, name: str) -> int:
        return self.record(name).pa

    def kdeg(self, name: str) -> int:
        return self.record(name).kdeg

    def validate(self) -> list:
        """
        Checks the config invariants: unique non-empty names, a symmetric Gram matrix with
        non-negative off-diagonal entries, pa >= 0 and adjunction ``kdeg = 2pa - 2 - self``.

        :return: One description per violation. Empty when the config is valid.
        """
        violations = []
        seen = set()

        for i, record in enumerate(self._curves):
            # Names
            if (not isinstance(record.name, str) or record.name == ""):
                violations.append(f"curve #{i}: name must be a non-empty string")
            elif (record.name in seen):
                violations.append(f"curve {record.name}: duplicate name")
            seen.add(record.name)

            # Genus and adjunction
            if (record.pa < 0):
                violations.append(f"curve {record.name}: pa {record.pa} is negative")

            expected = 2 * record.pa - 2 - self._gram[i, i]
            if (record.kdeg != expected):
                violations.append(f"curve {record.name}: kdeg {record.kdeg} breaks adjunction (2*pa-2-self = {expected})")

        # Gram matrix
        n = len(self._curves)
        for i in range(n):
            for j in range(i + 1, n):
                a, b = self._curves[i].name, self._curves[j].name
                if (self._gram[i, j] != self._gram[j, i]):
                    violations.append(f"entry {a}.{b}: gram is not symmetric ({self._gram[i, j]} vs {self._gram[j, i]})")
                if (self._gram[i, j] < 0 or self._gram[j, i] < 0):
                    violations.append(f"entry {a}.{b}: off-diagonal intersection is negative")

        return violations

    def _vector(self, divisor: QDivisor) -> list:
        """
        Resolves the divisor names to ``(row, coefficient)`` pairs.
        """
        return [(self.index(name), value) for name, value in divisor.items()]

    def pairing(self, divisor: QDivisor, other: QDivisor) -> Fraction:
        """
        The bilinear extension of the intersection matrix.

        :param divisor: The first divisor.
        :param other: The second divisor.
        :return: ``divisor . other``.
        """
        left  = self._vector(divisor)
        right = self._vector(other)

        total = Fraction(0)
        for i, x in left:
            for j, y in right:
                entry = self._gram[i, j]
                if (entry != 0):
                    total += x * y * entry

        return total

    def pairingWithCurve(self, divisor: QDivisor, name: str) -> Fraction:
        """
        :param divisor: A divisor.
        :param name: A tracked curve.
        :return: ``divisor . C``.
        """
        j = self.index(name)
        return sum((value * self._gram[i, j] for i, value in self._vector(divisor)), Fraction(0))

    def kdot(self, divisor: QDivisor) -> Fraction:
        """
        :param divisor: A divisor.
        :return: ``K . divisor``.
        """
        return sum((value * self._curves[i].kdeg for i, value in self._vector(divisor)), Fraction(0))

    def paOf(self, divisor: QDivisor) -> Fraction:
        """
        The arithmetic genus from ``2 pa(D) - 2 = D^2 + K.D``.

        :param divisor: A divisor, normally with integer coefficients.
        :return: ``1 + (D^2 + K.D) / 2``.
        """
        return 1 + (self.pairing(divisor, divisor) + self.kdot(divisor)) / 2

    def submatrix(self, names: Iterable[str]) -> np.ndarray:
        """
        :param names: Curve names.
        :return: The Gram submatrix, rows in config order.
        """
        rows = sorted(self.index(name) for name in set(names))
        return self._gram[np.ix_(rows, rows)] if len(rows) > 0 else np.empty((0, 0), dtype = object)

    def isNegativeDefinite(self, subset: Iterable[str]) -> bool:
        """
        :param subset: Curve names.
        :return: True iff the Gram submatrix on ``subset`` is negative definite (True for the empty set).
        """
        return MatrixUtil.isNegativeDefinite(self.submatrix(subset))

    def inertia(self, subset: Optional[Iterable[str]] = None) -> tuple:
        """
        :param subset: Curve names, all curves when omitted.
        :return: ``(positive, negative, zero)`` eigenvalue counts of the Gram submatrix.
        """
        return MatrixUtil.inertia(self.submatrix(self.names if subset is None else subset))

    def isNefOnTracked(self, divisor: QDivisor) -> bool:
        """
        Relative nefness: non-negative against every tracked curve.

        :param divisor: A divisor.
        """
        return (len(self.negativeCurves(divisor)) == 0)

    def negativeCurves(self, divisor: QDivisor) -> list:
        """
        :param divisor: A divisor.
        :return: The tracked curves meeting ``divisor`` negatively, in config order.
        """
        vector = self._vector(divisor)
        result = []
        for j, record in enumerate(self._curves):
            total = sum((value * self._gram[i, j] for i, value in vector), Fraction(0))
            if (total < 0):
                result.append(record.name)
        return result

    def isMinusOneCurve(self, name: str) -> bool:
        """
        :param name: A curve name.
        :return: True iff the curve is smooth rational with self-intersection -1.
        """
        record = self.record(name)
        return (self.selfIntersection(name) == -1 and record.pa == 0 and record.kdeg == -1)

    def minusOneCurves(self) -> list:
        """
        :return: The names of all (-1)-curves, in config order.
        """
        return [name for name in self.names if self.isMinusOneCurve(name)]

    def dualGraph(self, names: Optional[Iterable[str]] = None) -> nx.Graph:
        """
        Builds the dual graph: a vertex per curve decorated with ``selfIntersection``, ``pa`` and ``kdeg``,
        and an edge weighted by the intersection number for every meeting pair.

        :param names: Restricts the graph to these curves. All curves when omitted.
        :return: A ``networkx.Graph``.
        """
        keep  = set(self.names if names is None else names)
        graph = nx.Graph()

        for i, record in enumerate(self._curves):
            if (record.name in keep):
                graph.add_node(record.name, selfIntersection = self._gram[i, i], pa = record.pa, kdeg = record.kdeg)

        for i in range(len(self._curves)):
            for j in range(i + 1, len(self._curves)):
                a, b = self._curves[i].name, self._curves[j].name
                if (a in keep and b in keep and self._gram[i, j] != 0):
                    graph.add_edge(a, b, weight = self._gram[i, j])

        return graph

    def __eq__(self, other) -> bool:
        """
        Structural equality up to the order of the curves.
        """
        if (not isinstance(other, CurveConfig)):
            return NotImplemented
        if (set(self.names) != set(other.names) or self.assumeTrackedComplete != other.assumeTrackedComplete):
            return False

        for name in self.names:
            if (self.record(name) != other.record(name)):
                return False
            for name2 in self.names:
                if (self.intersection(name, name2) != other.intersection(name, name2)):
                    return False

        return True

    def __repr__(self) -> str:
        return f"CurveConfig({len(self)} curves: {', '.join(self.names)})"

def _isInteger(value) -> bool:
    """
    True for JSON integers; booleans are rejected.
    """
    return (isinstance(value, int) and not isinstance(value, bool))

def _readJson(path: str):
    """
    Loads a JSON file, mapping I/O and syntax problems to MalformedInputError.
    """
    try:
        with open(path, "r", encoding = "utf-8") as fp:
            return json.load(fp)
    except (OSError, json.JSONDecodeError) as exc:
        raise MalformedInputError(f"Cannot read {path}: {exc}")
