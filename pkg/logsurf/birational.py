# Import Libraries
from   enum import Enum
from   fractions import Fraction
from   typing import Iterable, NamedTuple, Sequence

# Import Classes
from .lattice import CurveConfig, CurveRecord, QDivisor, _readJson
from .zariski import Zariski

# Import Utilities
from .Utilities import Logger, DomainError, MalformedInputError

# Creates the BlowupStep class
class BlowupStep(NamedTuple):
    """
    One blow-up, given by the curves through the blown-up point and their local multiplicities.

    :param branches: ``((curve, multiplicity), ...)``; an empty tuple blows up a point on no tracked curve.
    :param exceptionalName: The name of the new exceptional curve.
    :param joinsBoundary: Whether the new exceptional curve joins the running boundary.
    """
    branches: tuple
    exceptionalName: str
    joinsBoundary: bool = False

    @classmethod
    def at(cls, exceptionalName: str, branches: Iterable[tuple] = (), joinsBoundary: bool = False):
        """
        Builds a step from any iterable of ``(curve, multiplicity)`` pairs.

        :param exceptionalName: The name of the new exceptional curve.
        :param branches: The ``(curve, multiplicity)`` pairs.
        :param joinsBoundary: Whether the exceptional curve joins the boundary.
        """
        return cls(tuple((name, mult) for name, mult in branches), exceptionalName, joinsBoundary)

    @classmethod
    def fromJson(cls, data):
        """
        Reads ``{"point": [{"curve": str, "mult": int}], "name": str, "joins_boundary": bool}``.

        :param data: The decoded JSON value.
        """
        if (not isinstance(data, dict) or not isinstance(data.get("point"), list) or not isinstance(data.get("name"), str)):
            raise MalformedInputError(f"Blow-up step {data!r} needs a \"point\" list and a \"name\"")

        branches = []
        for branch in data["point"]:
            if (not isinstance(branch, dict) or not isinstance(branch.get("curve"), str)):
                raise MalformedInputError(f"Branch {branch!r} needs a curve name")
            mult = branch.get("mult", 1)
            if (not isinstance(mult, int) or isinstance(mult, bool)):
                raise MalformedInputError(f"Branch {branch!r} needs an integer mult")
            branches.append((branch["curve"], mult))

        joins = data.get("joins_boundary", False)
        if (not isinstance(joins, bool)):
            raise MalformedInputError("joins_boundary must be a boolean")

        return cls.at(data["name"], branches, joins)

    def toJson(self) -> dict:
        return {
            "point": [{"curve": name, "mult": mult} for name, mult in self.branches],
            "name": self.exceptionalName,
            "joins_boundary": self.joinsBoundary,
        }

    def multiplicityOn(self, names: Iterable[str]) -> int:
        """
        :param names: Curve names.
        :return: The summed multiplicities of the branches among ``names``.
        """
        names = set(names)
        return sum(mult for name, mult in self.branches if name in names)

# Creates the MmpRule class
class MmpRule(Enum):
    """
    Which (-1)-curves the log MMP loop contracts.
    """
    kNull     = "null"
    kNegative = "negative"

# Creates the Birational class
class Birational:
    """
    Use this class for the class-level blow-up and contraction transforms and the MMP loops
    built from them.
    """
    @staticmethod
    def blowUp(config: CurveConfig, step: BlowupStep) -> CurveConfig:
        """
        Blows up a point. For each branch (C, m): ``C^2 -= m^2``, ``pa(C) -= m(m-1)/2``,
        ``K.C += m`` and ``C.E = m``; for two branches ``C.C' -= m m'``. The exceptional curve
        is a (-1)-curve meeting nothing else.

        :param config: The config to blow up.
        :param step: The point specification.
        :return: The blown-up config, the exceptional curve appended last.
        """
        # Checks the step against the config
        if (not isinstance(step.exceptionalName, str) or step.exceptionalName == ""):
            raise DomainError("invalid-step", "the exceptional curve needs a non-empty name")
        if (step.exceptionalName in config):
            raise DomainError("duplicate-curve", f"{step.exceptionalName} is already tracked")

        names = [name for name, _ in step.branches]
        if (len(set(names)) != len(names)):
            raise DomainError("invalid-step", f"branches of {step.exceptionalName} repeat a curve")

        rows = []
        for name, mult in step.branches:
            if (not isinstance(mult, int) or isinstance(mult, bool) or mult < 1):
                raise DomainError("invalid-step", f"multiplicity {mult!r} of {name} must be a positive integer")
            rows.append((config.index(name), mult))

        # Variables
        records = list(config.curves)
        gram    = [list(row) for row in config.gram]

        # Genus budget
        for i, mult in rows:
            record = records[i]
            pa     = record.pa - mult * (mult - 1) // 2
            if (pa < 0):
                raise DomainError("pa-negative", f"{record.name} has pa {record.pa}, a point of multiplicity {mult} needs more")
            records[i] = record._replace(pa = pa, kdeg = record.kdeg + mult)
            gram[i][i] -= mult * mult

        # Local intersection budget
        for a in range(len(rows)):
            for b in range(a + 1, len(rows)):
                (i, m), (j, n) = rows[a], rows[b]
                if (gram[i][j] - m * n < 0):
                    raise DomainError("intersection-negative", f"{records[i].name}.{records[j].name} = {gram[i][j]} cannot lose {m * n} at one point")
                gram[i][j] -= m * n
                gram[j][i] -= m * n

        # Appends the exceptional curve
        meets = dict(rows)
        for i, row in enumerate(gram):
            row.append(meets.get(i, 0))
        gram.append([meets.get(i, 0) for i in range(len(records))] + [-1])
        records.append(CurveRecord(step.exceptionalName, 0, -1))

        return CurveConfig(records, gram, config.assumeTrackedComplete)

    @staticmethod
    def contractMinusOne(config: CurveConfig, name: str) -> CurveConfig:
        """
        Contracts a (-1)-curve G. Every remaining curve C gains ``(C.G)^2`` in self-intersection,
        ``(C.G)(C.G - 1)/2`` in genus and loses ``C.G`` in canonical degree; pairs gain ``(C.G)(C'.G)``.

        :param config: The config.
        :param name: The (-1)-curve to contract.
        :return: The contracted config.
        """
        g = config.index(name)
        if (not config.isMinusOneCurve(name)):
            record = config.record(name)
            raise DomainError("not-minus-one-curve", f"{name} has self {config.selfIntersection(name)}, pa {record.pa}, kdeg {record.kdeg}")

        keep  = [i for i in range(len(config)) if i != g]
        meets = [config.gram[i, g] for i in keep]

        records = []
        for i, meet in zip(keep, meets):
            record = config.curves[i]
            records.append(record._replace(pa = record.pa + meet * (meet - 1) // 2, kdeg = record.kdeg - meet))

        gram = [[config.gram[i, j] + meets[a] * meets[b] for b, j in enumerate(keep)] for a, i in enumerate(keep)]

        return CurveConfig(records, gram, config.assumeTrackedComplete)

    @staticmethod
    def mmpContractDisjoint(config: CurveConfig, marked: Iterable[str], logStatus: bool = False) -> tuple:
        """
        Contracts (-1)-curves meeting no marked curve until none is left. Ties go to the
        lexicographically smallest name.

        :param config: The config.
        :param marked: The curves that must survive untouched.
        :param logStatus: Is logging enabled
        :return: ``(final config, contracted names in order)``.
        """
        marked = set(marked)
        for name in marked:
            config.index(name)

        contracted = []
        while True:
            candidates = [
                name for name in config.minusOneCurves()
                if name not in marked and all(config.intersection(name, other) == 0 for other in marked)
            ]
            if (len(candidates) == 0):
                break

            name   = min(candidates)
            config = Birational.contractMinusOne(config, name)
            contracted.append(name)
            Logger.logDebug(f"Contracted {name}, {len(config)} curves left", logStatus)

        return config, contracted

    @staticmethod
    def mmpContractLog(config: CurveConfig, klass: QDivisor, rule = MmpRule.kNull, logStatus: bool = False) -> tuple:
        """
        Runs the log MMP on an explicit K + boundary class. With ``MmpRule.kNull`` a (-1)-curve is
        contracted when the positive part of the current class meets it in 0, which keeps the volume;
        with ``MmpRule.kNegative`` when the class itself meets it negatively. The class is pushed
        forward after every contraction. Ties go to the lexicographically smallest name.

        :param config: The config.
        :param klass: The class of K + boundary on ``config``.
        :param rule: A ``MmpRule`` or its string value.
        :param logStatus: Is logging enabled
        :return: ``(final config, final class, contracted names in order)``.
        """
        rule = MmpRule(rule)

        contracted = []
        while True:
            if (rule == MmpRule.kNull):
                positive = Zariski(config).decompose(klass).positive
                qualifies = lambda name: config.pairingWithCurve(positive, name) == 0
            elif (rule == MmpRule.kNegative):
                qualifies = lambda name: config.pairingWithCurve(klass, name) < 0
            else:
                raise ValueError("Unsupported enumerator value.")

            candidates = [name for name in config.minusOneCurves() if qualifies(name)]
            if (len(candidates) == 0):
                break

            name   = min(candidates)
            config = Birational.contractMinusOne(config, name)
            klass  = klass.without([name])
            contracted.append(name)
            Logger.logDebug(f"Log MMP contracted {name}", logStatus)

        return config, klass, contracted

# Creates the History class
class History:
    """
    An ordered sequence of blow-ups over a base config. The top config is the replay of every step.

    :param base: The config the first step is applied to.
    :param steps: The blow-up steps.
    """
    def __init__(self, base: CurveConfig, steps: Sequence[BlowupStep] = ()):
        """
        Constructor for the History class.

        :param base: The config the first step is applied to.
        :param steps: The blow-up steps.
        """
        # Localize parameters
        self.base  = base
        self.steps = tuple(steps)

        # Replays the steps
        top = base
        for step in self.steps:
            top = Birational.blowUp(top, step)
        self.top = top

    @classmethod
    def fromJson(cls, data):
        """
        Reads ``{"base": <config>, "script": [<step>, ...]}``.

        :param data: The decoded JSON value.
        """
        if (not isinstance(data, dict) or "base" not in data):
            raise MalformedInputError("A history needs a \"base\" config and a \"script\"")

        return cls(CurveConfig.fromJson(data["base"]), History.scriptFromJson(data.get("script", [])))

    @staticmethod
    def scriptFromJson(data) -> list:
        """
        :param data: The decoded JSON list of steps.
        :return: The steps.
        """
        if (not isinstance(data, list)):
            raise MalformedInputError("A blow-up script must be a list")
        return [BlowupStep.fromJson(entry) for entry in data]

    @staticmethod
    def loadScript(path: str) -> list:
        """
        Reads a blow-up script file.

        :param path: The file path.
        """
        return History.scriptFromJson(_readJson(path))

    def toJson(self) -> dict:
        return {"base": self.base.toJson(), "script": [step.toJson() for step in self.steps]}

    def exceptionalNames(self) -> tuple:
        return tuple(step.exceptionalName for step in self.steps)

    def extend(self, steps: Sequence[BlowupStep]) -> "History":
        """
        :param steps: More steps, applied on top.
        :return: The longer history.
        """
        return History(self.base, self.steps + tuple(steps))

    def _checkOn(self, config: CurveConfig, divisor: QDivisor):
        for name in divisor.names():
            config.index(name)

    def totalTransform(self, divisor: QDivisor) -> QDivisor:
        """
        Pulls a base divisor back to the top: at each step the exceptional curve gets the
        multiplicity-weighted sum of the branch coefficients.

        :param divisor: A divisor on the base.
        :return: Its total transform.
        """
        self._checkOn(self.base, divisor)

        coeffs = dict(divisor.items())
        for step in self.steps:
            coeffs[step.exceptionalName] = sum((mult * coeffs.get(name, Fraction(0)) for name, mult in step.branches), Fraction(0))

        return QDivisor(coeffs)

    def strictTransform(self, divisor: QDivisor) -> QDivisor:
        """
        :param divisor: A divisor on the base.
        :return: The same named curves on the top, with no exceptional part.
        """
        self._checkOn(self.base, divisor)
        return QDivisor(dict(divisor.items()))

    def pushforward(self, divisor: QDivisor) -> QDivisor:
        """
        :param divisor: A divisor on the top.
        :return: The divisor with every exceptional coefficient dropped.
        """
        self._checkOn(self.top, divisor)
        return divisor.restrictedTo(self.base.names)

    def boundaryAdjustment(self, boundary: Iterable[str], useJoins: bool = True) -> QDivisor:
        """
        Computes R with ``K_top + B_top = h^*(K_base + B_base) + R``. The running boundary B starts
        as ``boundary`` and gains every exceptional curve whose step joins it. At each step R is
        pulled back and the exceptional curve E gets ``1 - m_B + [E joins B]`` more, where ``m_B``
        is the boundary multiplicity at the point.

        :param boundary: Base curves in the boundary.
        :param useJoins: When False every step is treated as not joining the boundary.
        :return: R on the top.
        """
        running = set(boundary)
        for name in running:
            self.base.index(name)

        coeffs = {}
        for step in self.steps:
            joins  = (step.joinsBoundary and useJoins)
            pulled = sum((mult * coeffs.get(name, Fraction(0)) for name, mult in step.branches), Fraction(0))

            coeffs[step.exceptionalName] = pulled + 1 - step.multiplicityOn(running) + (1 if joins else 0)
            if (joins):
                running.add(step.exceptionalName)

        return QDivisor(coeffs)

    def runningBoundary(self, boundary: Iterable[str], useJoins: bool = True) -> frozenset:
        """
        :param boundary: Base curves in the boundary.
        :param useJoins: When False no exceptional curve joins.
        :return: The boundary on the top: ``boundary`` plus every exceptional curve whose step joins it.
        """
        running = set(boundary)
        for name in running:
            self.base.index(name)

        if (useJoins == True):
            running.update(step.exceptionalName for step in self.steps if step.joinsBoundary)

        return frozenset(running)

    def maxMultiplicity(self, names: Iterable[str]) -> int:
        """
        The largest multiplicity, over all steps, of the strict transform of ``names`` at the
        blown-up point.

        :param names: Base curves.
        :return: The maximum, 0 for an empty history or untouched curves.
        """
        names = set(names)
        return max((step.multiplicityOn(names) for step in self.steps), default = 0)
