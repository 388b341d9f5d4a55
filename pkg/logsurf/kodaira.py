# Import Libraries
from   enum import Enum
from   typing import Iterable, Optional

# Import Classes
from .lattice    import CurveConfig
from .birational import BlowupStep

# Import Utilities
from .Utilities import DomainError

# Creates the Kodaira class
class Kodaira:
    """
    Use this class to build the reduced Kodaira fibre configurations, optionally with a
    (-2)-tail ``t`` meeting one fibre curve once, and their scripted minimal embedded resolutions.

    Fibre curves are named ``c0, c1, ...``; exceptional curves of a resolution ``g1, g2, ...``.
    """
    class Fiber(Enum):
        kIb      = "I_b"
        kII      = "II"
        kIII     = "III"
        kIV      = "IV"
        kI0Star  = "I_0*"
        kIbStar  = "I_b*"
        kIIStar  = "II*"
        kIIIStar = "III*"
        kIVStar  = "IV*"

    # Name of the tail curve
    kTail = "t"

    @staticmethod
    def _layout(kind: "Kodaira.Fiber", b: Optional[int]) -> tuple:
        """
        :return: ``(curves as (name, self, pa), edges as (a, b, m), tail attachment)``.
        """
        minusTwo = lambda count: [(f"c{i}", -2, 0) for i in range(count)]
        chain    = lambda start, stop: [(f"c{i}", f"c{i + 1}", 1) for i in range(start, stop)]

        if (kind == Kodaira.Fiber.kIb):
            if (not isinstance(b, int) or b < 1):
                raise DomainError("invalid-parameter", f"I_b needs b >= 1, got {b!r}")
            if (b == 1):
                return [("c0", 0, 1)], [], "c0"
            if (b == 2):
                return minusTwo(2), [("c0", "c1", 2)], "c0"
            return minusTwo(b), chain(0, b - 1) + [(f"c{b - 1}", "c0", 1)], "c0"

        elif (kind == Kodaira.Fiber.kII):
            return [("c0", 0, 1)], [], "c0"

        elif (kind == Kodaira.Fiber.kIII):
            return minusTwo(2), [("c0", "c1", 2)], "c0"

        elif (kind == Kodaira.Fiber.kIV):
            return minusTwo(3), [("c0", "c1", 1), ("c0", "c2", 1), ("c1", "c2", 1)], "c0"

        elif (kind == Kodaira.Fiber.kI0Star):
            return minusTwo(5), [("c0", f"c{i}", 1) for i in range(1, 5)], "c0"

        elif (kind == Kodaira.Fiber.kIbStar):
            if (not isinstance(b, int) or b < 0):
                raise DomainError("invalid-parameter", f"I_b* needs b >= 0, got {b!r}")
            # Chain c0..cb, two leaves at each end
            edges = chain(0, b) + [
                ("c0", f"c{b + 1}", 1), ("c0", f"c{b + 2}", 1),
                (f"c{b}", f"c{b + 3}", 1), (f"c{b}", f"c{b + 4}", 1),
            ]
            return minusTwo(b + 5), edges, f"c{b + 4}"

        elif (kind == Kodaira.Fiber.kIIStar):
            return minusTwo(9), chain(0, 7) + [("c2", "c8", 1)], "c7"

        elif (kind == Kodaira.Fiber.kIIIStar):
            return minusTwo(8), chain(0, 6) + [("c3", "c7", 1)], "c6"

        elif (kind == Kodaira.Fiber.kIVStar):
            return minusTwo(7), chain(0, 4) + [("c2", "c5", 1), ("c5", "c6", 1)], "c4"

        else:
            raise ValueError("Unsupported enumerator value.")

    @staticmethod
    def config(kind, b: Optional[int] = None, withTail: bool = True) -> CurveConfig:
        """
        Builds the reduced fibre configuration.

        :param kind: A ``Kodaira.Fiber`` or its string value.
        :param b: The index of I_b (b >= 1) and I_b* (b >= 0).
        :param withTail: Attach the (-2)-tail ``t``.
        :return: The config; every curve has canonical degree 0.
        """
        curves, edges, attach = Kodaira._layout(Kodaira.Fiber(kind), b)

        if (withTail == True):
            curves = curves + [(Kodaira.kTail, -2, 0)]
            edges  = edges + [(attach, Kodaira.kTail, 1)]

        return CurveConfig.fromCurves(curves, edges)

    @staticmethod
    def resolutionScript(kind, b: Optional[int] = None, withTail: bool = True) -> list:
        """
        The minimal embedded resolution of the fibre plus tail. Nodes are blown up once; the
        self-node of I_1, the double contact of I_2, the cusp of II, the tangency of III and the
        triple point of IV get their own short scripts. No exceptional curve joins the boundary.

        :param kind: A ``Kodaira.Fiber`` or its string value.
        :param b: The index of I_b and I_b*.
        :param withTail: Resolve the tail node too.
        :return: The blow-up steps.
        """
        kind = Kodaira.Fiber(kind)
        _, edges, attach = Kodaira._layout(kind, b)

        points = []
        if (kind == Kodaira.Fiber.kIb and b == 1):
            points.append([("c0", 2)])
        elif (kind == Kodaira.Fiber.kIb and b == 2):
            points.append([("c0", 1), ("c1", 1)])
            points.append([("c0", 1), ("c1", 1)])
        elif (kind == Kodaira.Fiber.kII):
            points.append([("c0", 2)])
            points.append([("c0", 1), ("g1", 1)])
            points.append([("c0", 1), ("g1", 1), ("g2", 1)])
        elif (kind == Kodaira.Fiber.kIII):
            points.append([("c0", 1), ("c1", 1)])
            points.append([("c0", 1), ("c1", 1), ("g1", 1)])
        elif (kind == Kodaira.Fiber.kIV):
            points.append([("c0", 1), ("c1", 1), ("c2", 1)])
        else:
            points.extend([(a, 1), (c, 1)] for a, c, _ in edges)

        if (withTail == True):
            points.append([(attach, 1), (Kodaira.kTail, 1)])

        return [BlowupStep.at(f"g{k}", branches) for k, branches in enumerate(points, start = 1)]

    @staticmethod
    def isSnc(config: CurveConfig, names: Iterable[str]) -> bool:
        """
        Certifies a resolution: the named curves are smooth rational and meet pairwise at most once.

        :param config: The config.
        :param names: The curves to check.
        """
        names = list(names)
        if (any(config.pa(name) != 0 for name in names)):
            return False

        return all(config.intersection(a, c) <= 1 for i, a in enumerate(names) for c in names[i + 1:])
