# Import Libraries
import sys
import json
import argparse
from   typing import Optional, Sequence

# Import Classes
from .lattice    import CurveConfig, QDivisor
from .zariski    import Zariski
from .birational import Birational, History, MmpRule
from .boundary   import Boundary
from .bounds     import Bounds
from .catalog    import Catalog

# Import Utilities
from .Utilities import Logger, Rationals, DomainError, MalformedInputError

# Exit codes
kExitOk        = 0
kExitDomain    = 1
kExitMalformed = 2

# Example names accepted by the example command
kExamples = ("143", "25-84", "rational", "tower")

def _names(value: Optional[str]) -> list:
    """
    Splits a comma separated list of curve names.
    """
    if (value is None):
        return []
    return [name.strip() for name in value.split(",") if name.strip() != ""]

def _rational(value: str):
    """
    argparse type for "p/q" values.
    """
    try:
        return Rationals.parse(value)
    except MalformedInputError as exc:
        raise argparse.ArgumentTypeError(str(exc))

def buildParser() -> argparse.ArgumentParser:
    """
    Builds the argument parser of the ``logsurf`` command.

    :return: The parser.
    """
    parser = argparse.ArgumentParser(prog = "logsurf", description = "Exact volumes of log surfaces from curve configurations.")
    parser.add_argument("--log-dir", default = None, help = "write a debug log into this directory")
    commands = parser.add_subparsers(dest = "command", required = True)

    # Lattice and decomposition
    command = commands.add_parser("validate", help = "check the invariants of a config")
    command.add_argument("config")
    command.add_argument("--json", action = "store_true")

    for name, text in (("zariski", "Zariski decomposition of a divisor"), ("volume", "volume of a divisor")):
        command = commands.add_parser(name, help = text)
        command.add_argument("config")
        command.add_argument("-d", "--divisor", required = True)
        command.add_argument("-o", "--out", default = None)
        command.add_argument("--json", action = "store_true")

    # Transforms
    command = commands.add_parser("blowup", help = "replay a blow-up script on a config")
    command.add_argument("config")
    command.add_argument("-s", "--script", required = True)
    command.add_argument("-o", "--out", default = None)
    command.add_argument("--history", action = "store_true", help = "emit the whole history instead of the top config")

    command = commands.add_parser("contract", help = "contract a (-1)-curve")
    command.add_argument("config")
    command.add_argument("curve")
    command.add_argument("-o", "--out", default = None)

    command = commands.add_parser("mmp", help = "contract (-1)-curves until none qualifies")
    command.add_argument("config")
    command.add_argument("-d", "--divisor", default = None, help = "K + boundary class; runs the log MMP")
    command.add_argument("--marked", default = None, help = "comma separated curves; contracts (-1)-curves disjoint from them")
    command.add_argument("--rule", choices = [rule.value for rule in MmpRule], default = MmpRule.kNull.value)
    command.add_argument("-o", "--out", default = None)

    # Boundary
    command = commands.add_parser("semistable", help = "split a boundary into its semistable part and complement")
    command.add_argument("config")
    command.add_argument("--delta", required = True)
    command.add_argument("-o", "--out", default = None)

    command = commands.add_parser("tower", help = "blow-up tower at a point of C n E")
    command.add_argument("config")
    command.add_argument("-d", "--divisor", required = True, help = "K + delta class on the base")
    command.add_argument("--delta", required = True)
    command.add_argument("--c", dest = "cName", required = True)
    command.add_argument("--e", dest = "eName", required = True)
    command.add_argument("-n", type = int, required = True)
    command.add_argument("-o", "--out", default = None)

    # Catalog
    command = commands.add_parser("catalog", help = "list catalog entries or dump one")
    command.add_argument("id", nargs = "?", default = None)
    command.add_argument("-o", "--out", default = None)

    command = commands.add_parser("table1", help = "volumes over the Kodaira fibres plus tail")
    command.add_argument("--json", action = "store_true")
    command.add_argument("-o", "--out", default = None)

    command = commands.add_parser("example", help = "detailed report of a catalogued example")
    command.add_argument("name", choices = kExamples)
    command.add_argument("--json", action = "store_true")
    command.add_argument("-o", "--out", default = None)

    command = commands.add_parser("noether", help = "Noether-type bounds for a geometric genus")
    command.add_argument("--pg", type = int, required = True)
    command.add_argument("--vol", type = _rational, default = None)
    command.add_argument("--json", action = "store_true")

    return parser

def _emit(text: str, out: Optional[str]):
    """
    Writes a report to a file or to stdout.
    """
    if (out is None):
        sys.stdout.write(text + "\n")
    else:
        with open(out, "w", encoding = "utf-8") as fp:
            fp.write(text + "\n")

def _dumps(value) -> str:
    return json.dumps(Rationals.jsonable(value), sort_keys = True, indent = 2)

def _reportLines(report: dict) -> str:
    """
    Line oriented form of an example report.
    """
    lines = [f"# {report['id']}"]
    for key in sorted(report["computed"]):
        value = json.dumps(Rationals.jsonable(report["computed"][key]), sort_keys = True)
        check = report["checks"].get(key)
        if (check is None):
            lines.append(f"{key} = {value}")
        else:
            status = "match" if check["match"] else f"MISMATCH (expected {json.dumps(check['expected'], sort_keys = True)})"
            lines.append(f"{key} = {value}  [{check['provenance']}] {status}")

    return "\n".join(lines)

def _dispatch(args, logStatus: bool) -> int:
    """
    Runs one parsed command.

    :return: The exit code.
    """
    if (args.command == "validate"):
        violations = CurveConfig.load(args.config).validate()
        if (args.json == True):
            _emit(_dumps({"valid": len(violations) == 0, "violations": violations}), None)
        else:
            _emit("\n".join(violations) if violations else "valid", None)
        return kExitOk if len(violations) == 0 else kExitDomain

    elif (args.command in ("zariski", "volume")):
        zariski = Zariski(CurveConfig.load(args.config))
        if (logStatus == True):
            zariski.enableLogging()

        result = zariski.decompose(QDivisor.load(args.divisor))
        if (args.command == "volume" and args.json == False):
            _emit(Rationals.format(result.volume), args.out)
        elif (args.command == "volume"):
            _emit(_dumps({"volume": result.volume}), args.out)
        else:
            _emit(_dumps(result.toJson()), args.out)

    elif (args.command == "blowup"):
        history = History(CurveConfig.load(args.config), History.loadScript(args.script))
        _emit(_dumps(history.toJson() if args.history else history.top.toJson()), args.out)

    elif (args.command == "contract"):
        _emit(_dumps(Birational.contractMinusOne(CurveConfig.load(args.config), args.curve).toJson()), args.out)

    elif (args.command == "mmp"):
        config = CurveConfig.load(args.config)
        if (args.divisor is not None):
            config, klass, contracted = Birational.mmpContractLog(config, QDivisor.load(args.divisor), args.rule, logStatus)
            report = {"config": config.toJson(), "class": klass.toJson(), "contracted": contracted}
        elif (args.marked is not None):
            config, contracted = Birational.mmpContractDisjoint(config, _names(args.marked), logStatus)
            report = {"config": config.toJson(), "contracted": contracted}
        else:
            raise MalformedInputError("mmp needs either -d/--divisor or --marked")
        _emit(_dumps(report), args.out)

    elif (args.command == "semistable"):
        split = Boundary.semistablePart(CurveConfig.load(args.config), _names(args.delta))
        _emit(_dumps(split.toJson()), args.out)

    elif (args.command == "tower"):
        config = CurveConfig.load(args.config)
        klass  = QDivisor.load(args.divisor)
        base   = Zariski(config).decompose(klass)
        history, top = Boundary.tower(config, klass, _names(args.delta), args.cName, args.eName, args.n)

        report = {
            "history":      history.toJson(),
            "class":        top.toJson(),
            "base_volume":  base.volume,
            "b":            base.positive[args.eName],
            "volume":       Zariski(history.top).volume(top),
            "lower_bound":  Boundary.towerLowerBound(base.volume, base.positive[args.eName], args.n),
        }
        _emit(_dumps(report), args.out)

    elif (args.command == "catalog"):
        catalog = Catalog()
        if (args.id is None):
            _emit("\n".join(catalog.ids()), args.out)
        else:
            _emit(_dumps(catalog.entry(args.id).toJson()), args.out)

    elif (args.command == "table1"):
        catalog = Catalog()
        if (logStatus == True):
            catalog.enableLogging()

        rows = catalog.table1()
        _emit(_dumps(rows) if args.json else Catalog.formatTable(rows), args.out)

    elif (args.command == "example"):
        catalog = Catalog()
        if (logStatus == True):
            catalog.enableLogging()

        if (args.name == "143"):
            report = catalog.example143()
        elif (args.name == "25-84"):
            report = catalog.example2584()
        elif (args.name == "rational"):
            report = catalog.exampleRational()
        else:
            report = catalog.exampleTower()

        _emit(_dumps(report) if args.json else _reportLines(report), args.out)

    elif (args.command == "noether"):
        report = {
            "pg":                   args.pg,
            "stable_noether_bound": Bounds.stableNoetherBound(args.pg),
            "big_semistable_bound": Bounds.bigSemistableBound(args.pg),
        }
        if (args.pg >= 1):
            report["gorenstein_noether_bound"] = Bounds.gorensteinNoetherBound(args.pg)
            report["elliptic_case_bound"]      = Bounds.ellipticCaseBound(args.pg)
        if (args.vol is not None):
            glued = Bounds.glueVolumes([(args.vol, args.pg)])
            report["vol"]                 = args.vol
            report["noether_ok"]          = glued.noetherOk
            report["hypothesis_violated"] = glued.hypothesisViolated

        if (args.json == True):
            _emit(_dumps(report), None)
        else:
            _emit("\n".join(f"{key} = {json.dumps(value)}" for key, value in sorted(Rationals.jsonable(report).items())), None)

        if (args.vol is not None and report["noether_ok"] == False):
            return kExitDomain

    return kExitOk

def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parses ``argv`` and runs the command. Domain errors exit with 1 and their error name on stderr,
    malformed input and unwritable output files with 2.

    :param argv: The arguments without the program name; ``sys.argv[1:]`` when omitted.
    :return: The exit code.
    """
    parser = buildParser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return kExitMalformed if exc.code not in (0, None) else kExitOk

    logStatus = False
    try:
        if (args.log_dir is not None):
            Logger.logInfo(f"Logging to {Logger.setLogPath(args.log_dir)}", True)
            logStatus = True

        return _dispatch(args, logStatus)
    except DomainError as exc:
        Logger.logError(str(exc), logStatus)
        sys.stderr.write(f"error: {exc}\n")
        return kExitDomain
    except MalformedInputError as exc:
        Logger.logError(str(exc), logStatus)
        sys.stderr.write(f"malformed input: {exc}\n")
        return kExitMalformed
    except OSError as exc:
        Logger.logError(str(exc), logStatus)
        sys.stderr.write(f"cannot write output: {exc}\n")
        return kExitMalformed

def main():
    sys.exit(run())

if __name__ == "__main__":
    main()
