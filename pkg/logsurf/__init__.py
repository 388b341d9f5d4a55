# Import libraries
from   importlib_metadata import PackageNotFoundError, version

# Generate the version
try:
    __version__ = version("logsurf")
except PackageNotFoundError:
    # Package is not installed
    pass

# Import lattice related classes
from .lattice    import CurveRecord, QDivisor, CurveConfig
from .zariski    import ZariskiResult, Zariski

# Import transform related classes
from .birational import BlowupStep, History, MmpRule, Birational
from .boundary   import BoundarySplit, ComponentReport, Boundary

# Import catalog related classes
from .kodaira    import Kodaira
from .bounds     import GlueResult, Bounds
from .catalog    import ExpectedValue, CatalogEntry, PipelineResult, Catalog

__all__ = [
    "CurveRecord",
    "QDivisor",
    "CurveConfig",
    "ZariskiResult",
    "Zariski",
    "BlowupStep",
    "History",
    "MmpRule",
    "Birational",
    "BoundarySplit",
    "ComponentReport",
    "Boundary",
    "Kodaira",
    "GlueResult",
    "Bounds",
    "ExpectedValue",
    "CatalogEntry",
    "PipelineResult",
    "Catalog",
]
