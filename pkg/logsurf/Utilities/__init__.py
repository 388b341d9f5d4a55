# Import libraries
from importlib_metadata import PackageNotFoundError, version

# Generate the version
try:
    __version__ = version("logsurf")
except PackageNotFoundError:
    # Package is not installed
    pass

# Import Utility classes
from .Errors     import DomainError, MalformedInputError, SingularMatrixError
from .Logger     import Logger
from .Rationals  import Rationals
from .MatrixUtil import MatrixUtil

__all__ = ["Logger", "Rationals", "MatrixUtil", "DomainError", "MalformedInputError", "SingularMatrixError"]
