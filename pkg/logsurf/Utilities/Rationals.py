# Import Libraries
import re
from   fractions import Fraction
from   typing import Mapping

# Import Utilities
from .Errors import MalformedInputError

# Accepts "p", "-p" and "p/q"
kFractionPattern = re.compile(r"^\s*-?\d+(\s*/\s*\d+)?\s*$")

# Creates the Rationals class
class Rationals:
    """
    Use this class to read and write exact rationals as ``"p/q"`` strings.
    """
    @staticmethod
    def parse(value) -> Fraction:
        """
        Parses an integer or a ``"p/q"`` string.

        :param value: An ``int``, a ``Fraction`` or a string such as ``"-3/7"``.
        :return: The exact value in lowest terms.
        """
        # Floats and booleans are never exact inputs
        if (isinstance(value, bool) or isinstance(value, float)):
            raise MalformedInputError(f"Expected an exact rational, got {value!r}")

        if (isinstance(value, (int, Fraction))):
            return Fraction(value)

        if (isinstance(value, str) and kFractionPattern.match(value)):
            try:
                return Fraction(value.replace(" ", ""))
            except ZeroDivisionError:
                raise MalformedInputError(f"Zero denominator in {value!r}")

        raise MalformedInputError(f"Expected a \"p/q\" string, got {value!r}")

    @staticmethod
    def format(value) -> str:
        """
        Formats a rational in lowest terms, integers without a denominator.

        :param value: The value to format.
        :return: A string such as ``"1/143"`` or ``"0"``.
        """
        return str(Fraction(value))

    @staticmethod
    def formatMap(values: Mapping) -> dict:
        """
        Formats every value of a mapping.

        :param values: A mapping from names to rationals.
        :return: A new dict with ``"p/q"`` strings.
        """
        return {key: Rationals.format(val) for key, val in values.items()}

    @staticmethod
    def jsonable(value):
        """
        Converts a report into plain JSON values: ``Fraction`` values become ``"p/q"`` strings, sets
        become sorted lists and tuples become lists. Integers stay JSON integers.

        :param value: A nested report built from dicts, lists, tuples, sets and numbers.
        """
        if (isinstance(value, (bool, int, str)) or value is None):
            return value
        if (isinstance(value, Fraction)):
            return Rationals.format(value)
        if (isinstance(value, dict)):
            return {str(key): Rationals.jsonable(val) for key, val in value.items()}
        if (isinstance(value, (set, frozenset))):
            return sorted(Rationals.jsonable(val) for val in value)
        if (isinstance(value, (list, tuple))):
            return [Rationals.jsonable(val) for val in value]

        raise TypeError(f"Cannot convert {type(value).__name__} to JSON")
