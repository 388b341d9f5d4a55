# Import Libraries
import os
import pytest
import numpy as np
from   fractions import Fraction

# Import Utilities
from logsurf.Utilities import Logger, Rationals, MatrixUtil, DomainError, MalformedInputError, SingularMatrixError

def _matrix(rows):
    matrix = np.empty((len(rows), len(rows)), dtype = object)
    for i, row in enumerate(rows):
        for j, value in enumerate(row):
            matrix[i, j] = value
    return matrix

def test_parse_accepts_exact_values():
    assert Rationals.parse("1/143") == Fraction(1, 143)
    assert Rationals.parse("-6/4") == Fraction(-3, 2)
    assert Rationals.parse("7") == 7
    assert Rationals.parse(3) == 3
    assert Rationals.parse(Fraction(2, 3)) == Fraction(2, 3)

@pytest.mark.parametrize("value", [0.5, True, "1/0", "one half", "1.5", None])
def test_parse_rejects_inexact_or_malformed(value):
    with pytest.raises(MalformedInputError):
        Rationals.parse(value)

def test_format_and_jsonable():
    assert Rationals.format(Fraction(4, 2)) == "2"
    assert Rationals.format(Fraction(-25, 84)) == "-25/84"
    assert Rationals.formatMap({"a": Fraction(1, 2), "b": 3}) == {"a": "1/2", "b": "3"}

    report = {"v": Fraction(1, 7), "n": 11, "ok": True, "names": frozenset({"b", "a"}), "rows": (Fraction(2), None)}
    assert Rationals.jsonable(report) == {"v": "1/7", "n": 11, "ok": True, "names": ["a", "b"], "rows": ["2", None]}

    with pytest.raises(TypeError):
        Rationals.jsonable(0.25)

def test_solve_is_exact():
    solution = MatrixUtil.solve(_matrix([[-2, 1], [1, -2]]), [Fraction(-1), 0])
    assert solution == [Fraction(2, 3), Fraction(1, 3)]

    # Pivoting is needed when the first diagonal entry is zero
    solution = MatrixUtil.solve(_matrix([[0, 1], [1, -1]]), [1, 0])
    assert solution == [1, 1]

def test_solve_rejects_singular_systems():
    with pytest.raises(SingularMatrixError):
        MatrixUtil.solve(_matrix([[-2, 2], [2, -2]]), [1, 1])

def test_definiteness_and_inertia():
    assert MatrixUtil.isNegativeDefinite(_matrix([[-2, 1], [1, -2]])) == True
    assert MatrixUtil.isNegativeDefinite(_matrix([[-2, 2], [2, -2]])) == False
    assert MatrixUtil.isNegativeDefinite(np.empty((0, 0), dtype = object)) == True

    assert MatrixUtil.inertia(_matrix([[1, 0], [0, -2]])) == (1, 1, 0)
    assert MatrixUtil.inertia(_matrix([[-2, 2], [2, -2]])) == (0, 1, 1)
    assert MatrixUtil.inertia(_matrix([[0, 1], [1, 0]])) == (1, 1, 0)

def test_domain_error_carries_its_name():
    error = DomainError("gram-singular", "on {a, b}")
    assert error.errorName == "gram-singular"
    assert str(error) == "gram-singular: on {a, b}"
    assert isinstance(error, ValueError)

def test_log_path_is_created(tmp_path):
    path = Logger.setLogPath(str(tmp_path / "logs"))
    Logger.logInfo("log file check", True)
    Logger.logDebug("never written", False)

    assert os.path.dirname(path) == str(tmp_path / "logs")
    assert os.path.isdir(tmp_path / "logs")
