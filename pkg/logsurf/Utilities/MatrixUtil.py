# Import Libraries
import math
import numpy as np
from   fractions import Fraction
from   typing import Sequence

# Import Utilities
from .Errors import SingularMatrixError

# Creates the MatrixUtil Class
class MatrixUtil:
    """
    Use this class for exact linear algebra over the rationals.

    Matrices are numpy arrays with ``dtype = object`` holding Python integers or
    ``Fraction`` values, so no floating point value is ever formed.
    """
    @staticmethod
    def toFractionMatrix(rows: Sequence[Sequence]) -> np.ndarray:
        """
        Builds an object matrix of ``Fraction`` entries.

        :param rows: The rows of the matrix.
        :return: A square or rectangular object array.
        """
        matrix = np.empty((len(rows), len(rows[0]) if len(rows) > 0 else 0), dtype = object)
        for i, row in enumerate(rows):
            for j, value in enumerate(row):
                matrix[i, j] = Fraction(value)

        return matrix

    @staticmethod
    def _integerRows(matrix: np.ndarray) -> np.ndarray:
        """
        Scales every row by the lcm of its denominators so all entries become integers.
        Row scaling by positive integers keeps solutions and the signs of leading minors.
        """
        rows, cols = matrix.shape
        scaled = np.empty((rows, cols), dtype = object)

        for i in range(rows):
            fractions = [Fraction(value) for value in matrix[i]]
            scale     = math.lcm(*[value.denominator for value in fractions]) if cols > 0 else 1
            for j in range(cols):
                scaled[i, j] = fractions[j].numerator * (scale // fractions[j].denominator)

        return scaled

    @staticmethod
    def solve(matrix: np.ndarray, rhs: Sequence) -> list:
        """
        Solves ``matrix * x = rhs`` exactly by fraction-free (Bareiss) elimination.
        The pivot of each column is the entry of largest absolute value.

        :param matrix: A square object matrix.
        :param rhs: The right hand side.
        :return: The solution as a list of ``Fraction``.
        """
        n = matrix.shape[0]
        if (n == 0):
            return []

        # Augmented integer matrix
        augmented = np.empty((n, n + 1), dtype = object)
        augmented[:, :n] = matrix
        augmented[:, n]  = list(rhs)
        work = MatrixUtil._integerRows(augmented)

        # Downward elimination
        prev = 1
        for k in range(n):
            candidates = [i for i in range(k, n) if work[i, k] != 0]
            if (len(candidates) == 0):
                raise SingularMatrixError("matrix is not invertible.")

            pivotRow = max(candidates, key = lambda i: (abs(work[i, k]), -i))
            if (pivotRow != k):
                work[[k, pivotRow], :] = work[[pivotRow, k], :]

            for i in range(k + 1, n):
                work[i, k + 1:] = (work[k, k] * work[i, k + 1:] - work[i, k] * work[k, k + 1:]) // prev
                work[i, k] = 0

            prev = work[k, k]

        # Back substitution
        solution = [Fraction(0)] * n
        for i in range(n - 1, -1, -1):
            acc = Fraction(work[i, n])
            for j in range(i + 1, n):
                if (work[i, j] != 0):
                    acc -= work[i, j] * solution[j]
            solution[i] = acc / work[i, i]

        return solution

    @staticmethod
    def isNegativeDefinite(matrix: np.ndarray) -> bool:
        """
        Decides negative definiteness of a symmetric matrix from the signs of its leading
        principal minors, which fraction-free elimination without pivoting produces as its pivots.

        :param matrix: A symmetric object matrix.
        :return: True iff the k-th leading minor has sign (-1)^k for every k. True for the empty matrix.
        """
        n = matrix.shape[0]
        work = MatrixUtil._integerRows(matrix)

        prev = 1
        for k in range(n):
            minor = work[k, k]

            # Leading minor k + 1 must have sign (-1)^(k + 1)
            if ((k % 2 == 0 and minor >= 0) or (k % 2 == 1 and minor <= 0)):
                return False

            for i in range(k + 1, n):
                work[i, k + 1:] = (minor * work[i, k + 1:] - work[i, k] * work[k, k + 1:]) // prev
                work[i, k] = 0

            prev = minor

        return True

    @staticmethod
    def inertia(matrix: np.ndarray) -> tuple:
        """
        Counts the positive, negative and zero eigenvalues of a symmetric matrix by exact
        congruence diagonalisation.

        :param matrix: A symmetric object matrix.
        :return: ``(positive, negative, zero)``.
        """
        n = matrix.shape[0]
        work = np.empty((n, n), dtype = object)
        for i in range(n):
            for j in range(n):
                work[i, j] = Fraction(matrix[i, j])

        positive = 0
        negative = 0

        for k in range(n):
            pivot = next((i for i in range(k, n) if work[i, i] != 0), None)

            # No diagonal pivot left, so fold a nonzero off-diagonal entry onto the diagonal
            if (pivot is None):
                pair = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if work[i, j] != 0), None)
                if (pair is None):
                    break

                i, j = pair
                work[i, :] += work[j, :]
                work[:, i] += work[:, j]
                pivot = i

            if (pivot != k):
                work[[k, pivot], :] = work[[pivot, k], :]
                work[:, [k, pivot]] = work[:, [pivot, k]]

            d = work[k, k]
            if (d > 0):
                positive += 1
            else:
                negative += 1

            # Schur complement
            if (k + 1 < n):
                column = work[k + 1:, k].copy()
                work[k + 1:, k + 1:] -= np.outer(column, work[k, k + 1:]) / d
                work[k + 1:, k] = 0
                work[k, k + 1:] = 0

        return (positive, negative, n - positive - negative)
