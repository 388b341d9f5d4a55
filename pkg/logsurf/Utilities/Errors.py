# Start of the error classes
class DomainError(ValueError):
    """
    Raised when an operation is well formed but mathematically refused, e.g. a blow-up
    claiming more local intersection than the curves have.

    :param errorName: The stable error name, e.g. ``"gram-singular"``.
    :param detail: A human readable explanation.
    """
    def __init__(self, errorName: str, detail: str = ""):
        """
        Constructor for the DomainError class.

        :param errorName: The stable error name.
        :param detail: A human readable explanation.
        """
        # Localize parameters
        self.errorName = errorName
        self.detail    = detail

        super().__init__(f"{errorName}: {detail}" if detail else errorName)

class MalformedInputError(ValueError):
    """
    Raised when an input file or value cannot be parsed into the expected schema.
    """
    pass

class SingularMatrixError(ArithmeticError):
    """
    Raised by the exact solver when a system has no unique solution.
    """
    pass
