"""
Exception hierarchy for qtsym
"""


class QtSymError(RuntimeError):
    """
    Root of every error raised by the qtsym package
    """


class DivisionByZero(QtSymError):
    """
    Division of a parameter rational function by zero
    """


class NonExactDivision(QtSymError):
    """
    Polynomial division that leaves a remainder
    """


class SubstitutionPole(QtSymError):
    """
    A substitution sent a denominator to zero
    """


class SizeMismatch(QtSymError):
    """
    Two partitions that should have the same size do not
    """


class InvalidShape(QtSymError):
    """
    A sequence that is not a partition or skew shape
    """


class InvalidTableau(QtSymError):
    """
    A filling that breaks the semi-standard conditions
    """


class InvalidBiword(QtSymError):
    """
    A biword that is not lexicographic, or a tableau pair RSK cannot invert
    """


class BasisError(QtSymError):
    """
    Unknown or unavailable symmetric function basis
    """


class SingularSystem(QtSymError):
    """
    A linear system that has no unique solution
    """
    def __init__(self, message, degree=None, partition=None):
        super().__init__(message)
        self.degree = degree
        self.partition = partition


class SplitError(QtSymError):
    """
    No operator split exists for the requested grading
    """


class ParseError(QtSymError):
    """
    Syntax error or unknown name in an expression, with its location
    """
    def __init__(self, line, column, message):
        super().__init__(f'line {line}, column {column}: {message}')
        self.line = line
        self.column = column
        self.message = message


class EvaluationError(QtSymError):
    """
    An expression that parsed but cannot be evaluated
    """
