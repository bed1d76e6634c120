"""Exception hierarchy.

Every failure raised by the package derives from :class:`DematelError` and
carries the location data needed to report it (cell, line, expert, ...).
"""

from __future__ import annotations


class DematelError(Exception):
    """Base class for all package errors."""


class DimensionMismatch(DematelError):
    def __init__(self, expected, got, what="matrix"):
        self.expected = expected
        self.got = got
        super().__init__(f"{what}: expected shape {expected}, got {got}")


class OutOfScale(DematelError):
    def __init__(self, row, col, value, expert_id=None):
        self.row = row
        self.col = col
        self.value = value
        self.expert_id = expert_id
        who = f"expert {expert_id!r}: " if expert_id is not None else ""
        super().__init__(f"{who}score {value!r} at cell ({row}, {col}) is outside the 0-4 scale")


class NonzeroDiagonal(DematelError):
    def __init__(self, index, value=None, expert_id=None):
        self.index = index
        self.value = value
        self.expert_id = expert_id
        who = f"expert {expert_id!r}: " if expert_id is not None else ""
        super().__init__(f"{who}diagonal cell ({index}, {index}) must be 0, got {value!r}")


class OutOfRange(DematelError):
    def __init__(self, row, col, value):
        self.row = row
        self.col = col
        self.value = value
        super().__init__(f"entry {value!r} at cell ({row}, {col}) is outside [0, 4]")


class Singular(DematelError):
    def __init__(self, column):
        self.column = column
        super().__init__(f"matrix is singular: no usable pivot in column {column}")


class Diverged(DematelError):
    def __init__(self, iterations, last_norm):
        self.iterations = iterations
        self.last_norm = last_norm
        super().__init__(
            f"power series did not converge after {iterations} iterations "
            f"(last term max-norm {last_norm:.3g}); spectral radius is likely >= 1"
        )


class ConvergenceFailure(DematelError):
    """The total-relation matrix cannot be formed from the normalized matrix."""


class EmptyPanel(DematelError):
    def __init__(self):
        super().__init__("at least one expert response is required")


class DegenerateMatrix(DematelError):
    def __init__(self):
        super().__init__("direct-relation matrix is all zeros; cannot normalize")


class AllTrialsDegenerate(DematelError):
    def __init__(self, trials):
        self.trials = trials
        super().__init__(f"all {trials} perturbation trials produced a degenerate panel")


class ParseError(DematelError):
    def __init__(self, line, reason):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}" if line is not None else reason)


class DuplicateCode(ParseError):
    def __init__(self, line, code):
        self.code = code
        super().__init__(line, f"duplicate criterion code {code!r}")


class UnknownCode(ParseError):
    def __init__(self, line, code):
        self.code = code
        super().__init__(line, f"unknown criterion code {code!r}")


class MissingCell(ParseError):
    def __init__(self, expert_id, src, dst):
        self.expert_id = expert_id
        self.src = src
        self.dst = dst
        super().__init__(None, f"expert {expert_id!r} is missing cell {src} -> {dst}")


class DuplicateCell(ParseError):
    def __init__(self, line, expert_id, src, dst):
        self.expert_id = expert_id
        self.src = src
        self.dst = dst
        super().__init__(line, f"expert {expert_id!r} gives cell {src} -> {dst} more than once")
