"""Exception types raised by the library and mapped to CLI exit codes."""

from fractions import Fraction


class BrinThompsonError(Exception):
    """Base class for domain errors (CLI exit code 1)."""


class PatternError(BrinThompsonError, ValueError):
    kind = "invalid-pattern"


class OverlapError(PatternError):
    kind = "overlap"

    def __init__(self, i: int, j: int):
        self.pair = (i, j)
        super().__init__(f"overlap({i},{j}): blocks {i} and {j} intersect")


class CoverageError(PatternError):
    kind = "coverage-deficit"

    def __init__(self, deficit: Fraction):
        self.deficit = deficit
        super().__init__(f"coverage-deficit({deficit}): blocks miss measure {deficit}")


class NonHierarchicalError(PatternError):
    kind = "non-hierarchical"

    def __init__(self, cone):
        self.cone = cone
        super().__init__(f"non-hierarchical: no splitting axis inside cone {cone}")


class ArityMismatch(BrinThompsonError, ValueError):
    def __init__(self, a: int, b: int):
        super().__init__(f"arity mismatch: {a} != {b}")


class ElementError(BrinThompsonError, ValueError):
    """Malformed element data (bad label, axis, bijection or twist)."""


class BudgetExceeded(BrinThompsonError):
    def __init__(self, size: int, budget: int):
        self.size = size
        self.budget = budget
        super().__init__(f"budget-exceeded: reached {size} elements (budget {budget})")


class EnumerationTooLarge(BrinThompsonError):
    def __init__(self, estimate: int, cap: int):
        self.estimate = estimate
        super().__init__(f"enumeration-too-large: {estimate} candidates exceeds cap {cap}")


class ParseError(Exception):
    """Syntax error in an element document or point literal (CLI exit code 2)."""

    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")
