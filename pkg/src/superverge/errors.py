"""Exception taxonomy shared by all modules.

Three classes of failure are distinguished because the CLI maps them to
distinct exit codes: bad input (1), resource budgets (2), and theorem
checks (3).  A theorem check firing means an internal invariant that is
mathematically guaranteed was violated, i.e. an implementation bug.
"""


class InputError(ValueError):
    """Invalid user input (bad field, malformed matrix, wrong precondition)."""


class NotPrime(InputError):
    pass


class ReduciblePolynomial(InputError):
    pass


class UnsupportedSize(InputError):
    pass


class ParseError(InputError):
    pass


class FieldError(InputError):
    pass


class SizeMismatch(InputError):
    pass


class NotAVerge(InputError):
    pass


class NotAHatPosition(InputError):
    pass


class NotClosed(InputError):
    pass


class HookConnected(InputError):
    pass


class HookDisconnected(InputError):
    pass


class BTooLarge(InputError):
    pass


class CapExceeded(InputError):
    pass


class BudgetError(RuntimeError):
    """A configured resource cap would be exceeded."""


class MemoryBudgetExceeded(BudgetError):
    pass


class BudgetExceeded(BudgetError):
    pass


class TheoremViolation(AssertionError):
    """A mathematically guaranteed invariant failed: implementation bug."""


class NoTemplate(TheoremViolation):
    pass


class MultipleTemplates(TheoremViolation):
    pass


class RankNotDivisible(TheoremViolation):
    pass
