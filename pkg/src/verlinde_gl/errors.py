"""Exception hierarchy shared by all modules.

ValidationError means the input itself is malformed (out-of-range index,
non-monotone weight vector, inconsistent symbol counts).  ContractError means
the inputs are individually valid but a documented precondition of the
operation fails (e.g. translating a simple along a cross-raising functor).
The CLI maps them to exit codes 1 and 2 respectively.
"""


class ValidationError(ValueError):
    """Malformed input value."""


class ContractError(RuntimeError):
    """Valid inputs violating an operation precondition."""
