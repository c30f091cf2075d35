"""Exception types shared across the package.

The CLI maps these onto exit codes: input errors 2, cap errors 3,
failed checks 4.
"""


class LMDSError(Exception):
    """Base class for package errors."""


class InputError(LMDSError, ValueError):
    """Malformed or out-of-range input."""


class FieldError(InputError):
    pass


class CodeError(InputError):
    pass


class CapExceededError(LMDSError, RuntimeError):
    """An enumeration would exceed its configured cap."""


class ConsistencyError(LMDSError, RuntimeError):
    """Two independent computations that must agree did not."""
