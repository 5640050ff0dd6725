"""Exception hierarchy shared by every module.

Each class carries the process exit code the CLI reports for it.
"""


class WittlabError(Exception):
    exit_code = 1


class InputError(WittlabError, ValueError):
    """Malformed or out-of-domain input (bad partition, psi(0), ...)."""

    exit_code = 2


class WindowError(WittlabError):
    """A requested computation does not fit in the supplied window."""

    exit_code = 3


class IndeterminateError(WindowError):
    """The window is too small to identify the answer."""


class UnderdeterminedError(IndeterminateError):
    """The stated laws do not force an answer and no checker resolved it."""


class PropertyViolation(WittlabError):
    """A checked mathematical property failed."""

    exit_code = 4
