"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes: input/precondition problems exit 2,
resource caps exit 3.
"""


class KWError(Exception):
    pass


class InputError(KWError, ValueError):
    """Malformed user input (bad edge list, non-positive integers, ...)."""


class PreconditionError(KWError, ValueError):
    """An operation was called outside its domain."""


class MalformedTraceError(InputError):
    pass


class NotApplicableError(PreconditionError):
    """The reduction being checked does not apply to this instance."""


class ResourceError(KWError, RuntimeError):
    """A size cap was exceeded.

    ``partial`` carries whatever was computed before giving up, if anything.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
