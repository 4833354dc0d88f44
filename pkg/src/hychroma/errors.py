"""Exception hierarchy shared by all hychroma modules."""


class HychromaError(Exception):
    """Base class for all errors raised by this package."""


class UsageError(HychromaError):
    """Invalid arguments or preconditions (CLI exit code 2)."""


class ParseError(UsageError):
    """Malformed input file (CLI exit code 2)."""


class GuardError(UsageError):
    """An exhaustive-size guard was exceeded; pass force=True to override."""


class ConstructionError(HychromaError):
    """A construction's validated precondition failed, e.g. a code is not
    strong enough for the requested partition."""


class IntegrityError(HychromaError):
    """An internal consistency check failed on an object that should have
    been valid (verification failure, broken invariant)."""
