"""Exception hierarchy shared by every module; the CLI maps these to exit codes."""


class SuperKacError(Exception):
    code = "error"


class DomainError(SuperKacError, ValueError):
    code = "domain"


class MalformedInput(DomainError):
    """Input that does not match the expected JSON shape."""
    code = "malformed"


class ParameterError(DomainError):
    code = "parameter"


class PreconditionError(DomainError):
    code = "precondition"


class DegenerateFunctional(DomainError):
    code = "degenerate_functional"


class UnsupportedAlgebra(DomainError):
    code = "unsupported"


class RequiresRealization(DomainError):
    code = "requires_realization"


class SizeCapExceeded(SuperKacError):
    code = "size_cap"


class InternalInconsistency(SuperKacError, RuntimeError):
    code = "internal"


class SearchFailure(SuperKacError):
    code = "search_failure"
