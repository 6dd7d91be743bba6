"""Exception hierarchy shared by every module."""


class PermPatError(Exception):
    """Base class; the CLI maps these to exit status 1."""


class SizeLimitExceeded(PermPatError):
    pass


class NonIntegerResult(PermPatError):
    pass


class ZeroConstantTerm(PermPatError):
    pass


class NonzeroConstantTerm(PermPatError):
    pass


class PreconditionViolated(PermPatError):
    pass


class EmptyClass(PermPatError):
    pass


class LengthTooSmall(PermPatError):
    pass


class NotRising(PermPatError):
    pass


class BracketingFailed(PermPatError):
    pass


class NoFormula(PermPatError):
    """No closed form or generating function is known for this (pattern, kind)."""
