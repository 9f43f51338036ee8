"""Exception hierarchy for the cgcsurf pipeline."""


class CgcError(Exception):
    """Base class for all cgcsurf errors."""


class NotOnHyperboloid(CgcError):
    pass


class NotOnOrbit(CgcError):
    pass


class OutOfDomain(CgcError):
    pass


class DomainViolation(CgcError):
    pass


class NonConvergence(CgcError):
    pass


class ImmersionViolated(CgcError):
    pass


class DegenerateDenominator(CgcError):
    pass


class ZeroLambda(CgcError):
    pass


class HyperboloidDrift(CgcError):
    pass


class DegenerateMetric(CgcError):
    pass


class NotInvariant(CgcError):
    pass


class OutOfRange(CgcError):
    pass


class OnUnitCircle(CgcError):
    pass


class ParseError(CgcError):
    pass


class ValidationError(CgcError):
    def __init__(self, key, message):
        self.key = key
        super().__init__(f"{key}: {message}")
