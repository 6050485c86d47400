class AffLorentzError(ValueError):
    """Base class for domain errors raised by this package."""


class DegenerateMatrix(AffLorentzError):
    pass


class OrientationViolation(AffLorentzError):
    pass


class FlatDegenerate(AffLorentzError):
    pass


class AbsoluteIntersectionUndefined(AffLorentzError):
    pass


class DomainExceeded(AffLorentzError):
    pass


class UnresolvedCase(AffLorentzError):
    pass


class NotInDomain(AffLorentzError):
    pass


class EmptySphere(AffLorentzError):
    pass


class WrongCurvature(AffLorentzError):
    pass


class BlowUp(AffLorentzError):
    pass


class TargetUnreachable(AffLorentzError):
    pass
