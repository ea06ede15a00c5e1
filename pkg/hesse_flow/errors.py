class HesseFlowError(RuntimeError):
    pass


class UsageError(HesseFlowError):
    pass


class ZeroDenominator(HesseFlowError):
    pass


class IdentityFailed(HesseFlowError):
    def __init__(self, check_id: str, difference, message: str = ''):
        self.check_id = check_id
        self.difference = difference
        super().__init__(message or f'Identity "{check_id}" failed, difference: {difference}')


class SingularCurve(HesseFlowError):
    pass


class SingularMember(HesseFlowError):
    pass


class CuspPoint(HesseFlowError):
    pass


class RootFindingDiverged(HesseFlowError):
    pass


class DedupAmbiguity(HesseFlowError):
    pass


class ContinuationJump(HesseFlowError):
    def __init__(self, interval: str, parameter: float, distance: float):
        self.interval = interval
        self.parameter = parameter
        self.distance = distance
        super().__init__(f'Continuation jump of {distance:.3g} on interval {interval} near sample parameter {parameter:.12g}')


class InvalidComplex(HesseFlowError):
    pass


class SizeLimit(HesseFlowError):
    pass


class GeometryViolation(HesseFlowError):
    pass
