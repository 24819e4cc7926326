"""Exception hierarchy shared by every gftkit module."""


class GFTError(Exception):
    """Base class for all gftkit errors."""


class DegreeMismatchError(GFTError, ValueError):
    pass


class SingularDivisionError(GFTError, ZeroDivisionError):
    pass


class BranchAnchorError(GFTError, ValueError):
    """A log/exp/power series was asked for with the wrong constant term."""


class CatalogError(GFTError, KeyError):
    pass


class DomainError(GFTError, ValueError):
    """A parameter lies outside the range an operation accepts."""


class SingularSampleError(GFTError, ArithmeticError):
    """f or f' vanishes (or underflows) at a requested sample point."""

    def __init__(self, message, z=None):
        super().__init__(message)
        self.z = z


class BranchTrackingError(SingularSampleError):
    """The continuous logarithm along a ray cannot be continued (zero on the path)."""


class QuadratureError(GFTError, ArithmeticError):
    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class AnalysisError(GFTError, RuntimeError):
    pass
