"""Exception types raised across the package."""


class RigtropError(Exception):
    """Base class for all errors raised by rigtrop."""


class InvalidCylindricShape(RigtropError, ValueError):
    pass


class InvalidRiggedConfiguration(RigtropError, ValueError):
    pass


class NotSubtractionFree(RigtropError, ValueError):
    pass


class NotAPartition(RigtropError, ValueError):
    """Formula output failed to be weakly decreasing."""


class ConvexityViolation(RigtropError, ValueError):
    pass


class RibbonRemovalFailure(RigtropError, RuntimeError):
    pass


class NonConvergence(RigtropError, RuntimeError):
    pass


class UnknownSuite(RigtropError, KeyError):
    pass


class ParseError(RigtropError, ValueError):
    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class AlphabetError(ParseError):
    pass


class NotWeaklyIncreasing(ParseError):
    pass
