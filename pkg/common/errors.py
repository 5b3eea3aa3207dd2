"""
Exception hierarchy for the W-infinity engine
"""


class EngineError(Exception):
    """Base class for all engine errors"""


class InvalidInputError(EngineError, ValueError):
    """Raised when an operation receives arguments outside its domain"""


class InvalidStateError(EngineError, RuntimeError):
    """Raised when an operation is applied to a value in the wrong state"""


class InvariantBreach(EngineError, RuntimeError):
    """Raised when an internal consistency check fails"""
