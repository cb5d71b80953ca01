"""Exception hierarchy shared by every sub-package.

Validation problems derive from ``ValueError`` and run-time failures from
``RuntimeError`` so callers may catch either the builtin or the specific type.
"""

from __future__ import annotations


class VqeBenchError(Exception):
    """Root of all vqebench errors."""


class ConfigError(VqeBenchError, ValueError):
    pass


class CoefficientFileError(ConfigError):
    def __init__(self, message: str, *, record: int | None = None, line: int | None = None):
        where = []
        if record is not None:
            where.append(f"record {record}")
        if line is not None:
            where.append(f"line {line}")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)
        self.record = record
        self.line = line


class RegisterSizeError(VqeBenchError, ValueError):
    pass


class NonHermitianError(VqeBenchError, ValueError):
    pass


class EigenSolverError(VqeBenchError, RuntimeError):
    pass


class ObjectiveError(VqeBenchError, RuntimeError):
    def __init__(self, message: str, *, theta: object = None, index: int | None = None):
        super().__init__(message)
        self.theta = theta
        self.index = index


class SurrogateError(VqeBenchError, RuntimeError):
    pass
