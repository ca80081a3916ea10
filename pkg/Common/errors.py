from typing import Optional


class SamplerError(Exception):
    """ Base class of every error the sampler raises on purpose.
    exit_code is the status the command line surface exits with """
    exit_code = 1


class InputError(SamplerError, ValueError):
    """ Invalid arguments: indices out of range, wrong cardinality, malformed values """
    exit_code = 2


class ParseError(InputError):
    def __init__(self, path, line_number: int, message: str):
        self.path = str(path)
        self.line_number = line_number
        super().__init__(f"{self.path}:{line_number}: {message}")


class DomainError(SamplerError):
    """ Well-formed input outside the domain: empty support, k above the rank, degenerate e_k """
    exit_code = 3


class DegenerateChainError(DomainError):
    """ A proposal was requested from a chain whose support is a single state (k == 0 or k == n) """


class CapacityError(SamplerError):
    exit_code = 4

    def __init__(self, required: int, cap: int, what: str = "subsets", remedy: Optional[str] = None):
        self.required = required
        self.cap = cap
        remedy = remedy or f"rerun with --cap {required} or larger"
        super().__init__(f"{what} to enumerate: {required}, above the enumeration cap {cap} ({remedy})")


class NumericalError(SamplerError):
    exit_code = 5


class NotPositiveDefiniteError(SamplerError):
    """ Raised by cholesky() when a pivot falls at or below the tolerance.
    Callers read it as 'determinant <= 0', i.e. zero mass """

    def __init__(self, pivot_index: Optional[int], pivot: float):
        self.pivot_index = pivot_index
        self.pivot = pivot
        where = "a pivot" if pivot_index is None else f"pivot {pivot_index}"
        super().__init__(f"{where} is {pivot:.3e}, not positive definite")
