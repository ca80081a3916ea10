from .errors import (SamplerError, InputError, ParseError, DomainError, DegenerateChainError,
                     CapacityError, NumericalError, NotPositiveDefiniteError)
from .log import configure_logging
