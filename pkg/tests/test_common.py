import json
import logging

import numpy as np
import pytest

from Common import (CapacityError, DegenerateChainError, DomainError, InputError, NotPositiveDefiniteError,
                    NumericalError, ParseError, SamplerError, configure_logging)
from Common.serialization import dumps


class TestDumps:
    def test_seventeen_digits(self):
        assert dumps(0.1) == '0.10000000000000001'
        assert json.loads(dumps(1 / 3)) == 1 / 3

    def test_whole_floats_stay_floats(self):
        assert dumps(2.0) == '2.0'
        assert dumps(1e20) == '1e+20'

    def test_non_finite(self):
        assert dumps([float('nan'), float('inf')]) == '[null, null]'

    def test_numpy_values(self):
        record = {"subset": np.array([0, 3]), "ok": np.bool_(True), "p": np.float64(0.5)}
        assert json.loads(dumps(record)) == {"subset": [0, 3], "ok": True, "p": 0.5}

    def test_nested(self):
        assert json.loads(dumps({"curve": [(0, 0.5), (1, 0.25)], "name": "x", "t": None})) == \
            {"curve": [[0, 0.5], [1, 0.25]], "name": "x", "t": None}


class TestErrors:
    @pytest.mark.parametrize("error, code", [(SamplerError("x"), 1), (InputError("x"), 2),
                                             (ParseError("f.csv", 3, "x"), 2), (DomainError("x"), 3),
                                             (DegenerateChainError("x"), 3), (CapacityError(10, 5), 4),
                                             (NumericalError("x"), 5)])
    def test_exit_codes(self, error, code):
        assert error.exit_code == code

    def test_parse_error_names_line(self):
        assert str(ParseError("f.csv", 3, "bad value")) == "f.csv:3: bad value"

    def test_capacity_error_suggests_cap(self):
        assert "--cap 10" in str(CapacityError(10, 5))

    def test_capacity_error_remedy(self):
        message = str(CapacityError(10, 5, remedy="rerun with --steps"))
        assert message.endswith("(rerun with --steps)") and "--cap 10" not in message

    def test_pivot_error_without_index(self):
        error = NotPositiveDefiniteError(None, float('nan'))
        assert error.pivot_index is None
        assert str(error).startswith("a pivot is nan")

    def test_input_error_is_value_error(self):
        assert isinstance(InputError("x"), ValueError)


class TestLogging:
    @pytest.mark.parametrize("verbosity, level", [(0, logging.WARNING), (1, logging.INFO), (3, logging.DEBUG)])
    def test_verbosity(self, verbosity, level):
        configure_logging(verbosity)
        assert logging.getLogger().level == level
