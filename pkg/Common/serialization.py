import json
import math
from typing import Any

import numpy as np

from Common.config import FLOAT_DIGITS


def _format_float(value: float) -> str:
    if math.isnan(value) or math.isinf(value):
        # Not representable in strict JSON
        return 'null'
    text = format(value, f'.{FLOAT_DIGITS}g')
    if not any(c in text for c in '.en'):
        text += '.0'
    return text


def dumps(obj: Any) -> str:
    """ Compact JSON with every float written with FLOAT_DIGITS significant digits """
    if isinstance(obj, (bool, np.bool_)):
        return 'true' if obj else 'false'
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _format_float(float(obj))
    if isinstance(obj, dict):
        items = (f'{json.dumps(str(key))}: {dumps(value)}' for key, value in obj.items())
        return '{' + ', '.join(items) + '}'
    if isinstance(obj, (list, tuple, np.ndarray)):
        return '[' + ', '.join(dumps(value) for value in obj) + ']'
    return json.dumps(obj)
