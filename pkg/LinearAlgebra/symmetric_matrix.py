from typing import Sequence

import numpy as np

from Common.errors import InputError


class SymmetricMatrix:
    """ A dense real symmetric matrix. The entries are symmetrized on construction
    by averaging with the transpose, and the underlying array is read-only """

    def __init__(self, entries):
        array = np.array(entries, dtype=float)
        if array.ndim != 2 or array.shape[0] != array.shape[1]:
            raise InputError(f"expected a square matrix, got shape {array.shape}")
        if not np.all(np.isfinite(array)):
            raise InputError("matrix has non-finite entries")
        array = (array + array.T) / 2
        array.setflags(write=False)
        self._entries: np.ndarray = array

    @property
    def n(self) -> int:
        return self._entries.shape[0]

    @property
    def entries(self) -> np.ndarray:
        return self._entries

    @property
    def max_diagonal(self) -> float:
        if not self.n:
            return 0.0
        return float(np.max(np.diag(self._entries)))

    @property
    def max_abs(self) -> float:
        if not self.n:
            return 0.0
        return float(np.max(np.abs(self._entries)))

    def __getitem__(self, item):
        return self._entries[item]

    def __repr__(self):
        return f'SymmetricMatrix(n={self.n})'


def principal_submatrix(matrix: SymmetricMatrix, subset: Sequence[int]) -> SymmetricMatrix:
    """ Rows and columns indexed by subset, in sorted index order. The empty subset gives a 0x0 matrix """
    indices = sorted(int(i) for i in subset)
    for i in indices:
        if not 0 <= i < matrix.n:
            raise InputError(f"index {i} is outside [0, {matrix.n})")
    return SymmetricMatrix(matrix.entries[np.ix_(indices, indices)])
