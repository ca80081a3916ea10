import numpy as np

from Common.config import RNG_BLOCK


def chain_stream(seed: int, chain_id: int = 0) -> np.random.Generator:
    """
    Independent, reproducible stream for one chain: a counter-based Philox generator keyed by
    SeedSequence(seed, spawn_key=(chain_id,)). Identical (seed, chain_id) give identical streams
    on every platform
    """
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=(chain_id,))))


class UniformStream:
    """ Uniforms in [0, 1) from a generator, fetched block-wise and handed out one at a time in order.
    The n-th value handed out depends only on the generator's state at construction """

    def __init__(self, rng: np.random.Generator, block: int = RNG_BLOCK):
        self._rng = rng
        self._block = block
        self._buffer = []
        self._position = 0
        self.n_drawn: int = 0

    def next(self) -> float:
        if self._position == len(self._buffer):
            self._buffer = self._rng.random(self._block).tolist()
            self._position = 0
        value = self._buffer[self._position]
        self._position += 1
        self.n_drawn += 1
        return value

    def index(self, size: int) -> int:
        """ Uniform integer in [0, size) from one uniform draw """
        return min(int(self.next() * size), size - 1)
