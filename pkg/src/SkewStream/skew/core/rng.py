import zlib
from typing import Tuple, Union

import numpy as np

Name = Union[int, str]


def _key(name: Name) -> int:
    if isinstance(name, str):
        return zlib.crc32(name.encode('utf-8'))
    if name < 0:
        raise ValueError("Stream ids must be nonnegative")
    return int(name)


class RngStream:
    """
    Named, reproducible random stream.

    A stream is identified by its root seed and a path of substream names;
    the same (seed, path) always replays the same draws, distinct paths are
    statistically independent (numpy SeedSequence spawn keys).
    """

    __slots__ = ('seed', 'stream_id', '_gen')

    def __init__(self, seed: int, *stream_id: Name):
        self.seed = int(seed) & 0xFFFFFFFFFFFFFFFF
        self.stream_id: Tuple[int, ...] = tuple(_key(n) for n in stream_id)
        self._gen = None

    @property
    def gen(self) -> np.random.Generator:
        if self._gen is None:
            seq = np.random.SeedSequence(self.seed, spawn_key=self.stream_id)
            self._gen = np.random.Generator(np.random.PCG64(seq))
        return self._gen

    def child(self, *names: Name) -> "RngStream":
        stream = RngStream(self.seed)
        stream.stream_id = self.stream_id + tuple(_key(n) for n in names)
        return stream

    def random(self) -> float:
        return float(self.gen.random())

    def uniforms(self, size: int) -> np.ndarray:
        return self.gen.random(size)

    def integers(self, high: int, size: int = None):
        return self.gen.integers(0, high, size=size)

    def permutation(self, n: int) -> np.ndarray:
        return self.gen.permutation(n)

    def __repr__(self) -> str:
        return f"RngStream(seed={self.seed}, stream_id={self.stream_id})"
