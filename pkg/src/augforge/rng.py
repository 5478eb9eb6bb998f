"""Counter-based deterministic random source.

Every probabilistic operation in this package draws from an ``Rng`` keyed by
(global seed, example index, entry id).  Draw ``i`` is a pure function of the
key and ``i``, so corpora can be processed in any order, on any number of
workers, on any platform, and produce bitwise-identical output.
"""

from __future__ import annotations

from dataclasses import dataclass, field

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15

ALGORITHM = "counter-splitmix64/v1"


def _mix64(z: int) -> int:
    z &= _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return (z ^ (z >> 31)) & _MASK64


def fnv1a64(text: str) -> int:
    """64-bit FNV-1a over UTF-8 bytes. Stable across processes and platforms
    (unlike the builtin ``hash``)."""
    h = 0xCBF29CE484222325
    for b in text.encode("utf-8"):
        h ^= b
        h = (h * 0x100000001B3) & _MASK64
    return h


@dataclass
class Rng:
    """A stream of draws identified by ``(seed, stream)``.

    The instance holds only a counter; draw ``i`` is ``mix(key + i*GOLDEN)``
    where ``key`` is derived from seed and stream, so two instances with the
    same identity yield the same sequence no matter how their consumption is
    interleaved with other instances.
    """

    seed: int
    stream: int
    algorithm: str = ALGORITHM
    _counter: int = field(default=0, repr=False)

    def __post_init__(self):
        self.seed &= _MASK64
        self.stream &= _MASK64
        self._key = _mix64(_mix64(self.seed) ^ self.stream)

    def next_u64(self) -> int:
        self._counter += 1
        return _mix64((self._key + self._counter * _GOLDEN) & _MASK64)

    def random(self) -> float:
        """Float in [0, 1) with 53 bits of precision."""
        return (self.next_u64() >> 11) / (1 << 53)

    def below(self, n: int) -> int:
        """Integer in [0, n)."""
        if n <= 0:
            raise ValueError("n must be positive")
        return self.next_u64() % n

    def choice(self, seq):
        if not seq:
            raise ValueError("empty sequence")
        return seq[self.below(len(seq))]

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


def derive_rng(global_seed: int, example_index: int, entry_id: str) -> Rng:
    """Independent stream for one (example, entry) pair under a global seed."""
    stream = _mix64(fnv1a64(entry_id) ^ _mix64(example_index & _MASK64))
    return Rng(seed=global_seed, stream=stream)
