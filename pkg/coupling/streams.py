"""
Deterministic chunked Monte Carlo on counter-based random substreams

Chunk k always draws from Philox keyed by SeedSequence(seed, spawn_key=(k,)),
so a chunk's samples depend only on (seed, k) and never on which worker ran it
or how many workers there were. Partial statistics are merged in ascending
chunk order.
"""

import logging
from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from spd_core import ParamOutOfRange

logger = logging.getLogger(__name__)

DEFAULT_CHUNK_SIZE = 65536
SEED_MASK = (1 << 64) - 1


@dataclass(frozen=True, eq=False)
class ChunkStats:
    """Count, mean and sum of squared deviations of a (possibly array-valued) statistic"""

    count: int
    mean: np.ndarray
    m2: np.ndarray

    @classmethod
    def of(cls, values: np.ndarray) -> "ChunkStats":
        mean = values.mean(axis=0)
        return cls(count=values.shape[0], mean=mean, m2=((values - mean) ** 2).sum(axis=0))

    def merge(self, other: "ChunkStats") -> "ChunkStats":
        total = self.count + other.count
        delta = other.mean - self.mean
        mean = self.mean + delta * (other.count / total)
        m2 = self.m2 + other.m2 + delta * delta * (self.count * other.count / total)
        return ChunkStats(count=total, mean=mean, m2=m2)

    def variance(self) -> np.ndarray:
        return self.m2 / (self.count - 1) if self.count > 1 else np.zeros_like(self.m2)

    def std_error(self) -> np.ndarray:
        return np.sqrt(self.variance() / self.count)


def substream(seed: int, chunk: int) -> np.random.Generator:
    """Independent generator for chunk `chunk` of the stream rooted at `seed`"""
    sequence = np.random.SeedSequence(seed & SEED_MASK, spawn_key=(chunk,))
    return np.random.Generator(np.random.Philox(sequence))


def run_chunks(
    sampler: Callable[[np.random.Generator, int], np.ndarray],
    samples: int,
    seed: int,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
    workers: int = 1,
) -> ChunkStats:
    """
    Run `sampler(rng, n)` over fixed-size chunks and merge the per-chunk statistics

    Args:
        sampler: returns an array of n per-sample values (first axis indexes samples)
        samples: total number of samples
        seed: root seed
        chunk_size: samples per chunk; the last chunk takes the remainder
        workers: thread pool size

    Returns:
        Merged ChunkStats
    """
    if samples < 1:
        raise ParamOutOfRange(f"samples must be >= 1, got {samples}")
    if chunk_size < 1:
        raise ParamOutOfRange(f"chunk_size must be >= 1, got {chunk_size}")

    sizes = [chunk_size] * (samples // chunk_size)
    if samples % chunk_size:
        sizes.append(samples % chunk_size)
    logger.debug(f"Monte Carlo: {samples} samples in {len(sizes)} chunks, seed={seed}, workers={workers}")

    def run(chunk: int) -> ChunkStats:
        return ChunkStats.of(np.asarray(sampler(substream(seed, chunk), sizes[chunk]), dtype=np.float64))

    if workers > 1 and len(sizes) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(run, range(len(sizes))))
    else:
        parts = [run(chunk) for chunk in range(len(sizes))]

    merged = parts[0]
    for part in parts[1:]:
        merged = merged.merge(part)
    return merged
