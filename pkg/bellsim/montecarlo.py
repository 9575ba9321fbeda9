"""
Chunked Monte Carlo execution.

A run of n draws is cut into fixed chunks of ``chunk_size`` draws; chunk k
always uses the generator ``stream.generator(k)``. Chunks are evaluated in
order, or in a process pool whose ``map`` keeps the order, and reduced in
chunk order. Results are therefore bit-identical for any worker count.
"""

import logging
import multiprocessing
from collections.abc import Callable
from typing import Any, TypeVar

import numpy as np

from bellsim.config import MonteCarloSettings, settings
from bellsim.distribution.schemas import RngStream

logger = logging.getLogger(__name__)

T = TypeVar("T")

# A kernel receives a positioned generator and the number of draws of its chunk
ChunkKernel = Callable[[np.random.Generator, int], T]


def chunk_sizes(n: int, chunk_size: int) -> list[int]:
    """Sizes of the chunks covering n draws; only the last one may be short."""
    full, rest = divmod(n, chunk_size)
    return [chunk_size] * full + ([rest] if rest else [])


def _run_chunk(task: tuple[Callable[..., Any], RngStream, int, int]) -> Any:
    kernel, stream, chunk, size = task
    logger.debug(f"Chunk {chunk} of stream {stream.stream_index}: {size} draws")
    return kernel(stream.generator(chunk), size)


class MonteCarloRunner:
    """Runs chunk kernels over a stream, sequentially or in a process pool."""

    def __init__(self, mc_settings: MonteCarloSettings | None = None) -> None:
        self.settings = mc_settings or settings.monte_carlo

    @property
    def workers(self) -> int:
        return self.settings.workers

    def map_chunks(self, kernel: ChunkKernel[T], n: int, stream: RngStream) -> list[T]:
        """Evaluate kernel on every chunk of an n-draw run, in chunk order.

        The kernel must be picklable (a module-level function or a
        functools.partial of one) when more than one worker is configured.
        """
        sizes = chunk_sizes(n, self.settings.chunk_size)
        tasks = [(kernel, stream, k, size) for k, size in enumerate(sizes)]
        if self.workers == 1 or len(tasks) <= 1:
            return [_run_chunk(task) for task in tasks]

        context = multiprocessing.get_context(self.settings.start_method)
        with context.Pool(processes=min(self.workers, len(tasks))) as pool:
            return pool.map(_run_chunk, tasks)

    def sum_chunks(
        self, kernel: ChunkKernel[np.ndarray], n: int, stream: RngStream
    ) -> np.ndarray:
        """Ordered sum of per-chunk partial sums (integer partials stay exact)."""
        partials = self.map_chunks(kernel, n, stream)
        total = np.zeros_like(partials[0]) if partials else np.zeros(1, dtype=np.int64)
        for partial in partials:
            total = total + partial
        return total

    def concat_chunks(
        self, kernel: ChunkKernel[np.ndarray], n: int, stream: RngStream
    ) -> np.ndarray:
        partials = self.map_chunks(kernel, n, stream)
        if not partials:
            return np.empty(0, dtype=np.float64)
        return np.concatenate(partials)


def get_runner(workers: int | None = None) -> MonteCarloRunner:
    """
    Get a MonteCarloRunner instance.

    Args:
        workers: Override of the configured worker count

    Returns:
        MonteCarloRunner: Runner using the application settings
    """
    base = settings.monte_carlo
    if workers is None:
        return MonteCarloRunner(base)
    return MonteCarloRunner(MonteCarloSettings(**{**base.model_dump(), "workers": workers}))
