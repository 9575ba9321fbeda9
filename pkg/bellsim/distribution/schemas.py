"""
Pydantic schemas for random streams and hidden configurations.
"""

import numpy as np
from pydantic import BaseModel, Field

from bellsim.transform.schemas import Angle
from .constants import MAX_KEY_WORD


class RngStream(BaseModel):
    """Counter-based random stream identified by (seed, stream_index).

    The Philox key is the pair (seed, stream_index); chunk k of a Monte Carlo
    run starts at counter word 2 = k, so chunks never overlap and each one can
    be generated on its own, by any worker, bit for bit.
    """

    seed: int = Field(default=0, ge=0, le=MAX_KEY_WORD)
    stream_index: int = Field(default=0, ge=0, le=MAX_KEY_WORD)

    def generator(self, chunk: int = 0) -> np.random.Generator:
        """Generator positioned at the start of the given chunk."""
        key = np.array([self.seed, self.stream_index], dtype=np.uint64)
        counter = np.array([0, 0, chunk, 0], dtype=np.uint64)
        return np.random.Generator(np.random.Philox(key=key, counter=counter))

    def substream(self, offset: int) -> "RngStream":
        """Independent stream for the offset-th member of a family (grid points, settings)."""
        return RngStream(
            seed=self.seed, stream_index=(self.stream_index + offset) % (MAX_KEY_WORD + 1)
        )

    model_config = {"extra": "forbid", "frozen": True}


class HiddenConfig(BaseModel):
    """Coordinate of the hidden preferred direction in a stated detector frame."""

    lambda_: Angle = Field(..., alias="lambda")

    model_config = {"extra": "forbid", "frozen": True, "populate_by_name": True}
