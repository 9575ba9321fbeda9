"""
This module contains core data models shared across different modules of the application.
"""

import math

from pydantic import BaseModel, Field


class CorrelationEstimate(BaseModel):
    """Monte Carlo estimate of a correlation between two binary outcomes."""

    mean: float = Field(..., ge=-1.0, le=1.0, description="Sample mean of the products")
    stderr: float = Field(..., ge=0.0, description="Standard error of the mean")
    n: int = Field(..., ge=1, description="Number of draws")

    @classmethod
    def from_product_sum(cls, total: int, n: int) -> "CorrelationEstimate":
        """Build the estimate from the sum of n products in {-1, +1}.

        The standard error uses the exact variance of a binary product,
        (1 - mean^2) / n, rather than the sample variance.
        """
        mean = total / n
        return cls(mean=mean, stderr=math.sqrt(max(0.0, 1.0 - mean * mean) / n), n=n)

    def within(self, target: float, sigmas: float) -> bool:
        """Whether target lies within `sigmas` standard errors of the mean."""
        return abs(self.mean - target) <= sigmas * self.stderr

    model_config = {
        # Forbid unexpected fields
        "extra": "forbid",
        # Immutable once created
        "frozen": True,
    }
