"""Run configuration model."""

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field


class RunConfig(BaseModel):
    """Configuration for solving and searching.

    Loaded by ``jsieve.utils.config.load_run_config`` with precedence
    flags > environment > config file > defaults.
    """

    model_config = ConfigDict(frozen=True)

    max_blowups: int = Field(0, ge=0, description="Enumeration depth")
    delta_cap: int = Field(64, ge=1, description="Upper bound on each Delta coefficient")
    result_cap: int = Field(128, ge=1, description="Maximum Delta solutions per L")
    score_threshold: int = Field(2, description="Minimum Riemann-Roch bound to report")
    kernel_box: int = Field(2, ge=0, description="Coset search radius for non-unique L")
    allow_negative_l: bool = Field(False, description="Permit negative L coefficients")
    allow_no_type1: bool = Field(False, description="Drop the at-least-one type-1 rule")
    verbose_trace: bool = Field(False, description="Keep traces of rejected candidates")
    workers: int = Field(1, ge=1, description="Worker processes for search")
    max_trees: Optional[int] = Field(None, ge=1, description="Abort after visiting this many trees")
