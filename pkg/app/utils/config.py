# app/utils/config.py
import os
from functools import lru_cache

from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError, model_validator

from app.utils.errors import SupertropError

load_dotenv()


class Settings(BaseModel):
    seed: int = 7
    nu_low: int = -10
    nu_high: int = 10
    ghost_density: float = Field(0.2, ge=0.0, le=1.0)
    zero_density: float = Field(0.1, ge=0.0, le=1.0)
    sample_retries: int = Field(200, ge=1)
    log_level: str = "WARNING"
    expand_cap: int = Field(8, ge=1)   # largest n for the permutation expansion
    rank_cap: int = Field(10, ge=1)    # largest rows/cols accepted by rank()

    @model_validator(mode="after")
    def check_range(self):
        if self.nu_low > self.nu_high:
            raise ValueError("nu_low must not exceed nu_high")
        if self.ghost_density + self.zero_density > 1.0:
            raise ValueError("ghost_density + zero_density must not exceed 1")
        return self


ENV_PREFIX = "SUPERTROP_"


def _from_env() -> dict:
    values = {}
    for name in Settings.model_fields:
        raw = os.getenv(ENV_PREFIX + name.upper())
        if raw is not None:
            values[name] = raw
    return values


@lru_cache
def get_settings() -> Settings:
    try:
        return Settings(**_from_env())
    except ValidationError as e:
        raise SupertropError(f"invalid configuration: {e}") from e
