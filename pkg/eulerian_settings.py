"""eulerian settings"""

from functools import lru_cache
from typing import Callable, Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from exactpoly import CapExceededError

hard_caps: dict[str, int] = {
    "S": 11,
    "B": 8,
    "I": 11,
    "rec": 40,
}
"""hard caps: S_n and I_n enumeration, B_n enumeration, recurrences"""

CapKind = Literal["S", "B", "I", "rec"]


class EulerianSettings(BaseSettings):
    """settings read from EULERIAN_* environment variables or .env"""

    model_config = SettingsConfigDict(
        env_prefix="EULERIAN_",
        env_file=".env",
        extra="ignore",
        frozen=True,
    )

    max_n: int | None = Field(default=None, ge=1)
    """lowers every hard cap, never raises it"""

    workers: int = Field(default=1, ge=1)
    oracle_limit: int = Field(default=8, ge=1)
    """check_gessel cross-checks the recurrence against brute force up to here"""

    chunks_per_worker: int = Field(default=4, ge=1)
    log_level: str = "WARNING"

    before_check: Callable[[str, dict], None] | None = Field(default=None, exclude=True)
    """
    check_name: str, params: dict
    """
    after_check: Callable[[str, str, int], None] | None = Field(
        default=None, exclude=True
    )
    """
    check_name: str, outcome: str, duration: int (ms)
    """

    def effective_cap(self, kind: CapKind) -> int:
        """hard cap lowered by max_n"""
        cap = hard_caps[kind]
        if self.max_n is not None:
            cap = min(cap, self.max_n)
        return cap

    def check_cap(self, kind: CapKind, n: int, what: str = ""):
        """raise CapExceededError naming the valid region"""
        cap = self.effective_cap(kind)
        if not 1 <= n <= cap:
            label = what or kind
            raise CapExceededError(f"{label}: n = {n} outside valid region 1..{cap}")


@lru_cache(maxsize=1)
def get_settings() -> EulerianSettings:
    """process-wide settings"""
    return EulerianSettings()
