"""registry entry of one check"""

from dataclasses import dataclass
from typing import Callable

from eulerian_report import CheckKind, VerificationReport
from eulerian_settings import CapKind, EulerianSettings


@dataclass(frozen=True)
class CheckEntry:
    """callable taking (n, settings=...), its class and its n region"""

    fn: Callable[..., VerificationReport]
    kind: CheckKind
    default_n: int
    """largest n run when no --max-n is given"""
    cap_kind: CapKind
    min_n: int = 1
    cap_offset: int = 0
    """the check enumerates size n + cap_offset"""
    sweep_cap: int | None = None
    """largest n of a check that repeats an enumeration for every tau"""

    def cap(self, settings: EulerianSettings) -> int:
        """largest n allowed under the settings"""
        cap = settings.effective_cap(self.cap_kind) - self.cap_offset
        if self.sweep_cap is not None:
            cap = min(cap, self.sweep_cap)
        return cap
