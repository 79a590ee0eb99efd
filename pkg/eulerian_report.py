"""verification report model"""

import json
from typing import Any, Literal

from pydantic import BaseModel, model_validator

Outcome = Literal["pass", "fail", "skipped"]
CheckKind = Literal["theorem", "conjecture"]


class VerificationReport(BaseModel):
    """outcome record of one identity or conjecture check"""

    check: str
    params: dict[str, Any] = {}
    outcome: Outcome
    witness: str | None = None
    ms: int = 0
    kind: CheckKind = "theorem"
    details: dict[str, Any] | None = None
    """full state for conjecture findings (gamma tables, polynomials)"""

    @model_validator(mode="after")
    def check_witness(self):
        """fail carries a witness, pass never does"""
        if self.outcome == "fail" and not self.witness:
            raise ValueError(f"{self.check}: fail without witness")
        if self.outcome == "pass" and self.witness is not None:
            raise ValueError(f"{self.check}: pass with witness {self.witness}")
        return self

    @property
    def passed(self) -> bool:
        """outcome is pass"""
        return self.outcome == "pass"

    def sort_key(self) -> tuple[str, int, str]:
        """check name, then n, then the remaining params"""
        return (
            self.check,
            self.params.get("n", 0),
            json.dumps(self.params, sort_keys=True, default=str),
        )


def make_report(
    check: str,
    params: dict[str, Any],
    witness: str | None,
    *,
    ms: int = 0,
    kind: CheckKind = "theorem",
    details: dict[str, Any] | None = None,
) -> VerificationReport:
    """pass when witness is None, fail otherwise"""
    return VerificationReport(
        check=check,
        params=params,
        outcome="pass" if witness is None else "fail",
        witness=witness,
        ms=ms,
        kind=kind,
        details=details,
    )


def reports_to_json(reports: list[VerificationReport]) -> list[dict]:
    """Report JSON contract: check, params, outcome, witness, ms (+ kind, details)"""
    return [
        {
            "check": r.check,
            "params": r.params,
            "outcome": r.outcome,
            "witness": r.witness,
            "ms": r.ms,
            "kind": r.kind,
            "details": r.details,
        }
        for r in sorted(reports, key=VerificationReport.sort_key)
    ]
