from dataclasses import dataclass, field
from typing import Any, Optional


@dataclass
class IdentityReport:
    """Outcome of a batch of exact identity checks on one building set.

    `checks` decide `ok`; `flagged` records readings that are evaluated but
    expected to fail and therefore never affect `ok`.
    """

    subject: str
    checks: dict[str, bool] = field(default_factory=dict)
    flagged: dict[str, bool] = field(default_factory=dict)
    details: dict[str, Any] = field(default_factory=dict)

    def record(self, name: str, holds: bool, detail: Any = None):
        self.checks[name] = holds
        if detail is not None:
            self.details[name] = detail

    def flag(self, name: str, holds: bool):
        self.flagged[name] = holds

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    @property
    def first_failure(self) -> Optional[str]:
        for name, holds in self.checks.items():
            if not holds:
                return name
        return None

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "ok": self.ok,
            "first_failure": self.first_failure,
            "checks": self.checks,
            "flagged": self.flagged,
            "details": self.details,
        }
