from dataclasses import dataclass, field
from typing import Any, Optional

from ..config import get_config
from ..errors import SizeCap

DEFAULT_SEED = 0


@dataclass(frozen=True)
class Job:
    """One CLI invocation: what to run, on what, and with which caps and seed."""

    command: str
    input: Optional[str] = None
    output: Optional[str] = None
    max_n: Optional[int] = None
    seed: int = DEFAULT_SEED
    format: str = "json"
    options: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        cap = get_config().max_n
        if self.max_n is not None and self.max_n > cap:
            raise SizeCap(self.max_n, cap, "--max-n")
        if self.max_n is not None and self.max_n < 0:
            raise ValueError(f"--max-n must be nonnegative, got {self.max_n}")

    @property
    def effective_max_n(self) -> int:
        return get_config().max_n if self.max_n is None else self.max_n

    @classmethod
    def from_json(cls, data: dict) -> "Job":
        """Parse job data from JSON format"""
        return cls(
            command=data["command"],
            input=data.get("input"),
            output=data.get("output"),
            max_n=data.get("max_n"),
            seed=int(data.get("seed", DEFAULT_SEED)),
            format=data.get("format", "json"),
            options=dict(data.get("options", {})),
        )

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "input": self.input,
            "output": self.output,
            "max_n": self.max_n,
            "seed": self.seed,
            "format": self.format,
            "options": self.options,
        }
