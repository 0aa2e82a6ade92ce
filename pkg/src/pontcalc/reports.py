"""Structured per-lemma verification reports."""

from dataclasses import dataclass, field
from typing import Optional


@dataclass
class LemmaReport:
    """Outcome of checking one statement at bounded parameters.

    ``weights_checked`` is the largest weight examined (weights 0..W); a
    passing report means "verified up to weight W", not "proved".
    """

    lemma_id: str
    parameters: dict
    weights_checked: Optional[int]
    verdict: bool
    first_failure: Optional[dict] = None
    witness: Optional[str] = None
    details: dict = field(default_factory=dict)

    def __bool__(self):
        return self.verdict

    def to_dict(self):
        doc = {
            "lemma_id": self.lemma_id,
            "parameters": dict(self.parameters),
            "weights_checked": self.weights_checked,
            "verdict": "pass" if self.verdict else "fail",
        }
        if self.first_failure is not None:
            doc["first_failure"] = self.first_failure
        if self.witness is not None:
            doc["witness"] = self.witness
        if self.details:
            doc["details"] = self.details
        return doc
