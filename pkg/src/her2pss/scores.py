"""The 4-class ordinal score scale plus the non-diagnostic voting sentinel."""

from __future__ import annotations

from enum import Enum, IntEnum

from .errors import DomainError


class Her2Score(IntEnum):
    """Ordinal score category: 0 < 1+ < 2+ < 3+."""

    SCORE_0 = 0
    SCORE_1 = 1
    SCORE_2 = 2
    SCORE_3 = 3

    @property
    def label(self) -> str:
        return _LABELS[self.value]

    @classmethod
    def from_label(cls, text: str) -> "Her2Score":
        t = str(text).strip()
        if t in _LABEL_TO_SCORE:
            return _LABEL_TO_SCORE[t]
        raise DomainError(f"not a valid score label: {text!r}")


_LABELS = ("0", "1+", "2+", "3+")
_LABEL_TO_SCORE = {}
for _s in Her2Score:
    _LABEL_TO_SCORE[str(_s.value)] = _s
    _LABEL_TO_SCORE[_s.label] = _s


class NonDiagnostic(Enum):
    """Sentinel for cores a pathologist declined to score.

    Valid only inside the voting protocol; raises if it reaches
    aggregation or metrics code.
    """

    ND = "ND"


ND = NonDiagnostic.ND

# A pathologist's vote is either a score or the non-diagnostic sentinel.
Vote = Her2Score | NonDiagnostic


def parse_vote(text: str) -> Vote:
    t = str(text).strip()
    if t.upper() == "ND":
        return ND
    return Her2Score.from_label(t)


def render_vote(vote: Vote) -> str:
    """Votes-CSV form: 0/1/2/3 or ND (labels like ``2+`` are report-side only)."""
    if isinstance(vote, NonDiagnostic):
        return "ND"
    return str(int(vote))
