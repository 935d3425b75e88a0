"""Grade-band grouping and exercise-mix planning.

Students are segmented by the term grade T over course-relevant subjects:
group 1 for A/B, group 2 for C/D, group 3 for E/F. The exercise mix for a
class is derived from the group percentages through a propensity matrix
(how much of each problem type suits each group); the matrix ships as a
default and is plain configuration.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from cgtportal.errors import (
    InvalidGradeError,
    InvalidParameterError,
    InvalidPercentagesError,
    NoRelevantGradesError,
)

GRADES = ("A", "B", "C", "D", "E", "F")
GRADE_POINTS = {"A": 5, "B": 4, "C": 3, "D": 2, "E": 1, "F": 0}
_POINT_GRADES = {points: grade for grade, points in GRADE_POINTS.items()}

PROBLEM_TYPES = ("a", "b", "c", "d", "e")

# Rows: groups 1..3; columns: problem types a..e. Group 3 leans on directly
# solvable problems; group 1 carries the conjecture/contest load.
PROPENSITY: dict[int, tuple[Fraction, ...]] = {
    1: tuple(Fraction(x, 100) for x in (10, 25, 25, 20, 20)),
    2: tuple(Fraction(x, 100) for x in (30, 25, 25, 10, 10)),
    3: tuple(Fraction(x, 100) for x in (60, 15, 15, 5, 5)),
}


def assign_group(t: str) -> int:
    """Group for a term grade: A,B -> 1; C,D -> 2; E,F -> 3."""
    if t not in GRADES:
        raise InvalidGradeError(f"grade must be one of {GRADES}, got {t!r}")
    return {"A": 1, "B": 1, "C": 2, "D": 2, "E": 3, "F": 3}[t]


def derive_t(grades: Mapping[str, str], relevant_subjects: Iterable[str]) -> str:
    """Term grade over the relevant subjects: point mean, rounded half-up.

    Points run A=5 down to F=0; the mean maps back to the nearest grade with
    .5 rounding up (so an A/B split yields A).
    """
    relevant = list(relevant_subjects)
    points = []
    for subject in relevant:
        grade = grades.get(subject)
        if grade is None:
            continue
        if grade not in GRADES:
            raise InvalidGradeError(f"{subject}: grade must be one of {GRADES}, got {grade!r}")
        points.append(GRADE_POINTS[grade])
    if not points:
        raise NoRelevantGradesError("student has no grades in relevant subjects")
    mean = Fraction(sum(points), len(points))
    rounded = (mean + Fraction(1, 2)).__floor__()
    return _POINT_GRADES[min(5, max(0, rounded))]


@dataclass(frozen=True)
class ExercisePlan:
    """Allocation of a problem-set total across the five problem types."""

    total: int
    counts: tuple[tuple[str, int], ...]

    def __post_init__(self):
        if sum(c for _, c in self.counts) != self.total:
            raise InvalidParameterError("exercise plan counts must sum to the total")

    def count(self, problem_type: str) -> int:
        return dict(self.counts)[problem_type]

    def render(self) -> str:
        lines = [f"{'type':<6} {'count':>5}"]
        for t, c in self.counts:
            lines.append(f"{t:<6} {c:>5}")
        lines.append(f"{'total':<6} {self.total:>5}")
        return "\n".join(lines)


def plan_exercises(group_percentages: Sequence, total: int) -> ExercisePlan:
    """Allocate ``total`` exercises given the (g1, g2, g3) student shares.

    Raw shares mix the propensity rows by group percentage; integer counts
    come from largest-remainder rounding (ties: larger remainder, then the
    type still at a smaller floor, then type order). When total >= 5 every
    type must appear, so zero counts are repaired by taking from the largest
    count.
    """
    if len(group_percentages) != 3:
        raise InvalidPercentagesError("need exactly three group percentages")
    try:
        pcts = [Fraction(p) for p in group_percentages]
    except (ValueError, TypeError) as exc:
        raise InvalidPercentagesError(f"percentages must be exact rationals: {exc}") from exc
    if any(p < 0 for p in pcts):
        raise InvalidPercentagesError("percentages must be nonnegative")
    if sum(pcts) != 1:
        raise InvalidPercentagesError(f"percentages must sum to 1, got {sum(pcts)}")
    if total < 1:
        raise InvalidParameterError(f"total must be >= 1, got {total}")

    raw = [
        sum(pcts[g] * PROPENSITY[g + 1][t] for g in range(3))
        for t in range(len(PROBLEM_TYPES))
    ]
    quotas = [total * share for share in raw]
    counts = [int(q.__floor__()) for q in quotas]
    remainders = [q - c for q, c in zip(quotas, counts)]
    leftover = total - sum(counts)
    order = sorted(
        range(len(PROBLEM_TYPES)),
        key=lambda t: (-remainders[t], counts[t], t),
    )
    for t in order[:leftover]:
        counts[t] += 1

    if total >= 5:
        while any(c == 0 for c in counts):
            zero = counts.index(0)
            donor = max(range(len(counts)), key=lambda t: (counts[t], -t))
            counts[donor] -= 1
            counts[zero] += 1

    return ExercisePlan(total=total, counts=tuple(zip(PROBLEM_TYPES, counts)))
