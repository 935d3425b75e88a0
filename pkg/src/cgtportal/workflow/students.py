"""Student roster records and the append-only contribution log."""

from __future__ import annotations

from dataclasses import dataclass, replace

from cgtportal.errors import ParseError
from cgtportal.workflow.grouping import GRADES, assign_group, derive_t


@dataclass(frozen=True)
class LogEntry:
    """One contribution outcome; entries are only ever appended."""

    submission_id: str
    outcome: str  # "published" | "rejected"
    page_id: str | None
    timestamp: str


@dataclass(frozen=True)
class StudentRecord:
    id: str
    name: str
    grades: tuple[tuple[str, str], ...]  # (subject, grade)
    relevant_subjects: tuple[str, ...]
    t: str
    group: int
    contribution_log: tuple[LogEntry, ...] = ()
    # set when a grade change moved the group; an instructor confirms the move
    group_pending_confirmation: bool = False


def make_student(
    student_id: str,
    name: str,
    grades: dict[str, str],
    relevant_subjects=None,
) -> StudentRecord:
    """Build a record, deriving T and the group from the relevant subjects.

    With no explicit relevant set, every graded subject counts as relevant.
    """
    relevant = tuple(relevant_subjects) if relevant_subjects is not None else tuple(sorted(grades))
    t = derive_t(grades, relevant)
    return StudentRecord(
        id=student_id,
        name=name,
        grades=tuple(sorted(grades.items())),
        relevant_subjects=relevant,
        t=t,
        group=assign_group(t),
    )


def with_grades(record: StudentRecord, grades: dict[str, str]) -> StudentRecord:
    """Record with updated grades; a group change is flagged for confirmation."""
    t = derive_t(grades, record.relevant_subjects)
    group = assign_group(t)
    return replace(
        record,
        grades=tuple(sorted(grades.items())),
        t=t,
        group=group,
        group_pending_confirmation=group != record.group,
    )


def credited(record: StudentRecord, entry: LogEntry) -> StudentRecord:
    return replace(record, contribution_log=record.contribution_log + (entry,))


def parse_roster(text: str, relevant_subjects=None) -> list[StudentRecord]:
    """Roster file: one student per line, ``id<TAB>name<TAB>subject=grade,...``."""
    students = []
    seen: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\n")
        if not line.strip() or line.startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) != 3:
            raise ParseError("roster line needs id, name, and grades columns", lineno)
        student_id, name, grades_col = cols
        if student_id in seen:
            raise ParseError(f"duplicate student id {student_id!r}", lineno)
        seen.add(student_id)
        grades: dict[str, str] = {}
        for part in grades_col.split(","):
            part = part.strip()
            if not part:
                continue
            if "=" not in part:
                raise ParseError(f"grade entry must be subject=grade, got {part!r}", lineno)
            subject, _, grade = part.partition("=")
            if grade not in GRADES:
                raise ParseError(f"unknown grade {grade!r} for {subject!r}", lineno)
            grades[subject.strip()] = grade
        if not grades:
            raise ParseError(f"student {student_id!r} has no grades", lineno)
        try:
            students.append(make_student(student_id, name, grades, relevant_subjects))
        except Exception as exc:
            raise ParseError(str(exc), lineno) from exc
    return students


def roster_to_text(students) -> str:
    lines = []
    for s in students:
        grades = ",".join(f"{subject}={grade}" for subject, grade in s.grades)
        lines.append(f"{s.id}\t{s.name}\t{grades}")
    return "\n".join(lines) + "\n"
