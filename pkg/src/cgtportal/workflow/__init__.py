"""Student grouping, exercise planning, and the moderated contribution workflow."""

from cgtportal.workflow.grouping import (
    ExercisePlan,
    GRADES,
    PROBLEM_TYPES,
    PROPENSITY,
    assign_group,
    derive_t,
    plan_exercises,
)
from cgtportal.workflow.students import (
    LogEntry,
    StudentRecord,
    make_student,
    parse_roster,
    roster_to_text,
    with_grades,
)
from cgtportal.workflow.submissions import (
    ACTIONS,
    STATES,
    HistoryEntry,
    Submission,
    SubmissionTarget,
    build_published_page,
    replay_history,
    transition,
)

__all__ = [
    "ACTIONS",
    "ExercisePlan",
    "GRADES",
    "HistoryEntry",
    "LogEntry",
    "PROBLEM_TYPES",
    "PROPENSITY",
    "STATES",
    "StudentRecord",
    "Submission",
    "SubmissionTarget",
    "assign_group",
    "build_published_page",
    "derive_t",
    "make_student",
    "parse_roster",
    "plan_exercises",
    "replay_history",
    "roster_to_text",
    "transition",
    "with_grades",
]
