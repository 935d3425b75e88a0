"""The stateful portal service: loads the store, serializes mutations.

Reads operate on immutable objects and are safe concurrently; every mutation
takes the single-writer lock, persists through the document store (the
publish path through the journal), and only then swaps the in-memory state.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass, replace
from datetime import datetime, timezone
from fractions import Fraction
from pathlib import Path
from typing import Callable, Sequence

from cgtportal.errors import (
    ForbiddenRoleError,
    IllegalTransitionError,
    InvalidParameterError,
    ParseError,
    UnknownPageError,
    UnknownStudentError,
    UnknownSubmissionError,
    ValidationFailedError,
)
from cgtportal.content import (
    Corpus,
    LogicalPage,
    PageIndex,
    SyllabusMap,
    backward_links,
    build_seed_corpus,
    build_seed_pages,
    build_seed_syllabus,
    corpus_to_text,
    export_page,
    import_page,
    parse_corpus,
    parse_syllabus,
    relevance,
    search,
    syllabus_to_text,
    validate_page,
)
from cgtportal.service.store import DocumentStore
from cgtportal.workflow import (
    ExercisePlan,
    HistoryEntry,
    StudentRecord,
    Submission,
    SubmissionTarget,
    build_published_page,
    parse_roster,
    plan_exercises,
    transition,
)
from cgtportal.workflow.students import LogEntry, credited, with_grades
from cgtportal.workflow.submissions import (
    REVIEW_ACTIONS,
    resubmit as resubmit_submission,
    submission_from_json,
    submission_to_json,
)

ROLES = ("student", "instructor", "moderator", "admin")
_ROLE_RANK = {role: i for i, role in enumerate(ROLES)}

DEFAULT_COURSE = "CGT"

# Development tokens installed by `seed` under AUTH_MODE=static.
DEV_TOKENS = {
    "dev-admin": {"id": "admin", "role": "admin", "courses": [DEFAULT_COURSE]},
    "dev-instructor": {"id": "i1", "role": "instructor", "courses": [DEFAULT_COURSE]},
    "dev-moderator": {"id": "m1", "role": "moderator", "courses": [DEFAULT_COURSE]},
    "dev-student-s1": {"id": "s1", "role": "student", "courses": [DEFAULT_COURSE]},
    "dev-student-s2": {"id": "s2", "role": "student", "courses": [DEFAULT_COURSE]},
}

SEED_ROSTER = (
    "s1\tAsha Iyer\tCGT=A,Discrete Mathematics=B\n"
    "s2\tBinh Tran\tCGT=C,Discrete Mathematics=D\n"
    "s3\tChandra Rao\tCGT=E,Discrete Mathematics=F\n"
    "s4\tDeepa Nair\tCGT=B,Discrete Mathematics=B\n"
)


@dataclass(frozen=True)
class Principal:
    """Resolved identity of an authenticated request."""

    id: str
    role: str
    courses: tuple[str, ...] = ()

    def at_least(self, role: str) -> bool:
        return _ROLE_RANK[self.role] >= _ROLE_RANK[role]


def require_role(principal: Principal, minimum: str) -> None:
    if not principal.at_least(minimum):
        raise ForbiddenRoleError(f"requires role {minimum}+, got {principal.role}")


def _student_to_json(s: StudentRecord) -> str:
    return json.dumps(
        {
            "id": s.id,
            "name": s.name,
            "grades": dict(s.grades),
            "relevant_subjects": list(s.relevant_subjects),
            "t": s.t,
            "group": s.group,
            "group_pending_confirmation": s.group_pending_confirmation,
            "contribution_log": [
                {
                    "submission_id": e.submission_id,
                    "outcome": e.outcome,
                    "page_id": e.page_id,
                    "timestamp": e.timestamp,
                }
                for e in s.contribution_log
            ],
        },
        indent=1,
        sort_keys=True,
    )


def _student_from_json(text: str) -> StudentRecord:
    doc = json.loads(text)
    return StudentRecord(
        id=doc["id"],
        name=doc["name"],
        grades=tuple(sorted(doc["grades"].items())),
        relevant_subjects=tuple(doc["relevant_subjects"]),
        t=doc["t"],
        group=doc["group"],
        group_pending_confirmation=doc["group_pending_confirmation"],
        contribution_log=tuple(
            LogEntry(
                submission_id=e["submission_id"],
                outcome=e["outcome"],
                page_id=e["page_id"],
                timestamp=e["timestamp"],
            )
            for e in doc["contribution_log"]
        ),
    )


class PortalService:
    """Everything the HTTP API and CLI need, over one data directory."""

    def __init__(self, data_dir: str | Path, clock: Callable[[], str] | None = None):
        self.store = DocumentStore(data_dir)
        self._lock = threading.RLock()
        self._clock = clock or (lambda: datetime.now(timezone.utc).isoformat())
        self._load()

    # -- loading ----------------------------------------------------------

    def _load(self) -> None:
        corpus_text = self.store.read("corpus.tsv")
        self.corpus: Corpus = parse_corpus(corpus_text) if corpus_text else Corpus()
        syllabus_text = self.store.read("syllabus.tsv")
        self.syllabus: SyllabusMap = parse_syllabus(syllabus_text) if syllabus_text else SyllabusMap()
        self.index = PageIndex()
        for rel in self.store.list("pages"):
            self.index.put(import_page(self.store.read(rel)))
        self.students: dict[str, StudentRecord] = {}
        for rel in self.store.list("students"):
            record = _student_from_json(self.store.read(rel))
            self.students[record.id] = record
        self.submissions: dict[str, Submission] = {}
        for rel in self.store.list("submissions"):
            sub = submission_from_json(self.store.read(rel))
            self.submissions[sub.id] = sub
        tokens_text = self.store.read("auth/tokens.json")
        self._tokens: dict[str, dict] = json.loads(tokens_text) if tokens_text else {}

    # -- auth ---------------------------------------------------------------

    def authenticate(self, token: str | None) -> Principal | None:
        if not token:
            return None
        entry = self._tokens.get(token)
        if entry is None:
            return None
        return Principal(
            id=entry["id"], role=entry["role"], courses=tuple(entry.get("courses", ()))
        )

    def set_token(self, token: str, principal: Principal) -> None:
        with self._lock:
            self._tokens[token] = {
                "id": principal.id,
                "role": principal.role,
                "courses": list(principal.courses),
            }
            self.store.write("auth/tokens.json", json.dumps(self._tokens, indent=1, sort_keys=True))

    # -- seeding ------------------------------------------------------------

    def seed(self) -> None:
        """Install the seed corpus, pages, syllabus, dev tokens, and roster."""
        with self._lock:
            self.corpus = build_seed_corpus()
            self.store.write("corpus.tsv", corpus_to_text(self.corpus))
            self.syllabus = build_seed_syllabus()
            self.store.write("syllabus.tsv", syllabus_to_text(self.syllabus))
            for page in build_seed_pages():
                self.index.put(page)
            for page in self.index:
                findings = validate_page(page, self.corpus, self.index)
                if findings:
                    raise ValidationFailedError(f"seed page {page.id} invalid", findings)
                self.store.write(f"pages/{page.id}.page", export_page(page))
            self._tokens = dict(DEV_TOKENS)
            self.store.write("auth/tokens.json", json.dumps(self._tokens, indent=1, sort_keys=True))
            self.load_roster(SEED_ROSTER)

    # -- page queries ---------------------------------------------------------

    def visible_pages(self, principal: Principal) -> list[LogicalPage]:
        pages = list(self.index)
        if principal.at_least("instructor"):
            return pages
        return [p for p in pages if p.status == "Published"]

    def get_page(self, page_id: str, principal: Principal) -> LogicalPage:
        page = self.index.get(page_id)
        if page.status != "Published" and not principal.at_least("instructor"):
            raise UnknownPageError(f"no page {page_id!r}")
        return page

    def search_pages(self, query: str) -> list[tuple[str, int]]:
        return search(query, self.index)

    def term_backlinks(self, term: str) -> list[str]:
        return backward_links(term, self.index, self.corpus)

    def page_relevance(self, page_id: str) -> Fraction:
        return relevance(self.index.get(page_id), self.syllabus, self.corpus)

    def put_page(self, page: LogicalPage) -> None:
        """Direct page install (seed/import path); must validate cleanly."""
        with self._lock:
            probe = self.index.snapshot()
            probe.put(page)
            findings = validate_page(page, self.corpus, probe)
            if findings:
                raise ValidationFailedError(
                    "; ".join(str(f) for f in findings), findings
                )
            self.store.write(f"pages/{page.id}.page", export_page(page))
            self.index.put(page)

    # -- submissions ------------------------------------------------------

    def _next_submission_id(self) -> str:
        numbers = [int(sid.split("-")[1]) for sid in self.submissions if sid.startswith("SUB-")]
        return f"SUB-{(max(numbers) + 1 if numbers else 1):06d}"

    def _persist_submission(self, sub: Submission) -> None:
        self.store.write(f"submissions/{sub.id}.json", submission_to_json(sub))
        self.submissions[sub.id] = sub

    def get_submission(self, sub_id: str) -> Submission:
        sub = self.submissions.get(sub_id)
        if sub is None:
            raise UnknownSubmissionError(f"no submission {sub_id!r}")
        return sub

    def list_submissions(self, state: str | None = None) -> list[Submission]:
        subs = sorted(self.submissions.values(), key=lambda s: s.id)
        if state is not None:
            subs = [s for s in subs if s.state == state]
        return subs

    def submit(
        self, principal: Principal, target: SubmissionTarget, payload: str
    ) -> Submission:
        """Create a submission in state Submitted; any authenticated role may contribute."""
        with self._lock:
            if target.page_id is not None and target.page_id not in self.index:
                raise UnknownPageError(f"submission targets unknown page {target.page_id!r}")
            if target.attribute is not None and target.page_id is None:
                raise InvalidParameterError("attribute targets require an existing page id")
            sub = Submission(
                id=self._next_submission_id(),
                author=principal.id,
                target=target,
                payload=payload,
            )
            sub = sub.with_event(
                HistoryEntry(
                    actor=principal.id, role=principal.role, action="submit",
                    timestamp=self._clock(), note="",
                )
            )
            self._persist_submission(sub)
            return sub

    def resubmit(self, principal: Principal, sub_id: str, payload: str) -> Submission:
        with self._lock:
            sub = self.get_submission(sub_id)
            sub = resubmit_submission(sub, principal.id, principal.role, payload, self._clock())
            self._persist_submission(sub)
            return sub

    def review(
        self, principal: Principal, sub_id: str, action: str, note: str = ""
    ) -> Submission:
        """Moderator review action: start, request-changes, approve, or reject."""
        if action not in REVIEW_ACTIONS:
            raise InvalidParameterError(
                f"review action must be one of {REVIEW_ACTIONS}, got {action!r}"
            )
        with self._lock:
            sub = self.get_submission(sub_id)
            moved = transition(sub, action, principal.id, principal.role, self._clock(), note)
            if action == "reject" and sub.author in self.students:
                entry = LogEntry(
                    submission_id=sub.id, outcome="rejected", page_id=None,
                    timestamp=self._clock(),
                )
                student = credited(self.students[sub.author], entry)
                self.store.transaction(
                    [
                        (f"submissions/{moved.id}.json", submission_to_json(moved)),
                        (f"students/{student.id}.json", _student_to_json(student)),
                    ]
                )
                self.submissions[moved.id] = moved
                self.students[student.id] = student
            else:
                self._persist_submission(moved)
            return moved

    def publish(self, principal: Principal, sub_id: str) -> Submission:
        """Apply an Approved submission to the content store, atomically.

        On validation failure the submission stays Approved, the failure is
        recorded in its history, and the page store is untouched.
        """
        with self._lock:
            sub = self.get_submission(sub_id)
            if sub.state != "Approved":
                raise IllegalTransitionError(
                    f"cannot publish a submission in state {sub.state}"
                )
            require_role(principal, "moderator")
            try:
                page = build_published_page(sub, self.index, self.corpus)
            except (ValidationFailedError, ParseError) as exc:
                failed = sub.with_event(
                    HistoryEntry(
                        actor=principal.id, role=principal.role, action="publish-failed",
                        timestamp=self._clock(), note=exc.message,
                    )
                )
                self._persist_submission(failed)
                raise
            moved = transition(sub, "publish", principal.id, principal.role, self._clock())
            writes = [
                (f"pages/{page.id}.page", export_page(page)),
                (f"submissions/{moved.id}.json", submission_to_json(moved)),
            ]
            student = None
            if sub.author in self.students:
                entry = LogEntry(
                    submission_id=sub.id, outcome="published", page_id=page.id,
                    timestamp=self._clock(),
                )
                student = credited(self.students[sub.author], entry)
                writes.append((f"students/{student.id}.json", _student_to_json(student)))
            self.store.transaction(writes)
            self.index.put(page)
            self.submissions[moved.id] = moved
            if student is not None:
                self.students[student.id] = student
            return moved

    # -- students -----------------------------------------------------------

    def get_student(self, student_id: str) -> StudentRecord:
        record = self.students.get(student_id)
        if record is None:
            raise UnknownStudentError(f"no student {student_id!r}")
        return record

    def load_roster(self, text: str, relevant_subjects: Sequence[str] | None = None) -> int:
        """Load or refresh the roster; contribution logs always survive."""
        with self._lock:
            count = 0
            for parsed in parse_roster(text, relevant_subjects):
                existing = self.students.get(parsed.id)
                if existing is None:
                    record = parsed
                else:
                    record = with_grades(existing, dict(parsed.grades))
                    record = replace(record, name=parsed.name)
                self.store.write(f"students/{record.id}.json", _student_to_json(record))
                self.students[record.id] = record
                count += 1
            return count

    def plan(self, percentages: Sequence, total: int) -> ExercisePlan:
        return plan_exercises(percentages, total)

    def group_percentages(self) -> tuple[Fraction, Fraction, Fraction]:
        """Current roster's group shares, for exercise planning."""
        if not self.students:
            raise UnknownStudentError("roster is empty")
        total = len(self.students)
        counts = {1: 0, 2: 0, 3: 0}
        for record in self.students.values():
            counts[record.group] += 1
        return tuple(Fraction(counts[g], total) for g in (1, 2, 3))  # type: ignore[return-value]
