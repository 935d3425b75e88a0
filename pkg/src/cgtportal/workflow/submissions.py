"""The moderation state machine with its append-only audit history.

A submission moves Submitted -> InReview -> {ChangesRequested, Approved,
Rejected}; ChangesRequested returns to Submitted on resubmission and
Approved reaches Published through a publish that applies the payload to the
content store. Rejected and Published are terminal. Every step appends an
immutable history entry; replaying the history reconstructs the state.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace

from cgtportal.errors import (
    ForbiddenRoleError,
    IllegalTransitionError,
    ValidationFailedError,
)
from cgtportal.content.fielded import apply_fragment, import_page, parse_fragment
from cgtportal.content.index import PageIndex, validate_page
from cgtportal.content.model import Corpus, LogicalPage

STATES = ("Submitted", "InReview", "ChangesRequested", "Approved", "Rejected", "Published")

# (state, action) -> next state
_MACHINE: dict[tuple[str, str], str] = {
    ("Submitted", "start"): "InReview",
    ("InReview", "request-changes"): "ChangesRequested",
    ("InReview", "approve"): "Approved",
    ("InReview", "reject"): "Rejected",
    ("ChangesRequested", "resubmit"): "Submitted",
    ("Approved", "publish"): "Published",
}

REVIEW_ACTIONS = ("start", "request-changes", "approve", "reject")
ACTIONS = ("submit", *REVIEW_ACTIONS, "resubmit", "publish")

_MODERATOR_ROLES = ("moderator", "admin")

# Attribute paths a submission may target on an existing page.
TARGET_ATTRIBUTES = (
    "title", "definition", "figures", "constructions", "properties", "related",
    "more_to_explore", "historical_notes", "remarks", "prereq_boxes",
    "color", "prereq_courses", "computed",
)


@dataclass(frozen=True)
class HistoryEntry:
    actor: str
    role: str
    action: str
    timestamp: str
    note: str = ""


@dataclass(frozen=True)
class SubmissionTarget:
    """Either an existing page (id plus optional attribute path) or a new-page proposal."""

    page_id: str | None = None  # None means a new-page proposal
    attribute: str | None = None

    @property
    def new_page(self) -> bool:
        return self.page_id is None


@dataclass(frozen=True)
class Submission:
    id: str
    author: str
    target: SubmissionTarget
    payload: str
    state: str = "Submitted"
    history: tuple[HistoryEntry, ...] = ()

    def with_event(self, entry: HistoryEntry, state: str | None = None) -> "Submission":
        return replace(self, state=state or self.state, history=self.history + (entry,))


def transition(
    sub: Submission, action: str, actor: str, role: str, now: str, note: str = ""
) -> Submission:
    """Apply one legal, role-permitted action; pure, the input is untouched."""
    next_state = _MACHINE.get((sub.state, action))
    if next_state is None:
        raise IllegalTransitionError(f"cannot {action} a submission in state {sub.state}")
    if action in REVIEW_ACTIONS or action == "publish":
        if role not in _MODERATOR_ROLES:
            raise ForbiddenRoleError(f"{action} requires a moderator, got role {role!r}")
    if action == "resubmit" and actor != sub.author:
        raise ForbiddenRoleError("only the author may resubmit")
    entry = HistoryEntry(actor=actor, role=role, action=action, timestamp=now, note=note)
    return sub.with_event(entry, state=next_state)


def resubmit(sub: Submission, actor: str, role: str, payload: str, now: str) -> Submission:
    """Author resubmission after ChangesRequested: new payload, same audit chain."""
    moved = transition(sub, "resubmit", actor, role, now, note="payload replaced")
    return replace(moved, payload=payload)


def replay_history(sub: Submission) -> str:
    """State reached by replaying the recorded actions from Submitted."""
    state = "Submitted"
    for entry in sub.history:
        if entry.action in ("submit", "publish-failed"):
            continue
        state = _MACHINE[(state, entry.action)]
    return state


def build_published_page(
    sub: Submission, index: PageIndex, corpus: Corpus
) -> LogicalPage:
    """Resolve the payload into the page that publishing would install.

    New-page proposals carry a complete fielded page (the proposal's id must
    be unused); attribute submissions parse as fragments applied to the
    target page. The result must validate cleanly, including against its own
    id for related links, or :class:`ValidationFailedError` carries the
    findings and nothing is installed.
    """
    if sub.target.new_page:
        page = import_page(sub.payload)
        if page.id in index:
            raise ValidationFailedError(f"page id {page.id} already exists", [])
        page = replace(page, status="Published")
    else:
        current = index.get(sub.target.page_id)
        fragment = parse_fragment(sub.payload)
        if sub.target.attribute is not None:
            touched = {key for key, _ in fragment.scalars} | {key for key, _ in fragment.appends}
            if touched != {sub.target.attribute}:
                raise ValidationFailedError(
                    f"submission targets attribute {sub.target.attribute!r} but payload touches {sorted(touched)}",
                    [],
                )
        page = apply_fragment(current, fragment)
    probe = index.snapshot()
    probe.put(page)
    findings = validate_page(page, corpus, probe)
    if findings:
        raise ValidationFailedError(
            "; ".join(str(f) for f in findings), findings
        )
    return page


# --- JSON document mapping (store persistence) --------------------------------


def submission_to_json(sub: Submission) -> str:
    doc = {
        "id": sub.id,
        "author": sub.author,
        "target": {"page_id": sub.target.page_id, "attribute": sub.target.attribute},
        "payload": sub.payload,
        "state": sub.state,
        "history": [
            {
                "actor": e.actor,
                "role": e.role,
                "action": e.action,
                "timestamp": e.timestamp,
                "note": e.note,
            }
            for e in sub.history
        ],
    }
    return json.dumps(doc, indent=1, sort_keys=True)


def submission_from_json(text: str) -> Submission:
    doc = json.loads(text)
    return Submission(
        id=doc["id"],
        author=doc["author"],
        target=SubmissionTarget(
            page_id=doc["target"]["page_id"], attribute=doc["target"]["attribute"]
        ),
        payload=doc["payload"],
        state=doc["state"],
        history=tuple(
            HistoryEntry(
                actor=e["actor"],
                role=e["role"],
                action=e["action"],
                timestamp=e["timestamp"],
                note=e["note"],
            )
            for e in doc["history"]
        ),
    )
