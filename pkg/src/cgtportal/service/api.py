"""HTTP API over the portal service.

All request and response bodies are JSON (UTF-8); the exact schemas are
documented in docs/api.md. Values that may exceed 53-bit float precision
(Wiener indexes, sequence terms) travel as decimal strings. Every error body
carries a machine-readable ``error`` reason tag.

Status codes: 200/201 success, 400 invalid input, 403 role forbidden (or
missing/invalid token), 404 unknown id, 409 illegal state transition.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from fastapi import Depends, FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from cgtportal.errors import ForbiddenRoleError, InvalidParameterError, PortalError
from cgtportal.content import LogicalPage, export_page
from cgtportal.graphs import FamilySpec, generate, to_edge_list_text
from cgtportal.indexes import verify_a136328, wiener
from cgtportal.service.portal import PortalService, Principal, require_role
from cgtportal.workflow import SubmissionTarget
from cgtportal.workflow.submissions import Submission

_STATUS_BY_REASON = {
    "invalid-parameter": 400,
    "parse-error": 400,
    "validation-failed": 400,
    "invalid-grade": 400,
    "invalid-percentages": 400,
    "no-relevant-grades": 400,
    "size-limit-exceeded": 400,
    "disconnected-graph": 400,
    "forbidden-role": 403,
    "unknown-page": 404,
    "unknown-term": 404,
    "unknown-student": 404,
    "unknown-submission": 404,
    "illegal-transition": 409,
}


def page_to_dict(page: LogicalPage) -> dict:
    return {
        "id": page.id,
        "title": page.title,
        "kind": page.kind,
        "definition": page.definition,
        "figures": list(page.figures),
        "constructions": [
            {
                "text": c.text,
                "binding": {"family": c.binding.family, "params": list(c.binding.params)}
                if c.binding
                else None,
            }
            for c in page.constructions
        ],
        "properties": [
            {"text": p.text, "color": p.color.value if p.color else None}
            for p in page.properties
        ],
        "related": list(page.related),
        "more_to_explore": [{"text": r.text, "url": r.url} for r in page.more_to_explore],
        "historical_notes": page.historical_notes,
        "remarks": [{"author": r.author, "text": r.text} for r in page.remarks],
        "prereq_boxes": [
            {"terms": list(b.terms), "declared_type": b.declared_type}
            for b in page.prereq_boxes
        ],
        "color": page.color.value if page.color else None,
        "prereq_courses": list(page.prereq_courses),
        "computed": [[k, v] for k, v in page.computed],
        "status": page.status,
        "fielded": export_page(page),
    }


def submission_to_dict(sub: Submission) -> dict:
    return {
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


def _parse_params(raw: str | None) -> tuple[int, ...]:
    if raw is None or raw == "":
        return ()
    try:
        return tuple(int(tok) for tok in raw.split(","))
    except ValueError:
        raise InvalidParameterError(f"params must be comma-separated integers, got {raw!r}")


def _fraction_str(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def create_app(
    service: PortalService,
    authenticate: Callable[[str | None], Principal | None] | None = None,
    ui_dir: str | None = None,
) -> FastAPI:
    """Build the application; ``authenticate`` may plug a custom token check.

    ``ui_dir`` optionally mounts a built browser UI at /ui; the API itself
    never depends on it.
    """
    app = FastAPI(title="cgtportal", docs_url=None, redoc_url=None, openapi_url=None)
    auth = authenticate or service.authenticate
    if ui_dir is not None:
        from starlette.staticfiles import StaticFiles

        app.mount("/ui", StaticFiles(directory=ui_dir, html=True), name="ui")

    def principal_of(request: Request) -> Principal:
        header = request.headers.get("authorization", "")
        token = header[7:] if header.lower().startswith("bearer ") else header or None
        principal = auth(token)
        if principal is None:
            raise ForbiddenRoleError("missing or invalid token")
        return principal

    @app.exception_handler(PortalError)
    async def portal_error_handler(request: Request, exc: PortalError):
        status = _STATUS_BY_REASON.get(exc.reason, 400)
        return JSONResponse(
            status_code=status, content={"error": exc.reason, "detail": exc.message}
        )

    @app.exception_handler(RequestValidationError)
    async def body_error_handler(request: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=400, content={"error": "invalid-parameter", "detail": str(exc)}
        )

    # -- health and pages ---------------------------------------------------

    @app.get("/health")
    def health():
        return {"status": "ok"}

    @app.get("/whoami")
    def whoami(principal: Principal = Depends(principal_of)):
        return {"id": principal.id, "role": principal.role, "courses": list(principal.courses)}

    @app.get("/pages")
    def list_pages(principal: Principal = Depends(principal_of)):
        pages = service.visible_pages(principal)
        return {
            "pages": [
                {"id": p.id, "title": p.title, "kind": p.kind, "status": p.status}
                for p in pages
            ]
        }

    @app.get("/pages/{page_id}")
    def get_page(page_id: str, principal: Principal = Depends(principal_of)):
        return page_to_dict(service.get_page(page_id, principal))

    @app.get("/search")
    def search_pages(q: str = "", principal: Principal = Depends(principal_of)):
        return {"query": q, "results": [{"id": pid, "score": score} for pid, score in service.search_pages(q)]}

    @app.get("/terms/{term}/backlinks")
    def term_backlinks(term: str, principal: Principal = Depends(principal_of)):
        return {"term": term, "pages": service.term_backlinks(term)}

    @app.get("/pages/{page_id}/relevance")
    def page_relevance(page_id: str, principal: Principal = Depends(principal_of)):
        service.get_page(page_id, principal)
        value = service.page_relevance(page_id)
        return {
            "id": page_id,
            "relevance": _fraction_str(value),
            "relevance_float": float(value),
        }

    # -- submissions ----------------------------------------------------------

    @app.post("/submissions", status_code=201)
    def post_submission(body: dict, principal: Principal = Depends(principal_of)):
        require_role(principal, "student")
        raw_target = body.get("target")
        if raw_target is None:
            target = SubmissionTarget()
        else:
            target = SubmissionTarget(
                page_id=raw_target.get("page_id"), attribute=raw_target.get("attribute")
            )
        payload = body.get("payload")
        if not isinstance(payload, str) or not payload.strip():
            raise InvalidParameterError("submission payload must be a non-empty string")
        return submission_to_dict(service.submit(principal, target, payload))

    @app.get("/submissions")
    def list_submissions(state: str | None = None, principal: Principal = Depends(principal_of)):
        require_role(principal, "moderator")
        return {"submissions": [submission_to_dict(s) for s in service.list_submissions(state)]}

    @app.get("/submissions/{sub_id}")
    def get_submission(sub_id: str, principal: Principal = Depends(principal_of)):
        sub = service.get_submission(sub_id)
        if principal.role == "student" and sub.author != principal.id:
            raise ForbiddenRoleError("students see only their own submissions")
        return submission_to_dict(sub)

    @app.post("/submissions/{sub_id}/review")
    def review_submission(sub_id: str, body: dict, principal: Principal = Depends(principal_of)):
        require_role(principal, "moderator")
        action = body.get("action", "")
        note = body.get("note", "")
        return submission_to_dict(service.review(principal, sub_id, action, note))

    @app.post("/submissions/{sub_id}/resubmit")
    def resubmit_submission(sub_id: str, body: dict, principal: Principal = Depends(principal_of)):
        require_role(principal, "student")
        payload = body.get("payload")
        if not isinstance(payload, str) or not payload.strip():
            raise InvalidParameterError("resubmission payload must be a non-empty string")
        return submission_to_dict(service.resubmit(principal, sub_id, payload))

    @app.post("/submissions/{sub_id}/publish")
    def publish_submission(sub_id: str, principal: Principal = Depends(principal_of)):
        require_role(principal, "moderator")
        moved = service.publish(principal, sub_id)
        return submission_to_dict(moved)

    # -- students and planning ------------------------------------------------

    @app.get("/students/{student_id}/log")
    def student_log(student_id: str, principal: Principal = Depends(principal_of)):
        if principal.role == "student" and principal.id != student_id:
            raise ForbiddenRoleError("students see only their own log")
        record = service.get_student(student_id)
        outcomes: dict[str, int] = {}
        for entry in record.contribution_log:
            outcomes[entry.outcome] = outcomes.get(entry.outcome, 0) + 1
        return {
            "id": record.id,
            "name": record.name,
            "t": record.t,
            "group": record.group,
            "group_pending_confirmation": record.group_pending_confirmation,
            "entries": [
                {
                    "submission_id": e.submission_id,
                    "outcome": e.outcome,
                    "page_id": e.page_id,
                    "timestamp": e.timestamp,
                }
                for e in record.contribution_log
            ],
            "counts": outcomes,
        }

    @app.post("/roster")
    def post_roster(body: dict, principal: Principal = Depends(principal_of)):
        require_role(principal, "admin")
        text = body.get("text")
        if not isinstance(text, str):
            raise InvalidParameterError("roster body must carry a 'text' field")
        return {"loaded": service.load_roster(text)}

    @app.post("/plan/exercises")
    def post_plan(body: dict, principal: Principal = Depends(principal_of)):
        require_role(principal, "instructor")
        raw = body.get("percentages")
        if not isinstance(raw, (list, tuple)) or len(raw) != 3:
            raise InvalidParameterError("percentages must be a list of three rationals")
        total = body.get("total")
        if not isinstance(total, int):
            raise InvalidParameterError("total must be an integer")
        plan = service.plan([Fraction(str(p)) for p in raw], total)
        return {
            "total": plan.total,
            "counts": {t: c for t, c in plan.counts},
            "rendered": plan.render(),
        }

    # -- compute (pure; identical query -> identical body) ---------------------

    @app.get("/compute/generate")
    def compute_generate(
        family: str, params: str | None = None, principal: Principal = Depends(principal_of)
    ):
        graph = generate(FamilySpec(family, _parse_params(params)))
        return {
            "family": family,
            "params": list(_parse_params(params)),
            "n": graph.n,
            "m": graph.m,
            "edges": [[u, v] for u, v in graph.sorted_edges()],
            "edge_list": to_edge_list_text(graph),
        }

    @app.get("/compute/wiener")
    def compute_wiener(
        family: str, params: str | None = None, principal: Principal = Depends(principal_of)
    ):
        graph = generate(FamilySpec(family, _parse_params(params)))
        value = wiener(graph)
        return {
            "family": family,
            "params": list(_parse_params(params)),
            "wiener": str(value),
        }

    @app.get("/compute/verify-a136328")
    def compute_verify(
        max_n: int = 17, brute_max: int = 6, principal: Principal = Depends(principal_of)
    ):
        report = verify_a136328(max_n, brute_max=brute_max)
        return {
            "max_n": report.max_n,
            "all_ok": report.all_ok,
            "elapsed_seconds": report.elapsed_seconds,
            "checks": [
                {
                    "n": c.n,
                    "reference": str(c.reference),
                    "deutsch": str(c.deutsch) if c.deutsch is not None else None,
                    "mathar": str(c.mathar) if c.mathar is not None else None,
                    "brute_force": str(c.brute_force) if c.brute_force is not None else None,
                    "skipped": list(c.skipped),
                    "ok": c.ok,
                }
                for c in report.checks
            ],
            "rendered": report.render(),
        }

    return app
