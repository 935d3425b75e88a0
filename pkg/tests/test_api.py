"""HTTP API: role matrix, status codes, endpoint behavior, compute purity."""

import pytest
from fastapi.testclient import TestClient

from cgtportal.service.api import create_app
from cgtportal.service.portal import PortalService

TOKENS = {
    "none": None,
    "student": "dev-student-s1",
    "instructor": "dev-instructor",
    "moderator": "dev-moderator",
    "admin": "dev-admin",
}


@pytest.fixture(scope="module")
def client(tmp_path_factory):
    service = PortalService(tmp_path_factory.mktemp("store"))
    service.seed()
    return TestClient(create_app(service))


def _headers(role: str) -> dict:
    token = TOKENS[role]
    return {"Authorization": f"Bearer {token}"} if token else {}


def _fresh_submission(client, state: str = "Submitted") -> str:
    r = client.post(
        "/submissions",
        json={"target": {"page_id": "ACGT-000001", "attribute": None},
              "payload": "%PROP(in-course) matrix probe."},
        headers=_headers("student"),
    )
    sid = r.json()["id"]
    if state in ("InReview", "Approved"):
        client.post(f"/submissions/{sid}/review", json={"action": "start"}, headers=_headers("moderator"))
    if state == "Approved":
        client.post(f"/submissions/{sid}/review", json={"action": "approve"}, headers=_headers("moderator"))
    return sid


# Route matrix: (method, path factory, body factory, set of roles allowed).
# "success" for a permitted role means anything but 403.
_ALL = {"student", "instructor", "moderator", "admin"}
ROUTE_MATRIX = [
    ("GET", lambda c: "/health", None, {"none", *_ALL}),
    ("GET", lambda c: "/whoami", None, _ALL),
    ("GET", lambda c: "/pages", None, _ALL),
    ("GET", lambda c: "/pages/ACGT-000001", None, _ALL),
    ("GET", lambda c: "/search?q=graph", None, _ALL),
    ("GET", lambda c: "/terms/graphs/backlinks", None, _ALL),
    ("GET", lambda c: "/pages/ACGT-000001/relevance", None, _ALL),
    ("POST", lambda c: "/submissions",
     lambda: {"target": {"page_id": "ACGT-000001", "attribute": None}, "payload": "%HIST note"},
     _ALL),
    ("GET", lambda c: "/submissions", None, {"moderator", "admin"}),
    ("POST", lambda c: f"/submissions/{_fresh_submission(c)}/review",
     lambda: {"action": "start"}, {"moderator", "admin"}),
    ("POST", lambda c: f"/submissions/{_fresh_submission(c, 'Approved')}/publish",
     lambda: {}, {"moderator", "admin"}),
    ("GET", lambda c: "/students/s1/log", None, {"student", "instructor", "moderator", "admin"}),
    ("POST", lambda c: "/roster", lambda: {"text": "s8\tMatrix Kid\tCGT=B\n"}, {"admin"}),
    ("POST", lambda c: "/plan/exercises",
     lambda: {"percentages": ["1/2", "1/4", "1/4"], "total": 12},
     {"instructor", "moderator", "admin"}),
    ("GET", lambda c: "/compute/generate?family=wheel&params=5", None, _ALL),
    ("GET", lambda c: "/compute/wiener?family=cycle&params=3", None, _ALL),
    ("GET", lambda c: "/compute/verify-a136328?max_n=3", None, _ALL),
]


def test_role_matrix_every_route_every_role(client):
    for method, path_of, body_of, allowed in ROUTE_MATRIX:
        for role in ("none", "student", "instructor", "moderator", "admin"):
            path = path_of(client)
            kwargs = {"headers": _headers(role)}
            if body_of is not None:
                kwargs["json"] = body_of()
            response = client.request(method, path, **kwargs)
            if role in allowed:
                assert response.status_code != 403, (method, path, role, response.text)
            else:
                assert response.status_code == 403, (method, path, role, response.text)
                assert response.json()["error"] == "forbidden-role"


def test_health_requires_no_auth(client):
    assert client.get("/health").json() == {"status": "ok"}


def test_whoami_resolves_principal(client):
    r = client.get("/whoami", headers=_headers("moderator"))
    assert r.json()["role"] == "moderator"


def test_optional_ui_mount_serves_statics(tmp_path):
    (tmp_path / "site").mkdir()
    (tmp_path / "site" / "index.html").write_text("<html>ui shell</html>", encoding="utf-8")
    service = PortalService(tmp_path / "store")
    app = create_app(service, ui_dir=str(tmp_path / "site"))
    ui_client = TestClient(app)
    r = ui_client.get("/ui/")
    assert r.status_code == 200 and "ui shell" in r.text
    # API routes unaffected
    assert ui_client.get("/health").status_code == 200


def test_unknown_ids_give_404(client):
    h = _headers("student")
    assert client.get("/pages/ACGT-999988", headers=h).status_code == 404
    assert client.get("/terms/nothere/backlinks", headers=h).status_code == 404
    assert client.get("/students/sX/log", headers=_headers("instructor")).status_code == 404
    r = client.get("/submissions/SUB-999999", headers=_headers("moderator"))
    assert r.status_code == 404 and r.json()["error"] == "unknown-submission"


def test_illegal_transition_gives_409(client):
    sid = _fresh_submission(client)
    r = client.post(f"/submissions/{sid}/review", json={"action": "approve"},
                    headers=_headers("moderator"))
    assert r.status_code == 409
    assert r.json()["error"] == "illegal-transition"


def test_invalid_inputs_give_400(client):
    h = _headers("student")
    assert client.get("/compute/generate?family=wheel&params=2", headers=h).status_code == 400
    assert client.get("/compute/generate?family=nosuch&params=1", headers=h).status_code == 400
    assert client.get("/compute/generate?family=wheel&params=x", headers=h).status_code == 400
    assert client.get("/compute/verify-a136328?max_n=99", headers=h).status_code == 400
    r = client.post("/submissions", json={"payload": ""}, headers=h)
    assert r.status_code == 400
    r = client.post("/plan/exercises", json={"percentages": ["1", "1", "1"], "total": 5},
                    headers=_headers("instructor"))
    assert r.status_code == 400 and r.json()["error"] == "invalid-percentages"


def test_error_bodies_carry_reason_tags(client):
    r = client.get("/pages/ACGT-424242", headers=_headers("student"))
    body = r.json()
    assert set(body) == {"error", "detail"}
    assert body["error"] == "unknown-page"


def test_search_endpoint_matches_module(client):
    r = client.get("/search?q=Wiener", headers=_headers("student"))
    ids = [hit["id"] for hit in r.json()["results"]]
    assert ids[0] == "ACGT-000003"


def test_student_sees_only_own_submission(client):
    sid = _fresh_submission(client)
    r = client.get(f"/submissions/{sid}", headers=_headers("student"))
    assert r.status_code == 200
    # dev-student-s2 is a different author
    r = client.get(f"/submissions/{sid}", headers={"Authorization": "Bearer dev-student-s2"})
    assert r.status_code == 403


def test_compute_endpoints_are_pure_byte_for_byte(client):
    h = _headers("student")
    for path in (
        "/compute/generate?family=odd&params=3",
        "/compute/wiener?family=petersen",
        "/compute/verify-a136328?max_n=6&brute_max=0",
    ):
        first = client.get(path, headers=h)
        second = client.get(path, headers=h)
        if "verify" in path:
            # elapsed_seconds is a measurement, everything else is frozen
            a, b = first.json(), second.json()
            a.pop("elapsed_seconds"), b.pop("elapsed_seconds")
            a.pop("rendered"), b.pop("rendered")
            assert a == b
        else:
            assert first.content == second.content


def test_wiener_endpoint_returns_string_values(client):
    r = client.get("/compute/wiener?family=odd&params=6", headers=_headers("student"))
    assert r.json()["wiener"] == "436821"


def test_moderation_round_trip_via_api(client):
    mod = _headers("moderator")
    sid = _fresh_submission(client)
    for action in ("start", "approve"):
        r = client.post(f"/submissions/{sid}/review", json={"action": action}, headers=mod)
        assert r.status_code == 200
    r = client.post(f"/submissions/{sid}/publish", headers=mod)
    assert r.status_code == 200
    assert r.json()["state"] == "Published"
    page = client.get("/pages/ACGT-000001", headers=_headers("student")).json()
    assert page["properties"][-1]["text"] == "matrix probe."
    assert page["properties"][-1]["color"] == "in-course"


def test_publish_invalid_payload_gives_400_and_keeps_approved(client):
    mod = _headers("moderator")
    r = client.post(
        "/submissions",
        json={"target": {"page_id": "ACGT-000002", "attribute": None}, "payload": "%REL ACGT-313131"},
        headers=_headers("student"),
    )
    sid = r.json()["id"]
    client.post(f"/submissions/{sid}/review", json={"action": "start"}, headers=mod)
    client.post(f"/submissions/{sid}/review", json={"action": "approve"}, headers=mod)
    r = client.post(f"/submissions/{sid}/publish", headers=mod)
    assert r.status_code == 400 and r.json()["error"] == "validation-failed"
    r = client.get(f"/submissions/{sid}", headers=mod)
    assert r.json()["state"] == "Approved"
