from __future__ import annotations

import concurrent.futures
import json

import pytest
from fastapi.testclient import TestClient

from domainsense import Lexicon, create_seed_lexicon
from domainsense.service import SESSION_LOG_NAME, create_app


@pytest.fixture
def lexdir(tmp_path):
    path = tmp_path / "lexicon"
    create_seed_lexicon().save(path)
    return path


@pytest.fixture
def client(lexdir):
    with TestClient(create_app(lexdir)) as c:
        yield c


def test_disambiguate_imagination(client):
    resp = client.post("/disambiguate", json={"sentence": "The play of the imagination."})
    assert resp.status_code == 200
    body = resp.json()
    assert body["schema_version"] == 1
    assert body["winner"] == "Free_time"
    assert body["session_id"]
    assert body["unknown_words"] == []


def test_disambiguate_counts_ranked(client):
    body = client.post("/disambiguate", json={"sentence": "Play the stock market."}).json()
    assert body["counts"][0] == {"field_id": 11, "field_name": "Commerce", "count": 3}
    counts = [c["count"] for c in body["counts"]]
    assert counts == sorted(counts, reverse=True)


def test_disambiguate_empty_sentence_400(client):
    assert client.post("/disambiguate", json={"sentence": "   "}).status_code == 400
    assert client.post("/disambiguate", json={}).status_code == 400


def test_disambiguate_no_content_words_422(client):
    assert client.post("/disambiguate", json={"sentence": "of the for"}).status_code == 422


def test_feedback_confirm(client):
    session = client.post("/disambiguate", json={"sentence": "The play of the imagination."}).json()
    resp = client.post(
        f"/sessions/{session['session_id']}/feedback", json={"confirmed": True}
    )
    assert resp.status_code == 200
    body = resp.json()
    assert body["status"] == "confirmed"
    assert body["applied_delta"] == []
    assert body["new_winner"] == "Free_time"


def test_feedback_correct_to_commerce(client, lexdir):
    session = client.post("/disambiguate", json={"sentence": "Play the zither."}).json()
    resp = client.post(
        f"/sessions/{session['session_id']}/feedback",
        json={"confirmed": False, "chosen_field_id": 11},
    )
    assert resp.status_code == 200
    body = resp.json()
    assert body["status"] == "corrected"
    assert {"word": "zither", "field_id": 11, "field_name": "Commerce"} in body["applied_delta"]
    assert body["new_winner"] == "Commerce"
    assert Lexicon.load(lexdir).has_meaning("zither", 11)


def test_feedback_double_answer_409(client):
    session = client.post("/disambiguate", json={"sentence": "Play the drama."}).json()
    first = client.post(f"/sessions/{session['session_id']}/feedback", json={"confirmed": True})
    assert first.status_code == 200
    second = client.post(f"/sessions/{session['session_id']}/feedback", json={"confirmed": True})
    assert second.status_code == 409


def test_feedback_unknown_session_404(client):
    assert client.post("/sessions/nope/feedback", json={"confirmed": True}).status_code == 404


def test_feedback_missing_choice_400(client):
    session = client.post("/disambiguate", json={"sentence": "Play the drama."}).json()
    resp = client.post(f"/sessions/{session['session_id']}/feedback", json={"confirmed": False})
    assert resp.status_code == 400


def test_feedback_unknown_choice_400(client):
    session = client.post("/disambiguate", json={"sentence": "Play the drama."}).json()
    resp = client.post(
        f"/sessions/{session['session_id']}/feedback",
        json={"confirmed": False, "chosen_field_id": 999},
    )
    assert resp.status_code == 400


def test_feedback_confirm_without_winner_400(client):
    session = client.post("/disambiguate", json={"sentence": "The zither and the oboe."}).json()
    assert session["winner"] is None
    resp = client.post(f"/sessions/{session['session_id']}/feedback", json={"confirmed": True})
    assert resp.status_code == 400


def test_fields_listing(client):
    body = client.get("/fields").json()
    assert len(body["fields"]) == 16
    assert body["fields"][1] == {"field_id": 2, "name": "Sports"}


def test_suggestions(client):
    body = client.get("/suggestions", params={"word": "Pla"}).json()
    assert body["candidates"][0] == {"word": "play", "distance": 1}
    assert client.get("/suggestions").status_code == 400


def test_sessions_listing_newest_first(client):
    first = client.post("/disambiguate", json={"sentence": "Play the drama."}).json()
    second = client.post("/disambiguate", json={"sentence": "Play the stock market."}).json()
    body = client.get("/sessions", params={"limit": 10}).json()
    ids = [s["session_id"] for s in body["sessions"]]
    assert ids[0] == second["session_id"]
    assert ids[1] == first["session_id"]
    assert client.get("/sessions", params={"limit": 0}).json()["sessions"] == []
    assert client.get("/sessions", params={"limit": -1}).status_code == 400


def test_session_state_machine_only_two_transitions(client):
    session = client.post("/disambiguate", json={"sentence": "Play the drama."}).json()
    listed = client.get("/sessions", params={"limit": 1}).json()["sessions"][0]
    assert listed["status"] == "pending"
    client.post(f"/sessions/{session['session_id']}/feedback",
                json={"confirmed": False, "chosen_field_id": 2})
    listed = client.get("/sessions", params={"limit": 1}).json()["sessions"][0]
    assert listed["status"] == "corrected"
    # no further transition is possible
    resp = client.post(f"/sessions/{session['session_id']}/feedback", json={"confirmed": True})
    assert resp.status_code == 409


def test_session_log_survives_restart(lexdir):
    with TestClient(create_app(lexdir)) as client:
        session = client.post("/disambiguate", json={"sentence": "Play the drama."}).json()
        client.post(f"/sessions/{session['session_id']}/feedback", json={"confirmed": True})
    with TestClient(create_app(lexdir)) as client:
        sessions = client.get("/sessions", params={"limit": 5}).json()["sessions"]
    assert sessions[0]["session_id"] == session["session_id"]
    assert sessions[0]["status"] == "confirmed"


def test_session_log_replay_reconstructs_lexicon(lexdir):
    with TestClient(create_app(lexdir)) as client:
        for sentence, field_id in [("Play the zither.", 11), ("The oboe was loud.", 13)]:
            session = client.post("/disambiguate", json={"sentence": sentence}).json()
            client.post(
                f"/sessions/{session['session_id']}/feedback",
                json={"confirmed": False, "chosen_field_id": field_id},
            )
    # replaying the logged deltas over the seed reproduces the saved lexicon
    replayed = create_seed_lexicon()
    log = (lexdir / SESSION_LOG_NAME).read_text().splitlines()
    for line in log:
        event = json.loads(line)
        if event["event"] == "resolved":
            for item in event["applied_delta"]:
                replayed.add_meaning(item["word"], item["field_name"])
    saved = Lexicon.load(lexdir)
    assert {(m.word, m.field_id) for m in replayed.meanings} == {
        (m.word, m.field_id) for m in saved.meanings
    }


def test_concurrent_feedback_keeps_lexicon_consistent(client, lexdir):
    sentences = [f"The zither{i} and the oboe{i}." for i in range(20)]
    session_ids = []
    for sentence in sentences:
        body = client.post("/disambiguate", json={"sentence": sentence}).json()
        session_ids.append(body["session_id"])

    def send_feedback(session_id):
        return client.post(
            f"/sessions/{session_id}/feedback",
            json={"confirmed": False, "chosen_field_id": 13},
        ).status_code

    with concurrent.futures.ThreadPoolExecutor(max_workers=10) as pool:
        statuses = list(pool.map(send_feedback, session_ids))
    assert statuses == [200] * 20
    loaded = Lexicon.load(lexdir)  # parses and passes integrity checks
    for i in range(20):
        assert loaded.has_meaning(f"zither{i}", 13)
        assert loaded.has_meaning(f"oboe{i}", 13)
