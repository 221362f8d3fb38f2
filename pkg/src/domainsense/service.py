"""JSON HTTP API for disambiguation and the human feedback loop.

POST /disambiguate opens a pending session; POST /sessions/{id}/feedback
resolves it exactly once, either confirming the prediction or correcting
it to a chosen field, and writes the lexicon back to disk. Sessions are
persisted to an append-only JSONL log beside the lexicon files so the
history survives restarts. All lexicon mutations are serialized behind
one lock; reads never block each other.
"""

from __future__ import annotations

import json
import threading
import uuid
from datetime import datetime, timezone
from pathlib import Path

from fastapi import FastAPI, HTTPException, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .disambiguator import Disambiguation, disambiguate_sentence
from .errors import EmptySentenceError, NoContentWordsError
from .lexicon import Lexicon
from .pipeline import suggest_spellings

SCHEMA_VERSION = 1

PENDING = "pending"
CONFIRMED = "confirmed"
CORRECTED = "corrected"

SESSION_LOG_NAME = "sessions.jsonl"


class DisambiguateRequest(BaseModel):
    sentence: str = ""


class FeedbackRequest(BaseModel):
    confirmed: bool
    chosen_field_id: int | None = None


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


def _result_payload(result: Disambiguation, lex: Lexicon) -> dict:
    ranked = sorted(result.tally.counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return {
        "sentence": result.sentence,
        "tokens": [
            {"surface": t.surface, "tag": t.tag, "kind": t.kind} for t in result.tagged
        ],
        "matches": [
            {"word": w, "field_id": f, "field_name": lex.field_name(f)}
            for w, f in result.tally.trace
        ],
        "counts": [
            {"field_id": f, "field_name": lex.field_name(f), "count": c} for f, c in ranked
        ],
        "winner": result.winner_name,
        "winner_field_id": result.winner,
        "max_count": result.max_count,
        "tied": [
            {"field_id": f, "field_name": lex.field_name(f)} for f in result.tied
        ],
        "unknown_words": list(result.unknown_words),
        "content_words": list(result.content_words),
    }


class SessionStore:
    """In-memory session table backed by an append-only JSONL event log."""

    def __init__(self, log_path: Path) -> None:
        self._log_path = log_path
        self._records: dict[str, dict] = {}
        self._order: list[str] = []
        self._replay()

    def _replay(self) -> None:
        if not self._log_path.exists():
            return
        for line in self._log_path.read_text(encoding="utf-8").splitlines():
            if not line.strip():
                continue
            event = json.loads(line)
            if event["event"] == "created":
                record = dict(event)
                record.pop("event")
                record["status"] = PENDING
                record["applied_delta"] = None
                record["chosen_field_id"] = None
                record["resolved_at"] = None
                self._records[record["session_id"]] = record
                self._order.append(record["session_id"])
            elif event["event"] == "resolved":
                record = self._records.get(event["session_id"])
                if record is not None:
                    record["status"] = event["status"]
                    record["applied_delta"] = event["applied_delta"]
                    record["chosen_field_id"] = event.get("chosen_field_id")
                    record["new_winner"] = event.get("new_winner")
                    record["resolved_at"] = event["timestamp"]

    def _append(self, event: dict) -> None:
        with self._log_path.open("a", encoding="utf-8") as handle:
            handle.write(json.dumps(event) + "\n")

    def create(self, result_payload: dict) -> dict:
        record = {
            "session_id": uuid.uuid4().hex,
            "timestamp": _now(),
            "sentence": result_payload["sentence"],
            "result": result_payload,
            "status": PENDING,
            "applied_delta": None,
            "chosen_field_id": None,
            "resolved_at": None,
        }
        self._records[record["session_id"]] = record
        self._order.append(record["session_id"])
        self._append(
            {
                "event": "created",
                "session_id": record["session_id"],
                "timestamp": record["timestamp"],
                "sentence": record["sentence"],
                "result": result_payload,
            }
        )
        return record

    def get(self, session_id: str) -> dict | None:
        return self._records.get(session_id)

    def resolve(
        self,
        session_id: str,
        status: str,
        applied_delta: list[dict],
        chosen_field_id: int | None,
        new_winner: str | None,
    ) -> dict:
        record = self._records[session_id]
        record["status"] = status
        record["applied_delta"] = applied_delta
        record["chosen_field_id"] = chosen_field_id
        record["new_winner"] = new_winner
        record["resolved_at"] = _now()
        self._append(
            {
                "event": "resolved",
                "session_id": session_id,
                "timestamp": record["resolved_at"],
                "status": status,
                "applied_delta": applied_delta,
                "chosen_field_id": chosen_field_id,
                "new_winner": new_winner,
            }
        )
        return record

    def recent(self, limit: int) -> list[dict]:
        return [self._records[s] for s in reversed(self._order[-limit:])] if limit else []


def create_app(lexicon_dir: str | Path) -> FastAPI:
    lexicon_dir = Path(lexicon_dir)
    app = FastAPI(title="domainsense", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    lock = threading.RLock()
    lex = Lexicon.load(lexicon_dir)
    sessions = SessionStore(lexicon_dir / SESSION_LOG_NAME)

    @app.exception_handler(HTTPException)
    async def http_error(_request: Request, exc: HTTPException) -> JSONResponse:
        return JSONResponse(
            status_code=exc.status_code,
            content={"schema_version": SCHEMA_VERSION, "detail": exc.detail},
        )

    @app.post("/disambiguate")
    def post_disambiguate(body: DisambiguateRequest) -> dict:
        sentence = body.sentence.strip()
        if not sentence:
            raise HTTPException(status_code=400, detail="sentence is empty")
        with lock:
            try:
                result = disambiguate_sentence(sentence, lex)
            except EmptySentenceError:
                raise HTTPException(status_code=400, detail="sentence is empty") from None
            except NoContentWordsError:
                raise HTTPException(status_code=422, detail="sentence has no content words") from None
            payload = _result_payload(result, lex)
            record = sessions.create(payload)
        return {
            "schema_version": SCHEMA_VERSION,
            "session_id": record["session_id"],
            **payload,
        }

    def _apply_to_words(words: list[str], field_id: int) -> list[dict]:
        # caller holds the lock
        name = lex.field_name(field_id)
        added = []
        for word in words:
            if lex.add_meaning(word, name):
                added.append({"word": word, "field_id": field_id, "field_name": name})
        return added

    @app.post("/sessions/{session_id}/feedback")
    def post_feedback(session_id: str, body: FeedbackRequest) -> dict:
        with lock:
            record = sessions.get(session_id)
            if record is None:
                raise HTTPException(status_code=404, detail="unknown session")
            if record["status"] != PENDING:
                raise HTTPException(status_code=409, detail="session already resolved")
            # apply to the result the user actually saw, not a recomputation
            stored = record["result"]
            if body.confirmed:
                if stored["winner_field_id"] is None:
                    raise HTTPException(
                        status_code=400, detail="nothing to confirm: result has no winner"
                    )
                applied = _apply_to_words(stored["content_words"], stored["winner_field_id"])
                status = CONFIRMED
                chosen = None
            else:
                if body.chosen_field_id is None:
                    raise HTTPException(status_code=400, detail="chosen_field_id is required")
                if lex.field_by_id(body.chosen_field_id) is None:
                    raise HTTPException(status_code=400, detail="unknown chosen_field_id")
                applied = _apply_to_words(stored["content_words"], body.chosen_field_id)
                status = CORRECTED
                chosen = body.chosen_field_id
            lex.save(lexicon_dir)
            rerun = disambiguate_sentence(record["sentence"], lex)
            sessions.resolve(session_id, status, applied, chosen, rerun.winner_name)
        return {
            "schema_version": SCHEMA_VERSION,
            "session_id": session_id,
            "status": status,
            "applied_delta": applied,
            "new_winner": rerun.winner_name,
            "new_winner_field_id": rerun.winner,
        }

    @app.get("/fields")
    def get_fields() -> dict:
        with lock:
            fields = [{"field_id": f.field_id, "name": f.name} for f in lex.fields]
        return {"schema_version": SCHEMA_VERSION, "fields": fields}

    @app.get("/suggestions")
    def get_suggestions(word: str = "") -> dict:
        if not word.strip():
            raise HTTPException(status_code=400, detail="word query parameter is required")
        with lock:
            suggestion = suggest_spellings(word, lex)
        return {
            "schema_version": SCHEMA_VERSION,
            "original": suggestion.original,
            "candidates": [{"word": w, "distance": d} for w, d in suggestion.candidates],
        }

    @app.get("/sessions")
    def get_sessions(limit: str = "20") -> dict:
        try:
            parsed = int(limit)
        except ValueError:
            raise HTTPException(status_code=400, detail="limit must be an integer") from None
        if parsed < 0:
            raise HTTPException(status_code=400, detail="limit must be >= 0")
        with lock:
            records = sessions.recent(parsed)
        return {"schema_version": SCHEMA_VERSION, "sessions": records}

    return app
