"""File-backed document store with a write-ahead journal.

One UTF-8 text document per entity, under a root directory. Single-document
writes are atomic (write to a temp file, fsync, rename). Multi-document
writes (the publish path) first append the full intent to a journal line and
fsync it, then apply each document, then append an applied marker; recovery
on open replays any journaled-but-unapplied transaction, so a crash leaves
the store at either the pre- or the post-transaction state, never between.

A ``crash_hook`` attribute lets tests simulate a crash at labeled points by
raising :class:`SimulatedCrash`; production code never sets it.
"""

from __future__ import annotations

import json
import os
import re
import threading
from pathlib import Path
from typing import Callable, Sequence

from cgtportal.errors import InvalidParameterError

_DOC_PATH_RE = re.compile(r"^[A-Za-z0-9][A-Za-z0-9._/-]*$")

JOURNAL_NAME = "journal.log"


class SimulatedCrash(RuntimeError):
    """Raised by test crash hooks to abandon a transaction mid-flight."""


def _check_rel(rel: str) -> str:
    if not _DOC_PATH_RE.match(rel) or ".." in rel.split("/"):
        raise InvalidParameterError(f"bad document path {rel!r}")
    return rel


class DocumentStore:
    """Document-per-entity store; all writes funnel through one lock."""

    def __init__(self, root: str | Path):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        self._lock = threading.RLock()
        self._journal = self.root / JOURNAL_NAME
        self.crash_hook: Callable[[str], None] | None = None
        self._recover()

    # -- reads ------------------------------------------------------------

    def read(self, rel: str) -> str | None:
        path = self.root / _check_rel(rel)
        if not path.is_file():
            return None
        return path.read_text(encoding="utf-8")

    def exists(self, rel: str) -> bool:
        return (self.root / _check_rel(rel)).is_file()

    def list(self, prefix: str) -> list[str]:
        """Relative paths of documents under ``prefix``, sorted."""
        base = self.root / _check_rel(prefix)
        if not base.is_dir():
            return []
        found = []
        for path in base.rglob("*"):
            if path.is_file():
                found.append(str(path.relative_to(self.root)))
        return sorted(found)

    # -- writes -----------------------------------------------------------

    def _maybe_crash(self, point: str) -> None:
        if self.crash_hook is not None:
            self.crash_hook(point)

    def _write_doc(self, rel: str, content: str) -> None:
        path = self.root / _check_rel(rel)
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_name(path.name + ".tmp")
        with open(tmp, "w", encoding="utf-8") as fh:
            fh.write(content)
            fh.flush()
            os.fsync(fh.fileno())
        os.replace(tmp, path)

    def write(self, rel: str, content: str) -> None:
        """Atomic single-document write."""
        with self._lock:
            self._write_doc(rel, content)

    def delete(self, rel: str) -> None:
        with self._lock:
            path = self.root / _check_rel(rel)
            if path.is_file():
                path.unlink()

    def transaction(self, writes: Sequence[tuple[str, str]]) -> None:
        """Apply several document writes atomically via the journal."""
        writes = [( _check_rel(rel), content) for rel, content in writes]
        with self._lock:
            txn_id = self._next_txn_id()
            record = json.dumps({"txn": txn_id, "writes": [[r, c] for r, c in writes]})
            with open(self._journal, "a", encoding="utf-8") as fh:
                fh.write(record + "\n")
                fh.flush()
                os.fsync(fh.fileno())
            self._maybe_crash("after-journal")
            for i, (rel, content) in enumerate(writes):
                self._write_doc(rel, content)
                self._maybe_crash(f"after-apply-{i}")
            with open(self._journal, "a", encoding="utf-8") as fh:
                fh.write(json.dumps({"applied": txn_id}) + "\n")
                fh.flush()
                os.fsync(fh.fileno())

    def _next_txn_id(self) -> int:
        self._txn_counter = getattr(self, "_txn_counter", 0) + 1
        return self._txn_counter

    # -- recovery ---------------------------------------------------------

    def _recover(self) -> None:
        """Replay journaled-but-unapplied transactions, then reset the journal.

        A torn trailing line means the intent never became durable: it is
        discarded, leaving the pre-transaction state.
        """
        if not self._journal.is_file():
            return
        pending: dict[int, list] = {}
        max_txn = 0
        with open(self._journal, encoding="utf-8") as fh:
            for line in fh:
                if not line.endswith("\n"):
                    break  # torn write: ignore the partial record
                try:
                    entry = json.loads(line)
                except json.JSONDecodeError:
                    break
                if "txn" in entry:
                    pending[entry["txn"]] = entry["writes"]
                    max_txn = max(max_txn, entry["txn"])
                elif "applied" in entry:
                    pending.pop(entry["applied"], None)
        for txn_id in sorted(pending):
            for rel, content in pending[txn_id]:
                self._write_doc(rel, content)
        self._txn_counter = max_txn
        tmp = self._journal.with_name(JOURNAL_NAME + ".tmp")
        tmp.write_text("", encoding="utf-8")
        os.replace(tmp, self._journal)
