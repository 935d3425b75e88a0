"""Page index: validation, backward links, relevance, and keyword search.

The query operations are pure functions over an index snapshot, so any
number may run concurrently; the service module serializes mutations.
"""

from __future__ import annotations

import re
from fractions import Fraction

from cgtportal.errors import UnknownPageError, UnknownTermError
from cgtportal.content.model import (
    Corpus,
    Finding,
    LogicalPage,
    PAGE_ID_PATTERN,
    PAGE_KINDS,
    PAGE_STATUSES,
    SyllabusMap,
)

_TOKEN_RE = re.compile(r"[a-z0-9]+")


class PageIndex:
    """In-memory page collection keyed by id; ids never change after creation."""

    def __init__(self, pages=()):
        self._pages: dict[str, LogicalPage] = {}
        for page in pages:
            self.put(page)

    def put(self, page: LogicalPage) -> None:
        self._pages[page.id] = page

    def get(self, page_id: str) -> LogicalPage:
        page = self._pages.get(page_id)
        if page is None:
            raise UnknownPageError(f"no page {page_id!r}")
        return page

    def __contains__(self, page_id: str) -> bool:
        return page_id in self._pages

    def __iter__(self):
        return iter(sorted(self._pages.values(), key=lambda p: p.id))

    def __len__(self) -> int:
        return len(self._pages)

    def page_ids(self) -> list[str]:
        return sorted(self._pages)

    def snapshot(self) -> "PageIndex":
        copy = PageIndex()
        copy._pages = dict(self._pages)
        return copy


def validate_page(page: LogicalPage, corpus: Corpus, index: PageIndex) -> list[Finding]:
    """Every violated page invariant, as data; a publishable page reports none."""
    findings: list[Finding] = []
    if not PAGE_ID_PATTERN.match(page.id):
        findings.append(Finding("bad-id", f"id {page.id!r} must match ACGT-######"))
    if page.kind not in PAGE_KINDS:
        findings.append(Finding("bad-kind", f"kind {page.kind!r} not one of {PAGE_KINDS}"))
    if page.status not in PAGE_STATUSES:
        findings.append(Finding("bad-status", f"status {page.status!r} not one of {PAGE_STATUSES}"))
    if not page.title.strip():
        findings.append(Finding("empty-title", "title must be non-empty"))
    if page.status == "Published" and not page.definition.strip():
        findings.append(Finding("empty-definition", "Published pages require a definition"))
    for rel in page.related:
        if rel == page.id:
            findings.append(Finding("self-related", f"page lists itself under related"))
        elif rel not in index:
            findings.append(Finding("unresolved-related", f"related id {rel!r} does not resolve"))
    for i, prop in enumerate(page.properties):
        if prop.color is None:
            findings.append(Finding("uncolored-property", f"property {i + 1} carries no color code"))
    for i, box in enumerate(page.prereq_boxes):
        if not box.terms:
            findings.append(Finding("empty-prereq-box", f"prerequisite box {i + 1} lists no terms"))
            continue
        types = []
        for term in box.terms:
            entry = corpus.get(term)
            if entry is None:
                findings.append(Finding("unknown-prereq-term", f"term {term!r} is not in the corpus"))
            else:
                types.append(entry.type)
        expected = "P2" if "P2" in types else "P1"
        if types and box.declared_type != expected:
            findings.append(
                Finding(
                    "box-type-mismatch",
                    f"box {i + 1} declares {box.declared_type} but member terms make it {expected}",
                )
            )
    return findings


def backward_links(term: str, index: PageIndex, corpus: Corpus) -> list[str]:
    """Published pages whose prerequisite boxes reference ``term``, id-ascending."""
    if term not in corpus:
        raise UnknownTermError(f"term {term!r} is not in the corpus")
    key = term.casefold()
    hits = []
    for page in index:
        if page.status != "Published":
            continue
        if any(t.casefold() == key for box in page.prereq_boxes for t in box.terms):
            hits.append(page.id)
    return hits


def relevance(page: LogicalPage, syllabus: SyllabusMap, corpus: Corpus) -> Fraction:
    """Degree-of-relevance indicator in [0, 1].

    Weighted average over the page's deduplicated prerequisite terms:
    each term contributes w1 (P1) or w2 (P2) of weight and scores 1 exactly
    when some syllabus unit covers it. A page with no prerequisite terms is
    fully relevant by convention.
    """
    terms = page.prereq_terms()
    if not terms:
        return Fraction(1)
    covered_weight = Fraction(0)
    total_weight = Fraction(0)
    for term in terms:
        entry = corpus.get(term)
        if entry is None:
            raise UnknownTermError(f"term {term!r} is not in the corpus")
        weight = syllabus.w2 if entry.type == "P2" else syllabus.w1
        total_weight += weight
        if syllabus.covers(term):
            covered_weight += weight
    return covered_weight / total_weight


def _tokens(text: str) -> list[str]:
    return _TOKEN_RE.findall(text.casefold())


def _field_texts(page: LogicalPage) -> list[tuple[str, int]]:
    """(text, weight) pairs: title 3x, definition 2x, everything else 1x."""
    texts = [(page.title, 3), (page.definition, 2), (page.historical_notes, 1)]
    texts += [(fig, 1) for fig in page.figures]
    texts += [(cons.text, 1) for cons in page.constructions]
    texts += [(prop.text, 1) for prop in page.properties]
    texts += [(ref.text, 1) for ref in page.more_to_explore]
    texts += [(ref.url, 1) for ref in page.more_to_explore if ref.url]
    texts += [(remark.text, 1) for remark in page.remarks]
    texts += [(term, 1) for box in page.prereq_boxes for term in box.terms]
    texts += [(course, 1) for course in page.prereq_courses]
    return texts


def search(query: str, index: PageIndex) -> list[tuple[str, int]]:
    """Ranked keyword search over Published pages.

    Case-insensitive token matching across all text attributes; the score is
    the weighted term frequency. Deterministic: descending score, then
    ascending page id. An empty or tokenless query returns nothing.
    """
    query_tokens = _tokens(query)
    if not query_tokens:
        return []
    results = []
    for page in index:
        if page.status != "Published":
            continue
        score = 0
        for text, weight in _field_texts(page):
            counts: dict[str, int] = {}
            for token in _tokens(text):
                counts[token] = counts.get(token, 0) + 1
            for token in query_tokens:
                score += weight * counts.get(token, 0)
        if score > 0:
            results.append((page.id, score))
    results.sort(key=lambda pair: (-pair[1], pair[0]))
    return results
