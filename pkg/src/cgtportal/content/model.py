"""Domain types for portal pages, the prerequisite corpus, and the syllabus."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from cgtportal.errors import InvalidParameterError
from cgtportal.graphs.families import FamilySpec

PAGE_ID_PATTERN = re.compile(r"^ACGT-\d{6}$")

PAGE_KINDS = ("special-graph", "graph-class", "combinatorial-object")
PAGE_STATUSES = ("Draft", "Published")
TERM_TYPES = ("P1", "P2")


class ColorCode(str, Enum):
    """In-course vs outside-course marker for page attributes."""

    IN_COURSE = "in-course"
    OUTSIDE_COURSE = "outside-course"


@dataclass(frozen=True)
class PageProperty:
    """One properties-list entry; ``color`` is required on valid pages."""

    text: str
    color: ColorCode | None = None


@dataclass(frozen=True)
class Construction:
    """Construction/algorithm text, optionally bound to a compute-engine family."""

    text: str
    binding: FamilySpec | None = None


@dataclass(frozen=True)
class MoreRef:
    """More-to-explore reference: free text plus optional URL."""

    text: str
    url: str | None = None


@dataclass(frozen=True)
class Remark:
    author: str
    text: str


@dataclass(frozen=True)
class PrerequisiteBox:
    """Prerequisite terms attached to a page.

    ``declared_type`` is the box's dominant type: P2 exactly when any member
    term is P2 in the corpus.
    """

    terms: tuple[str, ...]
    declared_type: str  # "P1" | "P2"


@dataclass(frozen=True)
class LogicalPage:
    """One portal entry covering a special graph, graph class, or combinatorial object."""

    id: str
    title: str
    kind: str  # one of PAGE_KINDS
    definition: str
    figures: tuple[str, ...] = ()
    constructions: tuple[Construction, ...] = ()
    properties: tuple[PageProperty, ...] = ()
    related: tuple[str, ...] = ()
    more_to_explore: tuple[MoreRef, ...] = ()
    historical_notes: str = ""
    remarks: tuple[Remark, ...] = ()
    prereq_boxes: tuple[PrerequisiteBox, ...] = ()
    color: ColorCode | None = None  # page-level default
    prereq_courses: tuple[str, ...] = ()  # data only, drives no logic
    computed: tuple[tuple[str, str], ...] = ()  # cached verification results
    status: str = "Draft"

    def prereq_terms(self) -> list[str]:
        """All box terms, deduplicated case-insensitively, first-seen order."""
        seen: dict[str, str] = {}
        for box in self.prereq_boxes:
            for term in box.terms:
                seen.setdefault(term.casefold(), term)
        return list(seen.values())

    def is_in_course(self) -> bool:
        return self.color == ColorCode.IN_COURSE


@dataclass(frozen=True)
class CorpusTerm:
    """Prerequisite-corpus entry.

    P1 (lightweight) terms carry exactly one target: a short write-up or an
    existing page id. P2 (loaded) terms point to 1-4 write-ups or references.
    """

    term: str
    type: str  # "P1" | "P2"
    targets: tuple[str, ...]

    def __post_init__(self):
        if self.type not in TERM_TYPES:
            raise InvalidParameterError(f"corpus term type must be P1 or P2, got {self.type!r}")
        if self.type == "P1" and len(self.targets) != 1:
            raise InvalidParameterError(f"P1 term {self.term!r} must have exactly one target")
        if self.type == "P2" and not 1 <= len(self.targets) <= 4:
            raise InvalidParameterError(f"P2 term {self.term!r} must have 1-4 targets")


class Corpus:
    """The prerequisite vocabulary; terms are unique case-insensitively."""

    def __init__(self, terms: tuple[CorpusTerm, ...] = ()):
        self._by_key: dict[str, CorpusTerm] = {}
        for term in terms:
            self.add(term)

    def add(self, term: CorpusTerm) -> None:
        key = term.term.casefold()
        if key in self._by_key:
            raise InvalidParameterError(f"duplicate corpus term {term.term!r}")
        self._by_key[key] = term

    def get(self, term: str) -> CorpusTerm | None:
        return self._by_key.get(term.casefold())

    def __contains__(self, term: str) -> bool:
        return term.casefold() in self._by_key

    def __iter__(self):
        return iter(sorted(self._by_key.values(), key=lambda t: t.term.casefold()))

    def __len__(self) -> int:
        return len(self._by_key)


@dataclass(frozen=True)
class SyllabusUnit:
    unit_id: str
    title: str
    covered_terms: frozenset[str]  # stored casefolded

    @classmethod
    def of(cls, unit_id: str, title: str, terms) -> "SyllabusUnit":
        return cls(unit_id, title, frozenset(t.casefold() for t in terms))


@dataclass(frozen=True)
class SyllabusMap:
    """Course coverage used by the degree-of-relevance indicator.

    ``w1``/``w2`` weight P1/P2 terms in the relevance average; P2 terms are
    loaded, so they default heavier.
    """

    units: tuple[SyllabusUnit, ...] = ()
    w1: Fraction = Fraction(1)
    w2: Fraction = Fraction(2)

    def __post_init__(self):
        if self.w1 <= 0 or self.w2 <= 0:
            raise InvalidParameterError("syllabus weights must be positive")
        ids = [u.unit_id for u in self.units]
        if len(set(ids)) != len(ids):
            raise InvalidParameterError("syllabus unit ids must be unique")

    def covers(self, term: str) -> bool:
        key = term.casefold()
        return any(key in unit.covered_terms for unit in self.units)


@dataclass(frozen=True)
class Finding:
    """One validation violation; a clean page yields an empty report."""

    code: str
    detail: str

    def __str__(self) -> str:
        return f"{self.code}: {self.detail}"
