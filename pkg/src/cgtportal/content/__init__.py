"""Portal content model: logical pages, prerequisite corpus, search.

Pages and corpus objects are immutable; mutation means producing a new
instance and swapping it into a :class:`PageIndex`, which the service module
serializes through its single-writer store.
"""

from cgtportal.content.model import (
    Construction,
    Corpus,
    CorpusTerm,
    ColorCode,
    Finding,
    LogicalPage,
    MoreRef,
    PageProperty,
    PrerequisiteBox,
    Remark,
    SyllabusMap,
    SyllabusUnit,
)
from cgtportal.content.fielded import export_page, import_page, parse_fragment
from cgtportal.content.index import (
    PageIndex,
    backward_links,
    relevance,
    search,
    validate_page,
)
from cgtportal.content.files import (
    corpus_to_text,
    parse_corpus,
    parse_syllabus,
    syllabus_to_text,
)
from cgtportal.content.seed import build_seed_corpus, build_seed_pages, build_seed_syllabus

__all__ = [
    "ColorCode",
    "Construction",
    "Corpus",
    "CorpusTerm",
    "Finding",
    "LogicalPage",
    "MoreRef",
    "PageIndex",
    "PageProperty",
    "PrerequisiteBox",
    "Remark",
    "SyllabusMap",
    "SyllabusUnit",
    "backward_links",
    "build_seed_corpus",
    "build_seed_pages",
    "build_seed_syllabus",
    "corpus_to_text",
    "export_page",
    "import_page",
    "parse_corpus",
    "parse_fragment",
    "parse_syllabus",
    "relevance",
    "search",
    "syllabus_to_text",
    "validate_page",
]
