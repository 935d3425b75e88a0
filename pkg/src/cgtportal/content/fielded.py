"""Line-oriented fielded page format: the portal's interchange contract.

A page is a sequence of ``%TAG value`` records; a tag may carry a
parenthesized argument (``%PROP(in-course) ...``). Values continue across
lines by indenting every continuation line with exactly four spaces. Files
are UTF-8 with LF line endings. ``import_page(export_page(p))`` reproduces
``p`` field for field; unknown tags are rejected with their line number.

Tags, in export order:
  %ID %TITLE %KIND %DEF %FIG %CONS(family params) %PROP(color) %REL
  %MORE(url) %HIST %REMARK(author) %PREREQ(type) %COLOR %COURSES
  %COMPUTED %STATUS
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace

from cgtportal.errors import InvalidParameterError, ParseError
from cgtportal.graphs.families import FAMILIES, FamilySpec
from cgtportal.content.model import (
    ColorCode,
    Construction,
    LogicalPage,
    MoreRef,
    PageProperty,
    PAGE_KINDS,
    PAGE_STATUSES,
    PrerequisiteBox,
    Remark,
    TERM_TYPES,
)

_CONTINUATION = "    "
_TAG_RE = re.compile(r"^%([A-Z]+)(?:\(([^)]*)\))?(?: (.*))?$")

_KNOWN_TAGS = {
    "ID", "TITLE", "KIND", "DEF", "FIG", "CONS", "PROP", "REL", "MORE",
    "HIST", "REMARK", "PREREQ", "COLOR", "COURSES", "COMPUTED", "STATUS",
}

_ARG_TAGS = {"CONS", "PROP", "MORE", "REMARK", "PREREQ"}

# Tags a submission fragment may carry; identity and lifecycle stay server-side.
FRAGMENT_TAGS = _KNOWN_TAGS - {"ID", "STATUS"}


@dataclass(frozen=True)
class _Record:
    lineno: int
    tag: str
    arg: str | None
    value: str


def _check_arg(arg: str, what: str) -> str:
    if ")" in arg or "\n" in arg:
        raise InvalidParameterError(f"{what} may not contain ')' or newline: {arg!r}")
    return arg


def _check_list_item(item: str, what: str) -> str:
    if ";" in item or "\n" in item:
        raise InvalidParameterError(f"{what} may not contain ';' or newline: {item!r}")
    if not item or item != item.strip():
        raise InvalidParameterError(f"{what} must be non-empty without surrounding whitespace: {item!r}")
    return item


def _emit(lines: list[str], tag: str, value: str, arg: str | None = None) -> None:
    head = f"%{tag}" + (f"({arg})" if arg is not None else "")
    value_lines = value.split("\n")
    lines.append(head + (f" {value_lines[0]}" if value_lines[0] else ""))
    for cont in value_lines[1:]:
        # blank continuation lines are indistinguishable from record separators
        if not cont.strip():
            raise InvalidParameterError(f"%{tag} value may not contain blank continuation lines")
        lines.append(_CONTINUATION + cont)


def _binding_arg(spec: FamilySpec) -> str:
    return " ".join([spec.family, *map(str, spec.params)])


def export_page(page: LogicalPage) -> str:
    """Render a page in the fielded format, tags in canonical order."""
    lines: list[str] = []
    _emit(lines, "ID", page.id)
    _emit(lines, "TITLE", page.title)
    _emit(lines, "KIND", page.kind)
    _emit(lines, "DEF", page.definition)
    for fig in page.figures:
        _emit(lines, "FIG", fig)
    for cons in page.constructions:
        arg = _check_arg(_binding_arg(cons.binding), "construction binding") if cons.binding else None
        _emit(lines, "CONS", cons.text, arg)
    for prop in page.properties:
        arg = prop.color.value if prop.color is not None else None
        _emit(lines, "PROP", prop.text, arg)
    for rel in page.related:
        _emit(lines, "REL", rel)
    for ref in page.more_to_explore:
        arg = _check_arg(ref.url, "reference URL") if ref.url is not None else None
        _emit(lines, "MORE", ref.text, arg)
    if page.historical_notes:
        _emit(lines, "HIST", page.historical_notes)
    for remark in page.remarks:
        _emit(lines, "REMARK", remark.text, _check_arg(remark.author, "remark author"))
    for box in page.prereq_boxes:
        for term in box.terms:
            _check_list_item(term, "prerequisite term")
        _emit(lines, "PREREQ", "; ".join(box.terms), box.declared_type)
    if page.color is not None:
        _emit(lines, "COLOR", page.color.value)
    if page.prereq_courses:
        for course in page.prereq_courses:
            _check_list_item(course, "course name")
        _emit(lines, "COURSES", "; ".join(page.prereq_courses))
    for key, value in page.computed:
        if "=" in key or "\n" in key:
            raise InvalidParameterError(f"computed key may not contain '=' or newline: {key!r}")
        _emit(lines, "COMPUTED", f"{key}={value}")
    _emit(lines, "STATUS", page.status)
    return "\n".join(lines) + "\n"


def _scan(text: str) -> list[_Record]:
    records: list[_Record] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip():
            continue
        if raw[0] in " \t":
            if not records:
                raise ParseError("continuation line before any tag", lineno)
            if not raw.startswith(_CONTINUATION):
                raise ParseError("continuation lines must start with four spaces", lineno)
            last = records[-1]
            records[-1] = replace(last, value=last.value + "\n" + raw[len(_CONTINUATION):])
            continue
        match = _TAG_RE.match(raw)
        if not match:
            raise ParseError(f"malformed record {raw!r}", lineno)
        tag, arg, value = match.group(1), match.group(2), match.group(3) or ""
        if tag not in _KNOWN_TAGS:
            raise ParseError(f"unknown tag %{tag}", lineno, tag=tag)
        if arg is not None and tag not in _ARG_TAGS:
            raise ParseError(f"%{tag} takes no argument", lineno, tag=tag)
        records.append(_Record(lineno, tag, arg, value))
    return records


def _parse_color(arg: str | None, rec: _Record) -> ColorCode | None:
    if arg is None:
        return None
    try:
        return ColorCode(arg)
    except ValueError:
        raise ParseError(f"unknown color {arg!r}", rec.lineno, tag=rec.tag) from None


def _parse_binding(arg: str | None, rec: _Record) -> FamilySpec | None:
    if arg is None:
        return None
    parts = arg.split()
    if not parts:
        raise ParseError("empty construction binding", rec.lineno, tag=rec.tag)
    family, raw_params = parts[0], parts[1:]
    if family not in FAMILIES:
        raise ParseError(f"unknown family {family!r} in binding", rec.lineno, tag=rec.tag)
    try:
        params = tuple(int(p) for p in raw_params)
    except ValueError:
        raise ParseError(f"non-integer binding parameter in {arg!r}", rec.lineno, tag=rec.tag) from None
    return FamilySpec(family, params)


def _split_list(value: str) -> tuple[str, ...]:
    return tuple(part.strip() for part in value.split(";") if part.strip())


def _build_fields(records: list[_Record]) -> dict:
    """Shared record-to-field mapping for full pages and fragments."""
    fields: dict = {
        "figures": [], "constructions": [], "properties": [], "related": [],
        "more_to_explore": [], "remarks": [], "prereq_boxes": [], "computed": [],
    }
    scalar_seen: set[str] = set()

    def scalar(rec: _Record, key: str, value) -> None:
        if key in scalar_seen:
            raise ParseError(f"%{rec.tag} given more than once", rec.lineno, tag=rec.tag)
        scalar_seen.add(key)
        fields[key] = value

    for rec in records:
        if rec.tag == "ID":
            scalar(rec, "id", rec.value)
        elif rec.tag == "TITLE":
            scalar(rec, "title", rec.value)
        elif rec.tag == "KIND":
            if rec.value not in PAGE_KINDS:
                raise ParseError(f"unknown kind {rec.value!r}", rec.lineno, tag=rec.tag)
            scalar(rec, "kind", rec.value)
        elif rec.tag == "DEF":
            scalar(rec, "definition", rec.value)
        elif rec.tag == "FIG":
            fields["figures"].append(rec.value)
        elif rec.tag == "CONS":
            fields["constructions"].append(Construction(rec.value, _parse_binding(rec.arg, rec)))
        elif rec.tag == "PROP":
            fields["properties"].append(PageProperty(rec.value, _parse_color(rec.arg, rec)))
        elif rec.tag == "REL":
            fields["related"].append(rec.value)
        elif rec.tag == "MORE":
            fields["more_to_explore"].append(MoreRef(rec.value, rec.arg))
        elif rec.tag == "HIST":
            scalar(rec, "historical_notes", rec.value)
        elif rec.tag == "REMARK":
            if rec.arg is None:
                raise ParseError("%REMARK requires an (author) argument", rec.lineno, tag=rec.tag)
            fields["remarks"].append(Remark(rec.arg, rec.value))
        elif rec.tag == "PREREQ":
            if rec.arg not in TERM_TYPES:
                raise ParseError(f"%PREREQ type must be P1 or P2, got {rec.arg!r}", rec.lineno, tag=rec.tag)
            terms = _split_list(rec.value)
            if not terms:
                raise ParseError("%PREREQ box must list at least one term", rec.lineno, tag=rec.tag)
            fields["prereq_boxes"].append(PrerequisiteBox(terms, rec.arg))
        elif rec.tag == "COLOR":
            color = _parse_color(rec.value, rec)
            scalar(rec, "color", color)
        elif rec.tag == "COURSES":
            scalar(rec, "prereq_courses", _split_list(rec.value))
        elif rec.tag == "COMPUTED":
            if "=" not in rec.value:
                raise ParseError("%COMPUTED must be key=value", rec.lineno, tag=rec.tag)
            key, _, value = rec.value.partition("=")
            fields["computed"].append((key, value))
        elif rec.tag == "STATUS":
            if rec.value not in PAGE_STATUSES:
                raise ParseError(f"unknown status {rec.value!r}", rec.lineno, tag=rec.tag)
            scalar(rec, "status", rec.value)
    for key in ("figures", "constructions", "properties", "related",
                "more_to_explore", "remarks", "prereq_boxes", "computed"):
        fields[key] = tuple(fields[key])
    return fields


def import_page(text: str) -> LogicalPage:
    """Parse a complete fielded page; inverse of :func:`export_page`."""
    records = _scan(text)
    if not records:
        raise ParseError("empty page input", 1)
    fields = _build_fields(records)
    for required in ("id", "title", "kind", "definition", "status"):
        if required not in fields:
            raise ParseError(f"missing required tag %{required.upper() if required != 'definition' else 'DEF'}",
                             records[-1].lineno)
    return LogicalPage(**fields)


@dataclass(frozen=True)
class PageFragment:
    """Parsed submission payload: scalar replacements plus list appends."""

    scalars: tuple[tuple[str, object], ...]
    appends: tuple[tuple[str, tuple], ...]

    def is_empty(self) -> bool:
        return not self.scalars and not self.appends


_FRAGMENT_SCALARS = ("title", "definition", "historical_notes", "color", "prereq_courses")
_FRAGMENT_LISTS = ("figures", "constructions", "properties", "related",
                   "more_to_explore", "remarks", "prereq_boxes", "computed")


def parse_fragment(text: str) -> PageFragment:
    """Parse a fielded fragment for a submission targeting page attributes.

    Scalar tags (%TITLE %DEF %HIST %COLOR %COURSES) replace the attribute;
    list tags append to it. %ID and %STATUS are rejected: identity and
    lifecycle belong to the moderation workflow.
    """
    records = _scan(text)
    if not records:
        raise ParseError("empty fragment", 1)
    for rec in records:
        if rec.tag not in FRAGMENT_TAGS:
            raise ParseError(f"%{rec.tag} is not allowed in a submission fragment", rec.lineno, tag=rec.tag)
    fields = _build_fields(records)
    scalars = tuple((key, fields[key]) for key in _FRAGMENT_SCALARS if key in fields)
    appends = tuple((key, fields[key]) for key in _FRAGMENT_LISTS if fields[key])
    return PageFragment(scalars=scalars, appends=appends)


def apply_fragment(page: LogicalPage, fragment: PageFragment) -> LogicalPage:
    """Produce the page with the fragment applied; the input page is untouched."""
    updates: dict = {key: value for key, value in fragment.scalars}
    for key, items in fragment.appends:
        updates[key] = getattr(page, key) + items
    return replace(page, **updates)
