"""Tab-separated file formats for the prerequisite corpus and the syllabus."""

from __future__ import annotations

from fractions import Fraction

from cgtportal.errors import ParseError
from cgtportal.content.model import Corpus, CorpusTerm, SyllabusMap, SyllabusUnit


def corpus_to_text(corpus: Corpus) -> str:
    """One term per line: ``type<TAB>term<TAB>target[<TAB>target...]``."""
    lines = []
    for term in corpus:
        lines.append("\t".join([term.type, term.term, *term.targets]))
    return "\n".join(lines) + "\n"


def parse_corpus(text: str) -> Corpus:
    corpus = Corpus()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\n")
        if not line.strip() or line.startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) < 3:
            raise ParseError("corpus line needs type, term and at least one target", lineno)
        try:
            corpus.add(CorpusTerm(term=cols[1], type=cols[0], targets=tuple(cols[2:])))
        except Exception as exc:
            raise ParseError(str(exc), lineno) from exc
    return corpus


def _format_weight(w: Fraction) -> str:
    return str(w.numerator) if w.denominator == 1 else f"{w.numerator}/{w.denominator}"


def syllabus_to_text(syllabus: SyllabusMap) -> str:
    """Weights header, then ``unit_id<TAB>title<TAB>term...`` per unit."""
    lines = [f"weights\t{_format_weight(syllabus.w1)}\t{_format_weight(syllabus.w2)}"]
    for unit in syllabus.units:
        lines.append("\t".join([unit.unit_id, unit.title, *sorted(unit.covered_terms)]))
    return "\n".join(lines) + "\n"


def _parse_fraction(token: str, lineno: int) -> Fraction:
    try:
        if "/" in token:
            num, den = token.split("/", 1)
            return Fraction(int(num), int(den))
        return Fraction(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad weight {token!r}", lineno) from exc


def parse_syllabus(text: str) -> SyllabusMap:
    w1, w2 = Fraction(1), Fraction(2)
    units = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\n")
        if not line.strip() or line.startswith("#"):
            continue
        cols = line.split("\t")
        if cols[0] == "weights":
            if len(cols) != 3:
                raise ParseError("weights line needs exactly two values", lineno)
            w1 = _parse_fraction(cols[1], lineno)
            w2 = _parse_fraction(cols[2], lineno)
            continue
        if len(cols) < 2:
            raise ParseError("syllabus line needs unit id and title", lineno)
        units.append(SyllabusUnit.of(cols[0], cols[1], cols[2:]))
    try:
        return SyllabusMap(units=tuple(units), w1=w1, w2=w2)
    except Exception as exc:
        raise ParseError(str(exc), 1) from exc
