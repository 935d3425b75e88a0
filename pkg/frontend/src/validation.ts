// Client-side pre-validation of submission fragments. This mirrors the
// server's fragment parser and page validator so authors get instant
// feedback, but it is advisory only: the server re-validates everything and
// stays authoritative (disabling this module cannot get an invalid payload
// published).

export interface Finding {
  code: string;
  line: number;
  detail: string;
}

const KNOWN_TAGS = new Set([
  'ID', 'TITLE', 'KIND', 'DEF', 'FIG', 'CONS', 'PROP', 'REL', 'MORE',
  'HIST', 'REMARK', 'PREREQ', 'COLOR', 'COURSES', 'COMPUTED', 'STATUS',
]);

const FORBIDDEN_IN_FRAGMENT = new Set(['ID', 'STATUS']);
const ARG_TAGS = new Set(['CONS', 'PROP', 'MORE', 'REMARK', 'PREREQ']);
const SCALAR_TAGS = new Set(['TITLE', 'DEF', 'HIST', 'COLOR', 'COURSES']);
const COLORS = new Set(['in-course', 'outside-course']);
const PAGE_ID = /^ACGT-\d{6}$/;
const TAG_LINE = /^%([A-Z]+)(?:\(([^)]*)\))?(?: (.*))?$/;

export function validateFragment(text: string): Finding[] {
  const findings: Finding[] = [];
  const seenScalars = new Set<string>();
  let sawTag = false;

  const lines = text.split('\n');
  lines.forEach((raw, index) => {
    const line = index + 1;
    if (raw.trim() === '') return;
    if (raw[0] === ' ' || raw[0] === '\t') {
      if (!sawTag) {
        findings.push({ code: 'orphan-continuation', line, detail: 'continuation before any tag' });
      } else if (!raw.startsWith('    ')) {
        findings.push({ code: 'bad-indent', line, detail: 'continuation lines must start with four spaces' });
      }
      return;
    }
    const match = TAG_LINE.exec(raw);
    if (!match) {
      findings.push({ code: 'malformed-record', line, detail: `not a %TAG record: ${raw}` });
      return;
    }
    sawTag = true;
    const tag = match[1] ?? '';
    const arg = match[2];
    const value = match[3] ?? '';
    if (!KNOWN_TAGS.has(tag)) {
      findings.push({ code: 'unknown-tag', line, detail: `unknown tag %${tag}` });
      return;
    }
    if (FORBIDDEN_IN_FRAGMENT.has(tag)) {
      findings.push({ code: 'forbidden-tag', line, detail: `%${tag} is set by the workflow, not by submissions` });
      return;
    }
    if (arg !== undefined && !ARG_TAGS.has(tag)) {
      findings.push({ code: 'unexpected-arg', line, detail: `%${tag} takes no (argument)` });
    }
    if (SCALAR_TAGS.has(tag)) {
      if (seenScalars.has(tag)) {
        findings.push({ code: 'duplicate-scalar', line, detail: `%${tag} given more than once` });
      }
      seenScalars.add(tag);
    }
    switch (tag) {
      case 'PROP':
        if (arg === undefined) {
          findings.push({ code: 'uncolored-property', line, detail: 'properties need a (color) to publish' });
        } else if (!COLORS.has(arg)) {
          findings.push({ code: 'bad-color', line, detail: `color must be in-course or outside-course, got ${arg}` });
        }
        break;
      case 'PREREQ':
        if (arg !== 'P1' && arg !== 'P2') {
          findings.push({ code: 'bad-prereq-type', line, detail: '%PREREQ needs (P1) or (P2)' });
        }
        if (value.split(';').every((t) => t.trim() === '')) {
          findings.push({ code: 'empty-prereq-box', line, detail: 'prerequisite box lists no terms' });
        }
        break;
      case 'REMARK':
        if (arg === undefined || arg === '') {
          findings.push({ code: 'missing-author', line, detail: '%REMARK needs an (author)' });
        }
        break;
      case 'REL':
        if (!PAGE_ID.test(value)) {
          findings.push({ code: 'bad-related-id', line, detail: `related id must match ACGT-######, got ${value}` });
        }
        break;
      case 'COLOR':
        if (!COLORS.has(value)) {
          findings.push({ code: 'bad-color', line, detail: `color must be in-course or outside-course, got ${value}` });
        }
        break;
      case 'COMPUTED':
        if (!value.includes('=')) {
          findings.push({ code: 'bad-computed', line, detail: '%COMPUTED must be key=value' });
        }
        break;
    }
  });

  if (!sawTag) {
    findings.push({ code: 'empty-fragment', line: 1, detail: 'the payload carries no records' });
  }
  return findings;
}

// Full new-page proposals additionally need identity and lifecycle tags plus
// the required scalars; the composer uses this when target is "new page".
export function validateNewPage(text: string): Finding[] {
  const findings: Finding[] = [];
  const present = new Set<string>();
  text.split('\n').forEach((raw) => {
    const match = TAG_LINE.exec(raw);
    if (match && match[1]) present.add(match[1]);
  });
  for (const required of ['ID', 'TITLE', 'KIND', 'DEF', 'STATUS']) {
    if (!present.has(required)) {
      findings.push({ code: 'missing-tag', line: 1, detail: `new pages need %${required}` });
    }
  }
  // reuse the record-level checks, ignoring the fragment-only tag ban
  for (const f of validateFragment(text)) {
    if (f.code !== 'forbidden-tag' && f.code !== 'empty-fragment') findings.push(f);
  }
  return findings;
}
