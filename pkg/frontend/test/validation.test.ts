import { describe, expect, it } from 'vitest';

import { validateFragment, validateNewPage } from '../src/validation.js';

describe('validateFragment', () => {
  it('accepts a clean property fragment', () => {
    expect(validateFragment('%PROP(in-course) The hub has degree n-1.')).toEqual([]);
  });

  it('accepts multi-line values with four-space continuations', () => {
    const text = '%DEF first line\n    second line\n';
    expect(validateFragment(text)).toEqual([]);
  });

  it('rejects unknown tags with their line number', () => {
    const findings = validateFragment('%PROP(in-course) ok\n%ZZ boom\n');
    expect(findings).toHaveLength(1);
    expect(findings[0]).toMatchObject({ code: 'unknown-tag', line: 2 });
  });

  it('rejects identity and lifecycle tags', () => {
    const codes = validateFragment('%ID ACGT-000009\n%STATUS Published\n').map((f) => f.code);
    expect(codes).toEqual(['forbidden-tag', 'forbidden-tag']);
  });

  it('flags uncolored and badly colored properties', () => {
    expect(validateFragment('%PROP missing')[0]?.code).toBe('uncolored-property');
    expect(validateFragment('%PROP(purple) odd')[0]?.code).toBe('bad-color');
  });

  it('flags prerequisite boxes without type or terms', () => {
    expect(validateFragment('%PREREQ(P3) graphs')[0]?.code).toBe('bad-prereq-type');
    expect(validateFragment('%PREREQ(P1) ')[0]?.code).toBe('empty-prereq-box');
  });

  it('flags malformed related ids', () => {
    expect(validateFragment('%REL nope')[0]?.code).toBe('bad-related-id');
    expect(validateFragment('%REL ACGT-000004')).toEqual([]);
  });

  it('flags bad continuation indentation', () => {
    const findings = validateFragment('%DEF a\n  b\n');
    expect(findings[0]).toMatchObject({ code: 'bad-indent', line: 2 });
  });

  it('flags duplicated scalars and empty payloads', () => {
    expect(validateFragment('%HIST a\n%HIST b\n')[0]?.code).toBe('duplicate-scalar');
    expect(validateFragment('\n\n')[0]?.code).toBe('empty-fragment');
  });

  it('flags args on tags that take none', () => {
    expect(validateFragment('%DEF(x) text')[0]?.code).toBe('unexpected-arg');
  });
});

describe('validateNewPage', () => {
  const full =
    '%ID ACGT-000050\n%TITLE Ladders\n%KIND graph-class\n%DEF rungs and rails.\n%STATUS Draft\n';

  it('accepts a complete proposal', () => {
    expect(validateNewPage(full)).toEqual([]);
  });

  it('requires identity tags', () => {
    const codes = validateNewPage('%TITLE t\n%DEF d\n').map((f) => f.code);
    expect(codes).toContain('missing-tag');
  });
});
