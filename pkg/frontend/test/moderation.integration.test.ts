// Full moderation round trip against a real service instance, driven through
// the same client, validation, and renderer code the browser app uses.
// Requires the Python package to be installed (the `cgtportal` CLI).

import { afterAll, beforeAll, describe, expect, it } from 'vitest';
import { spawn, type ChildProcess } from 'node:child_process';
import { mkdtempSync } from 'node:fs';
import { tmpdir } from 'node:os';
import { join } from 'node:path';

import { ApiClient, ApiError } from '../src/api.js';
import { validateFragment } from '../src/validation.js';
import { renderPage, renderQueue } from '../src/views.js';

const PORT = 8765 + Math.floor(Math.random() * 400);
const BASE = `http://127.0.0.1:${PORT}`;

let server: ChildProcess;

async function waitForHealth(): Promise<void> {
  for (let attempt = 0; attempt < 100; attempt++) {
    try {
      const response = await fetch(`${BASE}/health`);
      if (response.ok) return;
    } catch {
      // not up yet
    }
    await new Promise((resolve) => setTimeout(resolve, 150));
  }
  throw new Error('service did not come up');
}

beforeAll(async () => {
  const dataDir = mkdtempSync(join(tmpdir(), 'cgtportal-ui-test-'));
  await new Promise<void>((resolve, reject) => {
    const seed = spawn('cgtportal', ['seed', '--data-dir', dataDir], { stdio: 'inherit' });
    seed.on('exit', (code) => (code === 0 ? resolve() : reject(new Error(`seed exited ${code}`))));
    seed.on('error', reject);
  });
  server = spawn(
    'cgtportal',
    ['serve', '--data-dir', dataDir, '--host', '127.0.0.1', '--port', String(PORT)],
    { stdio: 'ignore' },
  );
  await waitForHealth();
}, 30000);

afterAll(() => {
  server?.kill('SIGKILL');
});

describe('moderation queue round trip through the UI code paths', () => {
  const student = new ApiClient(BASE, 'dev-student-s1');
  const moderator = new ApiClient(BASE, 'dev-moderator');

  it('submit, start, approve, publish yields a Published page whose rendered properties carry the color codes', async () => {
    const payload = '%PROP(outside-course) Chromatic polynomials appear in a later course.';
    // the composer validates before submitting
    expect(validateFragment(payload)).toEqual([]);
    const submission = await student.createSubmission(
      { page_id: 'ACGT-000001', attribute: 'properties' },
      payload,
    );
    expect(submission.state).toBe('Submitted');

    // the queue renders the item with its legal next action
    let queue = await moderator.listSubmissions();
    let html = renderQueue(queue.submissions, '');
    expect(html).toContain(submission.id);
    expect(html).toContain('data-action="start"');

    await moderator.review(submission.id, 'start');
    await moderator.review(submission.id, 'approve');
    const published = await moderator.publish(submission.id);
    expect(published.state).toBe('Published');

    const page = await student.getPage('ACGT-000001');
    const rendered = renderPage(page);
    expect(rendered).toContain('Chromatic polynomials appear in a later course.');
    const lastProperty = page.properties[page.properties.length - 1]!;
    expect(lastProperty.color).toBe('outside-course');
    expect(rendered).toContain('class="prop outside-course"');

    // the student dashboard shows the credited contribution
    const log = await student.studentLog('s1');
    expect(log.counts['published']).toBeGreaterThanOrEqual(1);
  });

  it('approving before starting review surfaces the 409 reason verbatim', async () => {
    const submission = await student.createSubmission(
      { page_id: 'ACGT-000002', attribute: null },
      '%HIST Gears predate wheels in the exercise sheet.',
    );
    const failure = await moderator.review(submission.id, 'approve').then(
      () => null,
      (err) => err as ApiError,
    );
    expect(failure).toBeInstanceOf(ApiError);
    expect(failure!.status).toBe(409);
    expect(failure!.reason).toBe('illegal-transition');
  });

  it('bypassing client validation cannot publish an invalid payload: the server rejects it', async () => {
    const invalid = '%REL ACGT-999999'; // dangling related id
    // client-side validation would not flag a well-formed REL line...
    expect(validateFragment(invalid)).toEqual([]);
    // ...and an outright broken one would be flagged, but we skip the check
    // entirely and push straight to the server
    const submission = await student.createSubmission(
      { page_id: 'ACGT-000001', attribute: null },
      invalid,
    );
    await moderator.review(submission.id, 'start');
    await moderator.review(submission.id, 'approve');
    const failure = await moderator.publish(submission.id).then(
      () => null,
      (err) => err as ApiError,
    );
    expect(failure).toBeInstanceOf(ApiError);
    expect(failure!.status).toBe(400);
    expect(failure!.reason).toBe('validation-failed');
    // the page did not change and the submission stayed Approved
    const after = await moderator.getSubmission(submission.id);
    expect(after.state).toBe('Approved');
    expect(after.history[after.history.length - 1]!.action).toBe('publish-failed');
  });

  it('a syntactically broken payload is refused outright (400 parse-error)', async () => {
    const broken = '%ZZ not a tag';
    expect(validateFragment(broken).map((f) => f.code)).toContain('unknown-tag');
    const submission = await student.createSubmission(
      { page_id: 'ACGT-000001', attribute: null },
      broken,
    );
    await moderator.review(submission.id, 'start');
    await moderator.review(submission.id, 'approve');
    const failure = await moderator.publish(submission.id).then(
      () => null,
      (err) => err as ApiError,
    );
    expect(failure!.status).toBe(400);
    expect(failure!.reason).toBe('parse-error');
  });

  it('server-side role gates hold regardless of what the client renders', async () => {
    const failure = await student.listSubmissions().then(
      () => null,
      (err) => err as ApiError,
    );
    expect(failure!.status).toBe(403);
    expect(failure!.reason).toBe('forbidden-role');
  });
});
