// Browser entry point: hash routing plus event wiring. All state of record
// lives on the server; this file only moves API responses into the renderers.

import { ApiClient, ApiError } from './api.js';
import type { Principal, ReviewAction, SubmissionState } from './types.js';
import { validateFragment, validateNewPage } from './validation.js';
import {
  renderBanner,
  renderDashboard,
  renderFindings,
  renderPage,
  renderPageList,
  renderQueue,
  renderSearchResults,
} from './views.js';

const api = new ApiClient('', localStorage.getItem('token') ?? '');
let principal: Principal | null = null;

function el(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node;
}

function setBanner(html: string): void {
  el('banner').innerHTML = html;
}

function showError(err: unknown): void {
  if (err instanceof ApiError) {
    setBanner(renderBanner('error', `${err.reason}: ${err.detail}`));
  } else {
    setBanner(renderBanner('error', String(err)));
  }
}

async function refreshPrincipal(): Promise<void> {
  try {
    principal = await api.whoami();
    el('whoami').textContent = `${principal.id} (${principal.role})`;
    // role gates mirror the API; the server remains authoritative
    el('nav-queue').style.display =
      principal.role === 'moderator' || principal.role === 'admin' ? '' : 'none';
    el('nav-dashboard').style.display = principal.role === 'student' ? '' : 'none';
  } catch (err) {
    principal = null;
    el('whoami').textContent = 'not signed in';
    showError(err);
  }
}

// -- routes -------------------------------------------------------------------

async function showHome(): Promise<void> {
  const { pages } = await api.listPages();
  el('content').innerHTML = `<h2>Pages</h2>${renderPageList(pages)}`;
}

async function showPage(id: string): Promise<void> {
  const page = await api.getPage(id);
  let relevance;
  try {
    relevance = await api.relevance(id);
  } catch {
    relevance = undefined; // relevance is decoration; the page still renders
  }
  el('content').innerHTML = renderPage(page, relevance);
}

async function showTerm(term: string): Promise<void> {
  const { pages } = await api.backlinks(term);
  const links = pages
    .map((id) => `<li><a href="#/pages/${encodeURIComponent(id)}">${id}</a></li>`)
    .join('');
  el('content').innerHTML = `<h2>Pages requiring "${term}"</h2><ul>${links || '<li>none</li>'}</ul>`;
}

async function runSearch(q: string): Promise<void> {
  if (!q) {
    el('search-results').innerHTML = '';
    return;
  }
  const [{ results }, { pages }] = await Promise.all([api.search(q), api.listPages()]);
  const titles = new Map(pages.map((p) => [p.id, p.title]));
  el('search-results').innerHTML = renderSearchResults(results, titles);
}

async function showQueue(filter: string): Promise<void> {
  const state = filter === '' ? undefined : (filter as SubmissionState);
  const { submissions } = await api.listSubmissions(state);
  el('content').innerHTML = renderQueue(submissions, filter);
}

async function showDashboard(): Promise<void> {
  if (!principal) throw new ApiError(403, 'forbidden-role', 'sign in first');
  const log = await api.studentLog(principal.id);
  el('content').innerHTML = renderDashboard(log);
}

function showComposer(): void {
  el('content').innerHTML = `<section class="composer">
    <h2>Contribute</h2>
    <label>Target page id (empty for a new-page proposal)
      <input id="compose-page" placeholder="ACGT-000001"></label>
    <label>Attribute (optional, e.g. properties)
      <input id="compose-attr" placeholder=""></label>
    <label>Fielded payload
      <textarea id="compose-payload" rows="10">%PROP(in-course) </textarea></label>
    <div id="compose-findings"></div>
    <button id="compose-check">Check</button>
    <button id="compose-send">Submit</button>
  </section>`;
}

async function route(): Promise<void> {
  setBanner('');
  const hash = location.hash.replace(/^#\/?/, '');
  const [head = '', ...rest] = hash.split('/');
  try {
    if (head === '' || head === 'pages') {
      if (rest.length > 0 && rest[0]) await showPage(decodeURIComponent(rest[0]));
      else await showHome();
    } else if (head === 'terms' && rest[0]) {
      await showTerm(decodeURIComponent(rest[0]));
    } else if (head === 'queue') {
      await showQueue(rest[0] ?? '');
    } else if (head === 'dashboard') {
      await showDashboard();
    } else if (head === 'compose') {
      showComposer();
    } else {
      await showHome();
    }
  } catch (err) {
    showError(err);
  }
}

// -- event wiring ---------------------------------------------------------------

function wire(): void {
  el('token-save').addEventListener('click', async () => {
    const token = (el('token-input') as HTMLInputElement).value.trim();
    localStorage.setItem('token', token);
    api.setToken(token);
    await refreshPrincipal();
    await route();
  });

  let debounce: number | undefined;
  el('search-input').addEventListener('input', (event) => {
    const q = (event.target as HTMLInputElement).value;
    window.clearTimeout(debounce);
    debounce = window.setTimeout(() => {
      runSearch(q).catch(showError);
    }, 250);
  });

  el('content').addEventListener('click', async (event) => {
    const button = (event.target as HTMLElement).closest('button[data-action]');
    if (button) {
      const id = button.getAttribute('data-submission')!;
      const action = button.getAttribute('data-action')!;
      try {
        if (action === 'publish') await api.publish(id);
        else await api.review(id, action as ReviewAction);
        await route(); // reconcile against the server response
      } catch (err) {
        showError(err); // 409 reasons surface verbatim
        await route(); // refresh the stale item
      }
      return;
    }
    const target = event.target as HTMLElement;
    if (target.id === 'compose-check' || target.id === 'compose-send') {
      const pageId = (el('compose-page') as HTMLInputElement).value.trim();
      const attribute = (el('compose-attr') as HTMLInputElement).value.trim();
      const payload = (el('compose-payload') as HTMLTextAreaElement).value;
      const findings = pageId ? validateFragment(payload) : validateNewPage(payload);
      el('compose-findings').innerHTML = renderFindings(findings);
      if (target.id === 'compose-send') {
        if (findings.length > 0) {
          setBanner(renderBanner('error', 'fix the findings above before submitting'));
          return;
        }
        try {
          const submission = await api.createSubmission(
            pageId ? { page_id: pageId, attribute: attribute || null } : null,
            payload,
          );
          setBanner(renderBanner('info', `submitted ${submission.id}`));
        } catch (err) {
          showError(err);
        }
      }
    }
  });

  window.addEventListener('hashchange', () => {
    route().catch(showError);
  });
}

async function start(): Promise<void> {
  wire();
  await refreshPrincipal();
  await route();
}

start().catch(showError);
