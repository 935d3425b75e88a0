// Pure HTML renderers. Every view is a function of API response data; no
// state lives here, which keeps the renderers trivially testable.

import type {
  Page,
  PageSummary,
  RelevanceInfo,
  SearchHit,
  StudentLog,
  Submission,
} from './types.js';
import type { Finding } from './validation.js';

export function escapeHtml(text: string): string {
  return text
    .replaceAll('&', '&amp;')
    .replaceAll('<', '&lt;')
    .replaceAll('>', '&gt;')
    .replaceAll('"', '&quot;');
}

function multiline(text: string): string {
  return escapeHtml(text).replaceAll('\n', '<br>');
}

export function renderBanner(kind: 'error' | 'info', message: string): string {
  return `<div class="banner ${kind}">${escapeHtml(message)}</div>`;
}

export function renderRelevanceBadge(info: RelevanceInfo): string {
  const percent = Math.round(info.relevance_float * 100);
  return `<span class="badge relevance" title="degree of relevance to the syllabus">relevance ${escapeHtml(info.relevance)} (${percent}%)</span>`;
}

export function renderPage(page: Page, relevance?: RelevanceInfo): string {
  const pageColor = page.color ? ` page-${page.color}` : '';
  const properties = page.properties
    .map((p) => {
      const colorClass = p.color ?? 'uncolored';
      const chip = p.color ? `<span class="chip ${p.color}">${p.color}</span>` : '';
      return `<li class="prop ${colorClass}">${multiline(p.text)} ${chip}</li>`;
    })
    .join('');
  const constructions = page.constructions
    .map((c) => {
      const binding = c.binding
        ? ` <code class="binding">${escapeHtml(c.binding.family)}(${c.binding.params.join(', ')})</code>`
        : '';
      return `<li>${multiline(c.text)}${binding}</li>`;
    })
    .join('');
  const related = page.related
    .map((id) => `<a class="related" href="#/pages/${encodeURIComponent(id)}">${escapeHtml(id)}</a>`)
    .join(' ');
  const more = page.more_to_explore
    .map((r) =>
      r.url
        ? `<li><a href="${escapeHtml(r.url)}" rel="noopener">${multiline(r.text)}</a></li>`
        : `<li>${multiline(r.text)}</li>`,
    )
    .join('');
  const remarks = page.remarks
    .map((r) => `<li><strong>${escapeHtml(r.author)}:</strong> ${multiline(r.text)}</li>`)
    .join('');
  const boxes = page.prereq_boxes
    .map((box) => {
      const terms = box.terms
        .map((t) => `<li><a href="#/terms/${encodeURIComponent(t)}">${escapeHtml(t)}</a></li>`)
        .join('');
      return `<details class="prereq-box type-${box.declared_type}">
        <summary>Prerequisites (${box.declared_type})</summary>
        <ul>${terms}</ul>
      </details>`;
    })
    .join('');
  const computed = page.computed
    .map(([k, v]) => `<tr><td>${escapeHtml(k)}</td><td>${escapeHtml(v)}</td></tr>`)
    .join('');
  return `<article class="page${pageColor}" data-page-id="${escapeHtml(page.id)}">
    <header>
      <h2>${escapeHtml(page.title)}</h2>
      <span class="badge kind">${escapeHtml(page.kind)}</span>
      <span class="badge status">${escapeHtml(page.status)}</span>
      ${relevance ? renderRelevanceBadge(relevance) : ''}
    </header>
    <section class="definition">${multiline(page.definition)}</section>
    ${constructions ? `<h3>Constructions</h3><ul class="constructions">${constructions}</ul>` : ''}
    ${properties ? `<h3>Properties</h3><ul class="properties">${properties}</ul>` : ''}
    ${boxes ? `<h3>Prerequisite boxes</h3>${boxes}` : ''}
    ${related ? `<h3>Related</h3><p>${related}</p>` : ''}
    ${more ? `<h3>More to explore</h3><ul class="more">${more}</ul>` : ''}
    ${page.historical_notes ? `<h3>Historical notes</h3><p>${multiline(page.historical_notes)}</p>` : ''}
    ${remarks ? `<h3>Remarks</h3><ul class="remarks">${remarks}</ul>` : ''}
    ${computed ? `<h3>Verified values</h3><table class="computed">${computed}</table>` : ''}
  </article>`;
}

export function renderPageList(pages: PageSummary[]): string {
  const rows = pages
    .map(
      (p) => `<li><a href="#/pages/${encodeURIComponent(p.id)}">${escapeHtml(p.id)}</a>
        ${escapeHtml(p.title)} <span class="badge kind">${escapeHtml(p.kind)}</span></li>`,
    )
    .join('');
  return `<ul class="page-list">${rows}</ul>`;
}

export function renderSearchResults(hits: SearchHit[], titles: Map<string, string>): string {
  if (hits.length === 0) return '<p class="empty">No pages match.</p>';
  const rows = hits
    .map(
      (hit) => `<li>
        <a href="#/pages/${encodeURIComponent(hit.id)}">${escapeHtml(titles.get(hit.id) ?? hit.id)}</a>
        <span class="score">${hit.score}</span>
      </li>`,
    )
    .join('');
  return `<ol class="search-results">${rows}</ol>`;
}

const ACTIONS_BY_STATE: Record<string, string[]> = {
  Submitted: ['start'],
  InReview: ['request-changes', 'approve', 'reject'],
  Approved: ['publish'],
};

export function renderQueue(submissions: Submission[], currentFilter: string): string {
  const filters = ['', 'Submitted', 'InReview', 'ChangesRequested', 'Approved', 'Rejected', 'Published']
    .map((state) => {
      const label = state === '' ? 'all' : state;
      const selected = state === currentFilter ? ' class="selected"' : '';
      return `<a href="#/queue/${state}"${selected}>${label}</a>`;
    })
    .join(' ');
  const rows = submissions
    .map((sub) => {
      const actions = (ACTIONS_BY_STATE[sub.state] ?? [])
        .map(
          (action) =>
            `<button data-submission="${escapeHtml(sub.id)}" data-action="${action}">${action}</button>`,
        )
        .join(' ');
      const target = sub.target.page_id
        ? `${escapeHtml(sub.target.page_id)}${sub.target.attribute ? '#' + escapeHtml(sub.target.attribute) : ''}`
        : 'new page';
      return `<tr data-submission-row="${escapeHtml(sub.id)}">
        <td>${escapeHtml(sub.id)}</td>
        <td>${escapeHtml(sub.author)}</td>
        <td>${target}</td>
        <td class="state state-${sub.state}">${sub.state}</td>
        <td>${actions}</td>
      </tr>`;
    })
    .join('');
  return `<div class="queue">
    <nav class="filters">${filters}</nav>
    <table class="submissions">
      <thead><tr><th>id</th><th>author</th><th>target</th><th>state</th><th>actions</th></tr></thead>
      <tbody>${rows}</tbody>
    </table>
  </div>`;
}

export function renderFindings(findings: Finding[]): string {
  if (findings.length === 0) return '<p class="ok">Payload looks publishable.</p>';
  const rows = findings
    .map((f) => `<li class="finding">line ${f.line}: <code>${escapeHtml(f.code)}</code> ${escapeHtml(f.detail)}</li>`)
    .join('');
  return `<ul class="findings">${rows}</ul>`;
}

export function renderDashboard(log: StudentLog): string {
  const pending = log.group_pending_confirmation
    ? '<span class="badge pending">group change awaiting instructor confirmation</span>'
    : '';
  const entries = log.entries
    .map(
      (e) => `<tr>
        <td>${escapeHtml(e.submission_id)}</td>
        <td class="outcome-${escapeHtml(e.outcome)}">${escapeHtml(e.outcome)}</td>
        <td>${e.page_id ? `<a href="#/pages/${encodeURIComponent(e.page_id)}">${escapeHtml(e.page_id)}</a>` : '-'}</td>
        <td>${escapeHtml(e.timestamp)}</td>
      </tr>`,
    )
    .join('');
  const counts = Object.entries(log.counts)
    .map(([outcome, n]) => `${escapeHtml(outcome)}: ${n}`)
    .join(', ');
  return `<section class="dashboard">
    <h2>${escapeHtml(log.name)} <span class="badge">T=${escapeHtml(log.t)}</span>
      <span class="badge">group ${log.group}</span> ${pending}</h2>
    <p class="counts">${counts || 'no contributions yet'}</p>
    <table class="log">
      <thead><tr><th>submission</th><th>outcome</th><th>page</th><th>when</th></tr></thead>
      <tbody>${entries}</tbody>
    </table>
  </section>`;
}
