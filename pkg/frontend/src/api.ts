// Thin typed client over the service HTTP API. The UI holds no authoritative
// state: every view is re-derived from these responses.

import type {
  Page,
  PageSummary,
  Principal,
  RelevanceInfo,
  ReviewAction,
  SearchHit,
  StudentLog,
  Submission,
  SubmissionState,
  SubmissionTarget,
} from './types.js';

export class ApiError extends Error {
  constructor(
    public status: number,
    public reason: string,
    public detail: string,
  ) {
    super(`${status} ${reason}: ${detail}`);
  }
}

export class ApiClient {
  constructor(
    private baseUrl: string,
    private token: string,
  ) {}

  setToken(token: string): void {
    this.token = token;
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const headers: Record<string, string> = {};
    if (this.token) headers['Authorization'] = `Bearer ${this.token}`;
    if (body !== undefined) headers['Content-Type'] = 'application/json';
    const response = await fetch(this.baseUrl + path, {
      method,
      headers,
      body: body !== undefined ? JSON.stringify(body) : undefined,
    });
    const text = await response.text();
    const data = text ? JSON.parse(text) : null;
    if (!response.ok) {
      const reason = data?.error ?? 'error';
      const detail = data?.detail ?? response.statusText;
      throw new ApiError(response.status, reason, detail);
    }
    return data as T;
  }

  health(): Promise<{ status: string }> {
    return this.request('GET', '/health');
  }

  whoami(): Promise<Principal> {
    return this.request('GET', '/whoami');
  }

  listPages(): Promise<{ pages: PageSummary[] }> {
    return this.request('GET', '/pages');
  }

  getPage(id: string): Promise<Page> {
    return this.request('GET', `/pages/${encodeURIComponent(id)}`);
  }

  search(q: string): Promise<{ query: string; results: SearchHit[] }> {
    return this.request('GET', `/search?q=${encodeURIComponent(q)}`);
  }

  backlinks(term: string): Promise<{ term: string; pages: string[] }> {
    return this.request('GET', `/terms/${encodeURIComponent(term)}/backlinks`);
  }

  relevance(id: string): Promise<RelevanceInfo> {
    return this.request('GET', `/pages/${encodeURIComponent(id)}/relevance`);
  }

  createSubmission(target: SubmissionTarget | null, payload: string): Promise<Submission> {
    return this.request('POST', '/submissions', { target, payload });
  }

  listSubmissions(state?: SubmissionState): Promise<{ submissions: Submission[] }> {
    const query = state ? `?state=${encodeURIComponent(state)}` : '';
    return this.request('GET', `/submissions${query}`);
  }

  getSubmission(id: string): Promise<Submission> {
    return this.request('GET', `/submissions/${encodeURIComponent(id)}`);
  }

  review(id: string, action: ReviewAction, note = ''): Promise<Submission> {
    return this.request('POST', `/submissions/${encodeURIComponent(id)}/review`, { action, note });
  }

  resubmit(id: string, payload: string): Promise<Submission> {
    return this.request('POST', `/submissions/${encodeURIComponent(id)}/resubmit`, { payload });
  }

  publish(id: string): Promise<Submission> {
    return this.request('POST', `/submissions/${encodeURIComponent(id)}/publish`, {});
  }

  studentLog(id: string): Promise<StudentLog> {
    return this.request('GET', `/students/${encodeURIComponent(id)}/log`);
  }

  loadRoster(text: string): Promise<{ loaded: number }> {
    return this.request('POST', '/roster', { text });
  }

  planExercises(
    percentages: [string, string, string],
    total: number,
  ): Promise<{ total: number; counts: Record<string, number>; rendered: string }> {
    return this.request('POST', '/plan/exercises', { percentages, total });
  }

  verifySequence(maxN = 17, bruteMax = 6): Promise<{ all_ok: boolean; rendered: string }> {
    return this.request('GET', `/compute/verify-a136328?max_n=${maxN}&brute_max=${bruteMax}`);
  }

  computeWiener(family: string, params: number[]): Promise<{ wiener: string }> {
    const csv = params.join(',');
    return this.request('GET', `/compute/wiener?family=${encodeURIComponent(family)}&params=${csv}`);
  }
}
