// API data shapes, mirroring docs/api.md. Big numeric values arrive as
// decimal strings and are kept that way.

export type Role = 'student' | 'instructor' | 'moderator' | 'admin';

export type ColorCode = 'in-course' | 'outside-course';

export interface Principal {
  id: string;
  role: Role;
  courses: string[];
}

export interface PageSummary {
  id: string;
  title: string;
  kind: string;
  status: string;
}

export interface FamilyBinding {
  family: string;
  params: number[];
}

export interface Construction {
  text: string;
  binding: FamilyBinding | null;
}

export interface PageProperty {
  text: string;
  color: ColorCode | null;
}

export interface MoreRef {
  text: string;
  url: string | null;
}

export interface Remark {
  author: string;
  text: string;
}

export interface PrereqBox {
  terms: string[];
  declared_type: 'P1' | 'P2';
}

export interface Page {
  id: string;
  title: string;
  kind: string;
  definition: string;
  figures: string[];
  constructions: Construction[];
  properties: PageProperty[];
  related: string[];
  more_to_explore: MoreRef[];
  historical_notes: string;
  remarks: Remark[];
  prereq_boxes: PrereqBox[];
  color: ColorCode | null;
  prereq_courses: string[];
  computed: [string, string][];
  status: string;
  fielded: string;
}

export type SubmissionState =
  | 'Submitted'
  | 'InReview'
  | 'ChangesRequested'
  | 'Approved'
  | 'Rejected'
  | 'Published';

export interface SubmissionTarget {
  page_id: string | null;
  attribute: string | null;
}

export interface HistoryEntry {
  actor: string;
  role: string;
  action: string;
  timestamp: string;
  note: string;
}

export interface Submission {
  id: string;
  author: string;
  target: SubmissionTarget;
  payload: string;
  state: SubmissionState;
  history: HistoryEntry[];
}

export interface SearchHit {
  id: string;
  score: number;
}

export interface RelevanceInfo {
  id: string;
  relevance: string;
  relevance_float: number;
}

export interface LogEntry {
  submission_id: string;
  outcome: string;
  page_id: string | null;
  timestamp: string;
}

export interface StudentLog {
  id: string;
  name: string;
  t: string;
  group: number;
  group_pending_confirmation: boolean;
  entries: LogEntry[];
  counts: Record<string, number>;
}

export type ReviewAction = 'start' | 'request-changes' | 'approve' | 'reject';
