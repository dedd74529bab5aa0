/**
 * Typed client for the composition session service.
 *
 * The shapes below mirror the service's report schema (schema_version 1);
 * the workbench displays these values verbatim and never recomputes them.
 */

export interface Question {
  left: string;
  right: string;
  question: string;
}

export interface SyllableDoc {
  text: string;
  weight: "l" | "g";
  optional: boolean;
  start: number;
  end: number;
}

export interface PadaDoc {
  text: string;
  pattern: string;
  pattern_grouped: string;
  resolved_pattern: string | null;
  ganas: string | null;
  syllables: SyllableDoc[];
}

export interface TraceEntry {
  left: string;
  right: string;
  rule: string | null;
  effect: string;
  merged: boolean;
  pragrhya?: { question: string | null; dual: boolean | null };
}

export interface BandDoc {
  max_syllables: number;
  min_syllables: number;
  n1: number;
  n2: number;
  n3: number;
  n5: number;
  n7: number;
  r1: number;
  r2: number;
  r3: number;
  r: number;
  r_combined: number;
  formula_note: string | null;
}

export interface SuggestionDoc {
  kind: "word-swap" | "word-replace" | "syllable-flip-hint";
  detail: string;
  required_pattern: string;
  swap: [string, string] | null;
  pada: number | null;
  syllable: number | null;
}

export interface ResultDoc {
  schema_version: number;
  status: "matched" | "closest-only" | "needs-input";
  input: { words: string[]; source_mode: string };
  band: BandDoc;
  catalog: { entries_total: number; entries_in_band: number };
  permutation: number[];
  permutations_tried: number;
  prose: { text: string; trace: TraceEntry[] };
  verse: { text: string; padas: PadaDoc[] } | null;
  metre: { name: string; family: string; exact: boolean; distance: number } | null;
  sandhi_trace: TraceEntry[];
  suggestions: SuggestionDoc[];
  pending_questions: Question[];
}

export interface SessionView {
  session_id: string;
  state: "awaiting-answers" | "running" | "done";
  pending_questions: Question[];
  result: ResultDoc | null;
}

export class ServiceError extends Error {
  constructor(message: string, readonly status: number) {
    super(message);
  }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  let response: Response;
  try {
    response = await fetch(url, init);
  } catch (err) {
    throw new ServiceError(`service unreachable: ${String(err)}`, 0);
  }
  const body = (await response.json()) as T & { error?: string };
  if (!response.ok) {
    throw new ServiceError(body.error ?? `HTTP ${response.status}`, response.status);
  }
  return body;
}

export class ApiClient {
  constructor(readonly base: string) {}

  createSession(prose: string, spelled = false, maxPermutations?: number): Promise<SessionView> {
    const payload: Record<string, unknown> = { prose, spelled };
    if (maxPermutations !== undefined) payload.max_permutations = maxPermutations;
    return request<SessionView>(`${this.base}/sessions`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(payload),
    });
  }

  answer(sessionId: string, left: string, right: string, dual: boolean): Promise<SessionView> {
    return request<SessionView>(`${this.base}/sessions/${sessionId}/answers`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ left, right, dual }),
    });
  }

  getSession(sessionId: string): Promise<SessionView> {
    return request<SessionView>(`${this.base}/sessions/${sessionId}`);
  }

  scan(text: string): Promise<{ padas: PadaDoc[]; metre: ResultDoc["metre"] }> {
    return request(`${this.base}/scan`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ text }),
    });
  }
}
