/**
 * Workbench state: one active session per tab, a draft the poet keeps
 * editing, and the latest result view. Suggestion cards only ever mutate the
 * draft, never anything on the server.
 */

import type { Question, ResultDoc, SessionView, SuggestionDoc } from "./api.js";

export type Phase = "idle" | "submitting" | "awaiting-answers" | "done" | "error";

export interface WorkbenchState {
  draft: string;
  spelledMode: boolean;
  sessionId: string | null;
  phase: Phase;
  questions: Question[];
  result: ResultDoc | null;
  banner: string | null;
  history: string[];
  highlight: { pada: number; syllable: number } | null;
}

export function initialState(): WorkbenchState {
  return {
    draft: "",
    spelledMode: false,
    sessionId: null,
    phase: "idle",
    questions: [],
    result: null,
    banner: null,
    history: [],
    highlight: null,
  };
}

export function editDraft(state: WorkbenchState, draft: string): WorkbenchState {
  return { ...state, draft, banner: null };
}

export function canSubmit(state: WorkbenchState): boolean {
  return state.draft.trim().length > 0 && state.phase !== "submitting";
}

export function submitting(state: WorkbenchState): WorkbenchState {
  const history =
    state.history[state.history.length - 1] === state.draft
      ? state.history
      : [...state.history, state.draft];
  return { ...state, phase: "submitting", banner: null, highlight: null, history };
}

export function sessionUpdated(state: WorkbenchState, view: SessionView): WorkbenchState {
  return {
    ...state,
    sessionId: view.session_id,
    phase: view.state === "done" ? "done" : "awaiting-answers",
    questions: view.pending_questions,
    result: view.result,
  };
}

/** A failed request keeps the draft untouched and shows a banner. */
export function failed(state: WorkbenchState, message: string): WorkbenchState {
  return { ...state, phase: state.sessionId ? state.phase : "error", banner: message };
}

export function staleSession(state: WorkbenchState, message: string): WorkbenchState {
  return {
    ...state,
    sessionId: null,
    phase: "error",
    questions: [],
    banner: `${message} — resubmit the draft`,
  };
}

function swapWords(draft: string, a: string, b: string): string {
  const tokens = draft.split(/\s+/).filter((t) => t.length > 0);
  const ia = tokens.indexOf(a);
  const ib = tokens.indexOf(b);
  if (ia === -1 || ib === -1 || ia === ib) return draft;
  [tokens[ia], tokens[ib]] = [tokens[ib]!, tokens[ia]!];
  return tokens.join(" ");
}

/**
 * Apply one suggestion card. Swap and replace cards edit the draft text;
 * flip hints only move the highlight.
 */
export function applySuggestion(state: WorkbenchState, s: SuggestionDoc): WorkbenchState {
  if (s.kind === "syllable-flip-hint") {
    if (s.pada !== null && s.syllable !== null) {
      return { ...state, highlight: { pada: s.pada, syllable: s.syllable } };
    }
    return state;
  }
  if (s.swap) {
    const [a, b] = s.swap;
    return { ...state, draft: swapWords(state.draft, a, b) };
  }
  return state;
}
