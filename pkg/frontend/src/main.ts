/** Wire the workbench: draft box, spelled-letter preview, questions, result. */

import { ApiClient, ServiceError, type Question, type SuggestionDoc } from "./api.js";
import { decodeSpelled, parseSpelledStream, SpelledTokenError } from "./spelled.js";
import {
  applySuggestion,
  canSubmit,
  editDraft,
  failed,
  initialState,
  sessionUpdated,
  staleSession,
  submitting,
  type WorkbenchState,
} from "./state.js";
import { renderBand, renderHistory, renderQuestions, renderResult } from "./view.js";

const HISTORY_KEY = "padyakara-draft-history";

function byId<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

function serviceBase(): string {
  const params = new URLSearchParams(window.location.search);
  return params.get("service") ?? "http://127.0.0.1:8075";
}

function main(): void {
  const api = new ApiClient(serviceBase());
  let state: WorkbenchState = initialState();
  try {
    state.history = JSON.parse(sessionStorage.getItem(HISTORY_KEY) ?? "[]");
  } catch {
    state.history = [];
  }

  const draftBox = byId<HTMLTextAreaElement>("draft");
  const spelledToggle = byId<HTMLInputElement>("spelled");
  const preview = byId<HTMLDivElement>("preview");
  const submitButton = byId<HTMLButtonElement>("submit");
  const banner = byId<HTMLDivElement>("banner");
  const questionPanel = byId<HTMLDivElement>("questions");
  const resultPanel = byId<HTMLDivElement>("result");
  const bandPanel = byId<HTMLDivElement>("band");
  const historyPanel = byId<HTMLDivElement>("history");

  function redraw(): void {
    submitButton.disabled = !canSubmit(state);
    banner.textContent = state.banner ?? "";
    banner.hidden = !state.banner;
    draftBox.value = state.draft;
    preview.hidden = !state.spelledMode;
    if (state.spelledMode) {
      try {
        preview.textContent = decodeSpelled(parseSpelledStream(state.draft));
        preview.classList.remove("invalid");
      } catch (err) {
        if (err instanceof SpelledTokenError) {
          preview.textContent = err.message;
          preview.classList.add("invalid");
        }
      }
    }
    renderQuestions(questionPanel, state.phase === "awaiting-answers" ? state.questions : [], onAnswer);
    renderResult(resultPanel, state, onApply);
    if (state.result) renderBand(bandPanel, state.result);
    else bandPanel.replaceChildren();
    renderHistory(historyPanel, state.history, (draft) => {
      state = editDraft(state, draft);
      redraw();
    });
    sessionStorage.setItem(HISTORY_KEY, JSON.stringify(state.history));
  }

  async function onSubmit(): Promise<void> {
    if (!canSubmit(state)) return;
    state = submitting(state);
    redraw();
    try {
      const view = await api.createSession(state.draft, state.spelledMode);
      state = sessionUpdated(state, view);
    } catch (err) {
      state = failed(state, err instanceof Error ? err.message : String(err));
    }
    redraw();
  }

  async function onAnswer(q: Question, dual: boolean): Promise<void> {
    if (!state.sessionId) return;
    try {
      const view = await api.answer(state.sessionId, q.left, q.right, dual);
      state = sessionUpdated(state, view);
    } catch (err) {
      if (err instanceof ServiceError && err.status === 404) {
        state = staleSession(state, err.message);
      } else {
        state = failed(state, err instanceof Error ? err.message : String(err));
      }
    }
    redraw();
  }

  function onApply(s: SuggestionDoc): void {
    state = applySuggestion(state, s);
    redraw();
  }

  draftBox.addEventListener("input", () => {
    state = editDraft(state, draftBox.value);
    submitButton.disabled = !canSubmit(state);
    redraw();
  });
  spelledToggle.addEventListener("change", () => {
    state = { ...state, spelledMode: spelledToggle.checked };
    redraw();
  });
  submitButton.addEventListener("click", () => void onSubmit());

  redraw();
}

document.addEventListener("DOMContentLoaded", main);
