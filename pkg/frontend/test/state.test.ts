import assert from "node:assert/strict";
import { test } from "node:test";

import type { SessionView, SuggestionDoc } from "../src/api.js";
import {
  applySuggestion,
  canSubmit,
  editDraft,
  failed,
  initialState,
  sessionUpdated,
  staleSession,
  submitting,
} from "../src/state.js";

const QUESTION = { left: "phale", right: "atra", question: "Is 'phale' a dual-number form?" };

function awaitingView(): SessionView {
  return {
    session_id: "s1",
    state: "awaiting-answers",
    pending_questions: [QUESTION],
    result: null,
  };
}

test("submit disabled on empty draft", () => {
  const state = initialState();
  assert.equal(canSubmit(state), false);
  assert.equal(canSubmit(editDraft(state, "phale atra")), true);
  assert.equal(canSubmit(editDraft(state, "   ")), false);
});

test("submission records history and session answers render questions", () => {
  let state = editDraft(initialState(), "phale atra");
  state = submitting(state);
  assert.deepEqual(state.history, ["phale atra"]);
  state = sessionUpdated(state, awaitingView());
  assert.equal(state.phase, "awaiting-answers");
  assert.equal(state.questions.length, 1);
  assert.equal(state.sessionId, "s1");
});

test("resubmitting an unchanged draft does not duplicate history", () => {
  let state = editDraft(initialState(), "phale atra");
  state = submitting(state);
  state = submitting(state);
  assert.deepEqual(state.history, ["phale atra"]);
});

test("failure keeps the draft and shows a banner", () => {
  let state = editDraft(initialState(), "phale atra");
  state = submitting(state);
  state = failed(state, "service unreachable");
  assert.equal(state.draft, "phale atra");
  assert.match(state.banner ?? "", /unreachable/);
});

test("stale session prompts a resubmit", () => {
  let state = sessionUpdated(editDraft(initialState(), "x"), awaitingView());
  state = staleSession(state, "unknown session");
  assert.equal(state.sessionId, null);
  assert.match(state.banner ?? "", /resubmit/);
});

test("word-swap card exchanges the two words in the draft", () => {
  const card: SuggestionDoc = {
    kind: "word-swap",
    detail: "exchange 'b' and 'd'",
    required_pattern: "",
    swap: ["b", "d"],
    pada: null,
    syllable: null,
  };
  const state = editDraft(initialState(), "a b c d");
  assert.equal(applySuggestion(state, card).draft, "a d c b");
});

test("replace card substitutes via its swap pair", () => {
  const card: SuggestionDoc = {
    kind: "word-replace",
    detail: "use 'd' in place of 'a'",
    required_pattern: "",
    swap: ["a", "d"],
    pada: null,
    syllable: null,
  };
  const state = editDraft(initialState(), "a b c d");
  assert.equal(applySuggestion(state, card).draft, "d b c a");
});

test("flip hint moves the highlight and leaves the draft alone", () => {
  const card: SuggestionDoc = {
    kind: "syllable-flip-hint",
    detail: "quarter 2, syllable 7",
    required_pattern: "l",
    swap: null,
    pada: 2,
    syllable: 7,
  };
  const state = editDraft(initialState(), "a b");
  const next = applySuggestion(state, card);
  assert.equal(next.draft, "a b");
  assert.deepEqual(next.highlight, { pada: 2, syllable: 7 });
});
