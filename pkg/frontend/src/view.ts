/**
 * DOM rendering. Every number shown here is read straight from the result
 * document; the client computes nothing metrical itself.
 */

import type { PadaDoc, ResultDoc, SuggestionDoc, Question } from "./api.js";
import type { WorkbenchState } from "./state.js";

function el(tag: string, className?: string, text?: string): HTMLElement {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function renderPada(
  pada: PadaDoc,
  index: number,
  highlight: { pada: number; syllable: number } | null,
): HTMLElement {
  const row = el("div", "pada");
  const line = el("div", "pada-text");
  let cursor = 0;
  pada.syllables.forEach((syl, sIdx) => {
    if (syl.start > cursor) {
      line.appendChild(document.createTextNode(pada.text.slice(cursor, syl.start)));
    }
    const cls = syl.optional ? "syl optional" : syl.weight === "g" ? "syl guru" : "syl laghu";
    const span = el("span", cls, pada.text.slice(syl.start, syl.end));
    span.title = `${syl.text}: ${syl.optional ? "optional" : syl.weight === "g" ? "guru" : "laghu"}`;
    if (highlight && highlight.pada === index + 1 && highlight.syllable === sIdx + 1) {
      span.classList.add("flagged");
    }
    line.appendChild(span);
    cursor = syl.end;
  });
  if (cursor < pada.text.length) {
    line.appendChild(document.createTextNode(pada.text.slice(cursor)));
  }
  row.appendChild(line);
  const meta = el("div", "pada-meta", pada.pattern_grouped + (pada.ganas ? `   [${pada.ganas}]` : ""));
  row.appendChild(meta);
  return row;
}

export function renderQuestions(
  container: HTMLElement,
  questions: Question[],
  onAnswer: (q: Question, dual: boolean) => void,
): void {
  container.replaceChildren();
  for (const q of questions) {
    const card = el("div", "card question");
    card.appendChild(el("p", "question-text", q.question));
    const yes = el("button", "btn", "yes, dual");
    const no = el("button", "btn", "no");
    yes.addEventListener("click", () => onAnswer(q, true));
    no.addEventListener("click", () => onAnswer(q, false));
    const actions = el("div", "actions");
    actions.append(yes, no);
    card.appendChild(actions);
    container.appendChild(card);
  }
}

export function renderSuggestions(
  container: HTMLElement,
  suggestions: SuggestionDoc[],
  onApply: (s: SuggestionDoc) => void,
): void {
  container.replaceChildren();
  for (const s of suggestions) {
    const card = el("div", `card suggestion ${s.kind}`);
    card.appendChild(el("span", "kind", s.kind));
    card.appendChild(el("p", "detail", s.detail));
    const button = el(
      "button",
      "btn",
      s.kind === "syllable-flip-hint" ? "show me" : "apply to draft",
    );
    button.addEventListener("click", () => onApply(s));
    card.appendChild(button);
    container.appendChild(card);
  }
}

export function renderBand(container: HTMLElement, doc: ResultDoc): void {
  const band = doc.band;
  container.replaceChildren();
  container.appendChild(el("h3", undefined, "syllable band"));
  const dl = el("dl");
  const rows: [string, string][] = [
    ["Max / Min", `${band.max_syllables} / ${band.min_syllables}`],
    ["word classes", `n1=${band.n1} n2=${band.n2} n3=${band.n3} n5=${band.n5} n7=${band.n7}`],
    ["reductions", `r1=${band.r1} r2=${band.r2} r3=${band.r3} → r=${band.r}`],
    ["catalog", `${doc.catalog.entries_in_band} of ${doc.catalog.entries_total} entries in band`],
    ["orders tried", String(doc.permutations_tried)],
  ];
  if (band.r !== band.r_combined) {
    rows.push(["one-shot formula", `${band.r_combined} (${band.formula_note ?? "differs"})`]);
  }
  for (const [k, v] of rows) {
    dl.appendChild(el("dt", undefined, k));
    dl.appendChild(el("dd", undefined, v));
  }
  container.appendChild(dl);
}

export function renderResult(
  container: HTMLElement,
  state: WorkbenchState,
  onApply: (s: SuggestionDoc) => void,
): void {
  container.replaceChildren();
  const doc = state.result;
  if (!doc) return;

  const status = el("div", `status ${doc.status}`);
  if (doc.metre) {
    const tag = doc.metre.exact ? "exact" : `closest, distance ${doc.metre.distance}`;
    status.textContent = `${doc.metre.name} (${tag})`;
  } else {
    status.textContent = "no metre found";
  }
  container.appendChild(status);

  container.appendChild(el("div", "prose-sandhi", `with junctions: ${doc.prose.text}`));

  if (doc.verse) {
    const versePanel = el("div", "verse");
    doc.verse.padas.forEach((pada, i) => versePanel.appendChild(renderPada(pada, i, state.highlight)));
    container.appendChild(versePanel);
  }

  const suggestions = el("div", "suggestions");
  renderSuggestions(suggestions, doc.suggestions, onApply);
  container.appendChild(suggestions);
}

export function renderHistory(container: HTMLElement, history: string[], onPick: (d: string) => void): void {
  container.replaceChildren();
  if (!history.length) return;
  container.appendChild(el("h3", undefined, "draft history"));
  for (const draft of [...history].reverse()) {
    const item = el("button", "history-item", draft);
    item.addEventListener("click", () => onPick(draft));
    container.appendChild(item);
  }
}
