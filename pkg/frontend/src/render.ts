// DOM rendering. Dumb by design: reads the view-state selectors and
// writes elements; all interaction goes through the handlers object.

import {
  ConsoleState,
  deltaWords,
  feedbackEnabled,
  rankedCounts,
  showTieBadge,
  traceLines,
  winnerChip,
} from "./state.js";
import type { FieldRef } from "./types.js";

export interface Handlers {
  onSubmit(sentence: string): void;
  onConfirm(): void;
  onCorrect(fieldId: number): void;
  onSuggest(word: string): void;
  onPickSuggestion(word: string, replacement: string): void;
  onToggleTrace(): void;
  onInputChange(text: string): void;
}

function el<K extends keyof HTMLElementTagNameMap>(
  tagName: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tagName);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export function render(
  root: HTMLElement,
  state: ConsoleState,
  fields: FieldRef[],
  handlers: Handlers,
): void {
  root.replaceChildren();

  // input row
  const form = el("div", "input-row");
  const input = el("input");
  input.id = "sentence-input";
  input.placeholder = "Enter a sentence";
  input.value = state.sentenceInput;
  input.addEventListener("input", () => handlers.onInputChange(input.value));
  input.addEventListener("keydown", (event) => {
    if (event.key === "Enter") handlers.onSubmit(input.value);
  });
  const submit = el("button", "primary", "Disambiguate");
  submit.id = "submit";
  submit.addEventListener("click", () => handlers.onSubmit(input.value));
  form.append(input, submit);
  root.append(form);

  if (state.error) {
    root.append(el("div", "message error", state.error));
  }
  if (state.notice) {
    root.append(el("div", "message notice", state.notice));
  }

  if (state.suggestions) {
    const panel = el("div", "suggestions");
    panel.append(el("h3", undefined, `Suggestions for "${state.suggestions.word}"`));
    if (state.suggestions.candidates.length === 0) {
      panel.append(el("div", "empty", "no matches"));
    } else {
      for (const candidate of state.suggestions.candidates) {
        const pick = el("button", "chip", `${candidate.word} (${candidate.distance})`);
        pick.addEventListener("click", () =>
          handlers.onPickSuggestion(state.suggestions!.word, candidate.word),
        );
        panel.append(pick);
      }
    }
    root.append(panel);
  }

  const result = state.result;
  if (result) {
    const card = el("section", "result");

    const tokens = el("div", "tokens");
    for (const token of result.tokens) {
      const chip = el("span", `token ${token.kind}`, token.surface);
      chip.title = token.tag;
      if (token.kind === "content" && result.unknownWords.includes(token.surface.toLowerCase())) {
        chip.classList.add("unknown");
        chip.addEventListener("click", () => handlers.onSuggest(token.surface));
      }
      tokens.append(chip);
    }
    card.append(tokens);

    const winnerRow = el("div", "winner-row");
    const chip = el("span", "winner-chip", winnerChip(result));
    winnerRow.append(chip);
    if (showTieBadge(result)) {
      winnerRow.append(el("span", "tie-badge", `tie of ${result.tied.length}`));
    }
    if (result.unknownWords.length > 0) {
      winnerRow.append(el("span", "unknown-badge", `unknown: ${result.unknownWords.join(", ")}`));
    }
    card.append(winnerRow);

    const countsList = el("ol", "counts");
    for (const row of rankedCounts(result)) {
      countsList.append(el("li", undefined, `${row.field_name}: ${row.count}`));
    }
    card.append(countsList);

    const traceToggle = el("button", "link", state.showRawTrace ? "hide raw trace" : "raw trace");
    traceToggle.addEventListener("click", () => handlers.onToggleTrace());
    card.append(traceToggle);
    if (state.showRawTrace) {
      const pre = el("pre", "trace");
      pre.textContent = traceLines(result).join("\n");
      card.append(pre);
    }

    const controls = el("div", "feedback");
    const confirm = el("button", "primary", "Correct (Y)");
    confirm.id = "confirm";
    confirm.disabled = !feedbackEnabled(result);
    confirm.addEventListener("click", () => handlers.onConfirm());
    const picker = el("select");
    picker.id = "field-picker";
    picker.disabled = !feedbackEnabled(result);
    for (const field of fields) {
      const option = el("option", undefined, field.name);
      option.value = String(field.field_id);
      picker.append(option);
    }
    const correct = el("button", undefined, "Wrong, correct to (N)");
    correct.id = "correct";
    correct.disabled = !feedbackEnabled(result);
    correct.addEventListener("click", () => handlers.onCorrect(Number(picker.value)));
    controls.append(confirm, correct, picker);
    card.append(controls);

    if (result.status !== "pending") {
      const outcome = el("div", "outcome");
      outcome.append(el("div", "status", `session ${result.status}`));
      outcome.append(el("h4", undefined, "Words to be updated:"));
      const list = el("ul", "delta");
      const words = deltaWords(result);
      if (words.length === 0) {
        list.append(el("li", "empty", "nothing new to learn"));
      } else {
        for (const line of words) {
          list.append(el("li", undefined, line));
        }
      }
      outcome.append(list);
      outcome.append(el("div", "new-winner", `The Domain is ${result.newWinner ?? "unknown"}`));
      card.append(outcome);
    }
    root.append(card);
  }

  const historyCard = el("section", "history");
  historyCard.append(el("h3", undefined, "History"));
  const table = el("table");
  const head = el("tr");
  for (const title of ["when", "sentence", "winner", "status"]) {
    head.append(el("th", undefined, title));
  }
  table.append(head);
  for (const session of state.history) {
    const row = el("tr");
    row.append(el("td", "mono", session.timestamp));
    row.append(el("td", undefined, session.sentence));
    row.append(el("td", undefined, session.result.winner ?? "none"));
    row.append(el("td", `status-${session.status}`, session.status));
    table.append(row);
  }
  historyCard.append(table);
  root.append(historyCard);
}
