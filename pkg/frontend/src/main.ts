// Wiring: owns the single ConsoleState instance, routes UI events to the
// API client, folds responses back into state, re-renders.

import { ApiError, getFields, getSessions, getSuggestions, sendFeedback, submitSentence } from "./api.js";
import { render } from "./render.js";
import {
  ConsoleState,
  applyFailure,
  applyFeedback,
  applyHistory,
  applyResult,
  applySuggestions,
  clearSuggestions,
  initialState,
  replaceWord,
  setSentenceInput,
  toggleRawTrace,
} from "./state.js";
import type { FieldRef } from "./types.js";

const API_BASE =
  new URLSearchParams(window.location.search).get("api") ?? "http://127.0.0.1:8000";

const root = document.getElementById("app")!;
let state: ConsoleState = initialState(API_BASE);
let fields: FieldRef[] = [];

function update(next: ConsoleState): void {
  state = next;
  render(root, state, fields, handlers);
}

function fail(error: unknown): void {
  if (error instanceof ApiError) {
    update(applyFailure(state, error.status, error.detail));
  } else {
    update(applyFailure(state, 0, String(error)));
  }
}

async function refreshHistory(): Promise<void> {
  update(applyHistory(state, await getSessions(state.apiBase)));
}

const handlers = {
  onInputChange(text: string): void {
    state = setSentenceInput(state, text); // no re-render while typing
  },
  onSubmit(sentence: string): void {
    state = setSentenceInput(state, sentence);
    submitSentence(state.apiBase, sentence)
      .then(async (resp) => {
        update(applyResult(state, resp));
        await refreshHistory();
      })
      .catch(fail);
  },
  onConfirm(): void {
    const result = state.result;
    if (!result) return;
    sendFeedback(state.apiBase, result.sessionId, true)
      .then(async (resp) => {
        update(applyFeedback(state, resp));
        await refreshHistory();
      })
      .catch(fail);
  },
  onCorrect(fieldId: number): void {
    const result = state.result;
    if (!result) return;
    sendFeedback(state.apiBase, result.sessionId, false, fieldId)
      .then(async (resp) => {
        update(applyFeedback(state, resp));
        await refreshHistory();
      })
      .catch(fail);
  },
  onSuggest(word: string): void {
    getSuggestions(state.apiBase, word)
      .then((resp) => update(applySuggestions(state, word, resp)))
      .catch(fail);
  },
  onPickSuggestion(word: string, replacement: string): void {
    const rewritten = replaceWord(state.sentenceInput, word, replacement);
    update(setSentenceInput(clearSuggestions(state), rewritten));
  },
  onToggleTrace(): void {
    update(toggleRawTrace(state));
  },
};

getFields(API_BASE)
  .then((resp) => {
    fields = resp.fields;
    update(state);
    return refreshHistory();
  })
  .catch(fail);
