// Pure view-state for the console. Everything displayed is copied
// verbatim from an API response; this module never computes a count,
// winner, or ranking of its own.

import type {
  CountRow,
  DisambiguateResponse,
  FeedbackResponse,
  SessionRecord,
  SessionsResponse,
  SuggestionsResponse,
} from "./types.js";

export interface ResultView {
  sessionId: string;
  sentence: string;
  tokens: DisambiguateResponse["tokens"];
  matches: DisambiguateResponse["matches"];
  counts: CountRow[];
  winner: string | null;
  winnerFieldId: number | null;
  maxCount: number;
  tied: DisambiguateResponse["tied"];
  unknownWords: string[];
  status: "pending" | "confirmed" | "corrected";
  appliedDelta: FeedbackResponse["applied_delta"] | null;
  newWinner: string | null;
}

export interface SuggestionsView {
  word: string;
  candidates: SuggestionsResponse["candidates"];
}

export interface ConsoleState {
  apiBase: string;
  sentenceInput: string;
  result: ResultView | null;
  history: SessionRecord[];
  suggestions: SuggestionsView | null;
  error: string | null;
  notice: string | null;
  showRawTrace: boolean;
}

export function initialState(apiBase: string): ConsoleState {
  return {
    apiBase,
    sentenceInput: "",
    result: null,
    history: [],
    suggestions: null,
    error: null,
    notice: null,
    showRawTrace: false,
  };
}

export function applyResult(state: ConsoleState, resp: DisambiguateResponse): ConsoleState {
  return {
    ...state,
    error: null,
    notice: null,
    suggestions: null,
    result: {
      sessionId: resp.session_id,
      sentence: resp.sentence,
      tokens: resp.tokens,
      matches: resp.matches,
      counts: resp.counts,
      winner: resp.winner,
      winnerFieldId: resp.winner_field_id,
      maxCount: resp.max_count,
      tied: resp.tied,
      unknownWords: resp.unknown_words,
      status: "pending",
      appliedDelta: null,
      newWinner: null,
    },
  };
}

export function applyFeedback(state: ConsoleState, resp: FeedbackResponse): ConsoleState {
  if (!state.result || state.result.sessionId !== resp.session_id) {
    return state;
  }
  return {
    ...state,
    error: null,
    notice: null,
    result: {
      ...state.result,
      status: resp.status,
      appliedDelta: resp.applied_delta,
      newWinner: resp.new_winner,
    },
  };
}

export function applyFailure(state: ConsoleState, status: number, detail: string): ConsoleState {
  if (status === 409) {
    // someone already answered this session; keep the view, say so
    return { ...state, notice: "already answered", error: null };
  }
  if (status === 422) {
    return { ...state, error: "no content words", notice: null };
  }
  return { ...state, error: detail, notice: null };
}

export function applyHistory(state: ConsoleState, resp: SessionsResponse): ConsoleState {
  // rendered in response order: the service already returns newest first
  return { ...state, history: resp.sessions };
}

export function applySuggestions(
  state: ConsoleState,
  word: string,
  resp: SuggestionsResponse,
): ConsoleState {
  return { ...state, suggestions: { word, candidates: resp.candidates } };
}

export function clearSuggestions(state: ConsoleState): ConsoleState {
  return { ...state, suggestions: null };
}

export function setSentenceInput(state: ConsoleState, text: string): ConsoleState {
  return { ...state, sentenceInput: text };
}

export function toggleRawTrace(state: ConsoleState): ConsoleState {
  return { ...state, showRawTrace: !state.showRawTrace };
}

export function replaceWord(sentence: string, word: string, replacement: string): string {
  return sentence
    .split(/\s+/)
    .map((chunk) => {
      const core = chunk.replace(/^[.,?!;:"']+|[.,?!;:"']+$/g, "");
      return core.toLowerCase() === word.toLowerCase() ? chunk.replace(core, replacement) : chunk;
    })
    .join(" ");
}

// ---------------------------------------------------------------------
// Selectors: the exact strings and rows the renderer shows
// ---------------------------------------------------------------------

export function feedbackEnabled(result: ResultView | null): boolean {
  return result !== null && result.status === "pending";
}

export function rankedCounts(result: ResultView): CountRow[] {
  // already ranked by the service; shown as-is
  return result.counts;
}

export function winnerChip(result: ResultView): string {
  return result.winner ?? "no domain";
}

export function showTieBadge(result: ResultView): boolean {
  return result.tied.length > 1;
}

export function deltaWords(result: ResultView): string[] {
  return (result.appliedDelta ?? []).map((row) => `${row.word} → ${row.field_name}`);
}

export function traceLines(result: ResultView): string[] {
  const lines = result.matches.map(
    (m) => `Match – ${m.word}: ${m.word} clustered under – ${m.field_name}`,
  );
  for (const row of result.counts) {
    lines.push(`Field ${row.field_id} found ${row.count} times`);
  }
  if (result.winner !== null && result.winnerFieldId !== null) {
    lines.push(`Max Value: ${result.maxCount} For field ID: ${result.winnerFieldId}`);
    lines.push(`The Domain is ${result.winner}`);
  } else {
    lines.push("No matching domain found");
  }
  return lines;
}
