// Thin typed client for the disambiguation service. Every function does
// one request and returns the parsed body; HTTP errors become ApiError.

import type {
  DisambiguateResponse,
  FeedbackResponse,
  FieldsResponse,
  SessionsResponse,
  SuggestionsResponse,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly detail: string,
  ) {
    super(`${status}: ${detail}`);
  }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  const response = await fetch(url, init);
  const body = await response.json().catch(() => ({}));
  if (!response.ok) {
    const detail = typeof body.detail === "string" ? body.detail : response.statusText;
    throw new ApiError(response.status, detail);
  }
  return body as T;
}

export function submitSentence(base: string, sentence: string): Promise<DisambiguateResponse> {
  return request(`${base}/disambiguate`, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify({ sentence }),
  });
}

export function sendFeedback(
  base: string,
  sessionId: string,
  confirmed: boolean,
  chosenFieldId?: number,
): Promise<FeedbackResponse> {
  const payload: { confirmed: boolean; chosen_field_id?: number } = { confirmed };
  if (chosenFieldId !== undefined) {
    payload.chosen_field_id = chosenFieldId;
  }
  return request(`${base}/sessions/${sessionId}/feedback`, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(payload),
  });
}

export function getFields(base: string): Promise<FieldsResponse> {
  return request(`${base}/fields`);
}

export function getSuggestions(base: string, word: string): Promise<SuggestionsResponse> {
  return request(`${base}/suggestions?word=${encodeURIComponent(word)}`);
}

export function getSessions(base: string, limit = 20): Promise<SessionsResponse> {
  return request(`${base}/sessions?limit=${limit}`);
}
