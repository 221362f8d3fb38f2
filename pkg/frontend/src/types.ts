// Wire types, mirroring the service's JSON responses field for field.

export interface TokenRow {
  surface: string;
  tag: string;
  kind: "content" | "general" | "punct";
}

export interface MatchRow {
  word: string;
  field_id: number;
  field_name: string;
}

export interface CountRow {
  field_id: number;
  field_name: string;
  count: number;
}

export interface FieldRef {
  field_id: number;
  name: string;
}

export interface TiedRow {
  field_id: number;
  field_name: string;
}

export interface DisambiguateResponse {
  schema_version: number;
  session_id: string;
  sentence: string;
  tokens: TokenRow[];
  matches: MatchRow[];
  counts: CountRow[];
  winner: string | null;
  winner_field_id: number | null;
  max_count: number;
  tied: TiedRow[];
  unknown_words: string[];
  content_words: string[];
}

export interface DeltaRow {
  word: string;
  field_id: number;
  field_name: string;
}

export interface FeedbackResponse {
  schema_version: number;
  session_id: string;
  status: "confirmed" | "corrected";
  applied_delta: DeltaRow[];
  new_winner: string | null;
  new_winner_field_id: number | null;
}

export interface FieldsResponse {
  schema_version: number;
  fields: FieldRef[];
}

export interface SuggestionCandidate {
  word: string;
  distance: number;
}

export interface SuggestionsResponse {
  schema_version: number;
  original: string;
  candidates: SuggestionCandidate[];
}

export interface SessionRecord {
  session_id: string;
  timestamp: string;
  sentence: string;
  result: Omit<DisambiguateResponse, "schema_version" | "session_id">;
  status: "pending" | "confirmed" | "corrected";
  applied_delta: DeltaRow[] | null;
  chosen_field_id: number | null;
  new_winner?: string | null;
  resolved_at: string | null;
}

export interface SessionsResponse {
  schema_version: number;
  sessions: SessionRecord[];
}

export interface ApiErrorBody {
  schema_version?: number;
  detail: string;
}
