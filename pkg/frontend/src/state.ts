/**
 * Pure consultation state. Every render derives from one UiState value, and
 * every event produces a new one; nothing here touches the DOM or the network.
 */

import type { DiagnoseRequest, DiagnoseResponse, KbPayload } from "./api.js";

export interface UiState {
  kb: KbPayload;
  condition: string;
  /** toggled symptom names, in toggle order */
  selected: string[];
  /** most recent successful response for the current selection, or null */
  response: DiagnoseResponse | null;
  /** non-blocking banner text, or null */
  error: string | null;
}

export function initialState(kb: KbPayload): UiState {
  return {
    kb,
    condition: kb.conditions[0] ?? "",
    selected: [],
    response: null,
    error: null,
  };
}

/** Add or remove one symptom; emptying the selection also clears the result. */
export function toggleSymptom(state: UiState, name: string): UiState {
  const selected = state.selected.includes(name)
    ? state.selected.filter((s) => s !== name)
    : [...state.selected, name];
  return {
    ...state,
    selected,
    response: selected.length === 0 ? null : state.response,
  };
}

/** Switch condition; the old response answers a different question, drop it. */
export function setCondition(state: UiState, condition: string): UiState {
  if (condition === state.condition) return state;
  return { ...state, condition, response: null };
}

/** The request the current state calls for, or null when nothing is selected. */
export function requestFor(state: UiState): DiagnoseRequest | null {
  if (state.selected.length === 0) return null;
  return { condition: state.condition, symptoms: [...state.selected], trace: true };
}

function sameSelection(a: string[], b: string[]): boolean {
  return a.length === b.length && a.every((name, i) => name === b[i]);
}

/**
 * Install a response, but only if it still answers the current condition and
 * selection; a stale response (superseded while in flight) leaves the state
 * untouched. A fresh response also clears the error banner.
 */
export function applyResponse(
  state: UiState,
  request: DiagnoseRequest,
  response: DiagnoseResponse,
): UiState {
  if (request.condition !== state.condition) return state;
  if (!sameSelection(request.symptoms, state.selected)) return state;
  return { ...state, response, error: null };
}

/** Show a banner; the previous response and the checkboxes stay as they are. */
export function applyError(state: UiState, message: string): UiState {
  return { ...state, error: message };
}
