/**
 * Page bootstrap: fetch the knowledge base, then run the consultation loop —
 * every toggle updates the state, issues one coalesced diagnose request, and
 * re-renders from the latest successful response.
 */

import { DiagnoseCoalescer, diagnose, fetchKb } from "./api.js";
import {
  applyError,
  applyResponse,
  initialState,
  requestFor,
  setCondition,
  toggleSymptom,
  type UiState,
} from "./state.js";
import { render, type ViewHandlers } from "./view.js";

export async function boot(root: HTMLElement, base = ""): Promise<void> {
  let state: UiState;
  try {
    state = initialState(await fetchKb(base));
  } catch (error) {
    const message = error instanceof Error ? error.message : String(error);
    root.replaceChildren();
    const banner = document.createElement("div");
    banner.className = "banner";
    banner.textContent = `failed to load the knowledge base: ${message}`;
    root.appendChild(banner);
    return;
  }

  const coalescer = new DiagnoseCoalescer(
    (request) => diagnose(base, request),
    (request, response) => {
      state = applyResponse(state, request, response);
      draw();
    },
    (_request, error) => {
      state = applyError(state, error.message);
      draw();
    },
  );

  const handlers: ViewHandlers = {
    onToggle(symptom) {
      state = toggleSymptom(state, symptom);
      sync();
    },
    onCondition(condition) {
      state = setCondition(state, condition);
      sync();
    },
  };

  function sync(): void {
    const request = requestFor(state);
    if (request === null) {
      coalescer.cancel();
    } else {
      coalescer.request(request);
    }
    draw();
  }

  function draw(): void {
    render(root, state, handlers);
  }

  draw();
}

const root = document.getElementById("app");
if (root) void boot(root);
