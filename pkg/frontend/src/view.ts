/**
 * DOM rendering. The whole page is rebuilt from one UiState value; every
 * number shown is display-rounded to two decimals with the full-precision
 * value in the element's tooltip.
 */

import type { DiseaseRow, TraceStep } from "./api.js";
import type { UiState } from "./state.js";

export interface ViewHandlers {
  onCondition(condition: string): void;
  onToggle(symptom: string): void;
}

export function formatMass(value: number): string {
  return value.toFixed(2);
}

export function formatConflict(value: number): string {
  return value.toFixed(4);
}

/** "B,L" -> "{B, L}"; the full frame renders as Θ. */
export function formatSetKey(frame: string[], key: string): string {
  const labels = key.split(",");
  if (labels.length === frame.length) return "Θ";
  return `{${labels.join(", ")}}`;
}

/** One trace step as display strings: every focal set with its rounded mass. */
export function traceCells(frame: string[], step: TraceStep): string[] {
  return Object.entries(step.masses).map(
    ([key, value]) => `${formatSetKey(frame, key)} ${formatMass(value)}`,
  );
}

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function renderControls(state: UiState, handlers: ViewHandlers): HTMLElement {
  const controls = el("section", "controls");

  const conditionLabel = el("label", "condition-picker", "condition ");
  const select = el("select");
  select.id = "condition";
  for (const name of state.kb.conditions) {
    const option = el("option", undefined, name);
    option.value = name;
    if (name === state.condition) option.selected = true;
    select.appendChild(option);
  }
  select.addEventListener("change", () => handlers.onCondition(select.value));
  conditionLabel.appendChild(select);
  controls.appendChild(conditionLabel);

  const fieldset = el("fieldset", "symptoms");
  fieldset.appendChild(el("legend", undefined, "observed symptoms"));
  for (const symptom of state.kb.symptoms) {
    const label = el("label", "symptom");
    const box = el("input");
    box.type = "checkbox";
    box.dataset.symptom = symptom.name;
    box.checked = state.selected.includes(symptom.name);
    box.addEventListener("change", () => handlers.onToggle(symptom.name));
    label.appendChild(box);
    label.appendChild(document.createTextNode(` ${symptom.name}`));
    fieldset.appendChild(label);
  }
  controls.appendChild(fieldset);
  return controls;
}

function renderBar(label: string, row: DiseaseRow): HTMLElement {
  const item = el("li", "bar-row");
  item.dataset.disease = label;

  item.appendChild(el("span", "bar-label", label));

  const track = el("div", "bar-track");
  const fill = el("div", "bar-fill");
  fill.style.width = `${(row.mass * 100).toFixed(2)}%`;
  track.appendChild(fill);
  const whisker = el("div", "bar-whisker");
  whisker.style.left = `${(row.bel * 100).toFixed(2)}%`;
  whisker.style.width = `${((row.pl - row.bel) * 100).toFixed(2)}%`;
  whisker.title = `bel ${row.bel} · pl ${row.pl}`;
  track.appendChild(whisker);
  item.appendChild(track);

  const value = el(
    "span",
    "bar-value",
    `${formatMass(row.mass)} [${formatMass(row.bel)}, ${formatMass(row.pl)}]`,
  );
  value.title = `mass ${row.mass} · bel ${row.bel} · pl ${row.pl}`;
  item.appendChild(value);
  return item;
}

function renderTrace(state: UiState, steps: TraceStep[]): HTMLElement {
  const details = el("details", "trace");
  details.appendChild(el("summary", undefined, "combination trace"));
  const table = el("table");
  const head = el("tr");
  for (const title of ["step", "symptom", "K", "masses"]) {
    head.appendChild(el("th", undefined, title));
  }
  table.appendChild(head);
  steps.forEach((step, i) => {
    const row = el("tr", "trace-step");
    row.appendChild(el("td", undefined, String(i + 1)));
    row.appendChild(el("td", undefined, step.symptom));
    const conflict = el("td", undefined, formatConflict(step.conflict));
    conflict.title = String(step.conflict);
    row.appendChild(conflict);
    const masses = el("td", "trace-masses");
    for (const [key, value] of Object.entries(step.masses)) {
      const cell = el("span", "trace-mass", `${formatSetKey(state.kb.frame, key)} ${formatMass(value)}`);
      cell.title = String(value);
      masses.appendChild(cell);
    }
    row.appendChild(masses);
    table.appendChild(row);
  });
  details.appendChild(table);
  return details;
}

function renderResults(state: UiState): HTMLElement {
  const results = el("section", "results");
  if (state.selected.length === 0) {
    results.appendChild(
      el("p", "empty", "Toggle a symptom to begin the consultation."),
    );
    return results;
  }
  const response = state.response;
  if (response === null) {
    results.appendChild(el("p", "empty", "combining evidence…"));
    return results;
  }

  const steps = response.steps ?? [];
  const conflicts = el("div", "conflicts");
  conflicts.appendChild(el("span", "conflicts-label", "conflict by step:"));
  for (const step of steps) {
    const chip = el("span", "conflict-chip", formatConflict(step.conflict));
    chip.title = `${step.symptom}: K = ${step.conflict}`;
    conflicts.appendChild(chip);
  }
  results.appendChild(conflicts);

  const bars = el("ol", "bars");
  for (const label of response.ranking) {
    const row = response.diseases[label];
    if (row) bars.appendChild(renderBar(label, row));
  }
  results.appendChild(bars);

  if (steps.length > 0) results.appendChild(renderTrace(state, steps));
  return results;
}

export function render(root: HTMLElement, state: UiState, handlers: ViewHandlers): void {
  const children: HTMLElement[] = [];
  if (state.error) {
    children.push(el("div", "banner", state.error));
    children[children.length - 1].setAttribute("role", "alert");
  }
  children.push(renderControls(state, handlers));
  children.push(renderResults(state));
  root.replaceChildren(...children);
}
