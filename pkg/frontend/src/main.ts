/** Bootstrap: fetch the exported atlas, wire events, render. */

import { AtlasModel, loadAtlas } from "./model.js";
import { shortestPath, PathStep, UnreachableError } from "./pathfinding.js";
import { SchemaMismatch } from "./schema.js";
import {
  Action,
  ViewState,
  decodeFragment,
  encodeFragment,
  initialState,
  navigate,
} from "./state.js";
import { detailView, gridCells, renderGrid } from "./view.js";

const ATLAS_URL = "atlas.json";

async function start(): Promise<void> {
  const grid = document.getElementById("grid") as HTMLElement;
  const detail = document.getElementById("detail") as HTMLElement;
  const notice = document.getElementById("notice") as HTMLElement;

  let model: AtlasModel;
  try {
    const response = await fetch(ATLAS_URL);
    model = loadAtlas(await response.json());
  } catch (error) {
    notice.textContent =
      error instanceof SchemaMismatch
        ? `Atlas document rejected: ${error.message}`
        : `Could not load ${ATLAS_URL}: ${String(error)}`;
    return;
  }

  let state: ViewState = window.location.hash
    ? decodeFragment(model, window.location.hash)
    : initialState(model);

  function currentPath(): PathStep[] {
    if (!state.pathTarget) {
      return [];
    }
    try {
      return shortestPath(model, state.selected, state.pathTarget);
    } catch (error) {
      if (error instanceof UnreachableError) {
        notice.textContent = error.message;
        return [];
      }
      throw error;
    }
  }

  function redraw(): void {
    notice.textContent = "";
    renderGrid(grid, gridCells(model, state, currentPath()));
    const info = detailView(model, state);
    detail.innerHTML = [
      `<h2>${info.id} ${info.payoffString}</h2>`,
      `<p>family: ${info.family}${info.subfamily ? " / " + info.subfamily : ""}</p>`,
      `<p>nash: ${info.nash.join(", ") || "none (cyclic)"}</p>`,
      `<p>dominant: ${info.dominance.join(", ") || "none"}</p>`,
      `<p>alignment: ${info.alignment}; symmetric: ${info.symmetric ? "yes" : "no"}</p>`,
      `<p>classes: ${info.classPair}</p>`,
      state.tiePanelOpen && info.halfSwapMoves.length > 0
        ? `<p>half-swaps: ${info.halfSwapMoves.join("<br>")}</p>`
        : "",
    ].join("");
    window.location.hash = encodeFragment(state);
  }

  function dispatch(action: Action): void {
    state = navigate(model, state, action);
    redraw();
  }

  grid.addEventListener("click", (event) => {
    const target = (event.target as HTMLElement).closest(".cell") as HTMLElement | null;
    if (target?.dataset.id) {
      dispatch({ type: "select", id: target.dataset.id });
    }
  });
  document.querySelectorAll("[data-action]").forEach((button) => {
    button.addEventListener("click", () => {
      const el = button as HTMLElement;
      const action = el.dataset.action as string;
      if (action === "swap") {
        dispatch({
          type: "apply-swap",
          player: el.dataset.player as "Row" | "Col",
          kind: el.dataset.kind as "Low" | "Mid" | "High",
        });
      } else if (action === "scroll") {
        dispatch({
          type: "scroll",
          dr: Number(el.dataset.dr ?? 0),
          dc: Number(el.dataset.dc ?? 0),
        });
      } else if (action === "overlay") {
        dispatch({
          type: "toggle-overlay",
          overlay: el.dataset.overlay as never,
        });
      } else if (action === "plan-path") {
        const input = document.getElementById("path-target") as HTMLInputElement;
        dispatch({ type: "plan-path", target: input.value || null });
      } else if (action === "tie-panel") {
        dispatch({ type: "toggle-tie-panel" });
      }
    });
  });

  redraw();
}

start();
