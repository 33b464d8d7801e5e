/** View state, its reducers, and the shareable URL fragment codec. */

import { AtlasModel } from "./model.js";
import { Kind, Player } from "./schema.js";

export const OVERLAYS = [
  "families",
  "symmetry",
  "dominance",
  "alignment",
  "equilibria",
] as const;
export type Overlay = (typeof OVERLAYS)[number];

export interface ViewState {
  selected: string;
  scroll: [number, number];
  overlays: Overlay[];
  pathTarget: string | null;
  tiePanelOpen: boolean;
}

export function initialState(model: AtlasModel): ViewState {
  return {
    selected: "111",
    scroll: [...model.doc.meta.default_scroll] as [number, number],
    overlays: ["families"],
    pathTarget: null,
    tiePanelOpen: false,
  };
}

const mod6 = (value: number): number => ((value % 6) + 6) % 6;

export type Action =
  | { type: "select"; id: string }
  | { type: "apply-swap"; player: Player; kind: Kind }
  | { type: "apply-half-swap"; target: string }
  | { type: "scroll"; dr: number; dc: number }
  | { type: "toggle-overlay"; overlay: Overlay }
  | { type: "plan-path"; target: string | null }
  | { type: "toggle-tie-panel" };

export function navigate(model: AtlasModel, state: ViewState, action: Action): ViewState {
  switch (action.type) {
    case "select": {
      model.game(action.id);
      return { ...state, selected: action.id };
    }
    case "apply-swap": {
      const target = model.step(state.selected, action.player, action.kind);
      return { ...state, selected: target };
    }
    case "apply-half-swap": {
      // Half-swap moves land on tie games, which live in the detail
      // panel rather than the strict grid; selection is unchanged.
      return { ...state, tiePanelOpen: true };
    }
    case "scroll": {
      const [dr, dc] = state.scroll;
      return {
        ...state,
        scroll: [mod6(dr + action.dr), mod6(dc + action.dc)],
      };
    }
    case "toggle-overlay": {
      const active = state.overlays.includes(action.overlay)
        ? state.overlays.filter((o) => o !== action.overlay)
        : [...state.overlays, action.overlay];
      return { ...state, overlays: active };
    }
    case "plan-path": {
      if (action.target !== null) {
        model.game(action.target);
      }
      return { ...state, pathTarget: action.target };
    }
    case "toggle-tie-panel": {
      return { ...state, tiePanelOpen: !state.tiePanelOpen };
    }
  }
}

/** Serialize the state into a shareable URL fragment. */
export function encodeFragment(state: ViewState): string {
  const parts = [`g=${state.selected}`, `s=${state.scroll[0]},${state.scroll[1]}`];
  if (state.overlays.length > 0) {
    parts.push(`o=${state.overlays.join(",")}`);
  }
  if (state.pathTarget) {
    parts.push(`t=${state.pathTarget}`);
  }
  if (state.tiePanelOpen) {
    parts.push("ties=1");
  }
  return parts.join("&");
}

export function decodeFragment(model: AtlasModel, fragment: string): ViewState {
  const state = initialState(model);
  const clean = fragment.startsWith("#") ? fragment.slice(1) : fragment;
  if (!clean) {
    return state;
  }
  for (const part of clean.split("&")) {
    const [key, value] = part.split("=");
    if (key === "g" && value && model.byId.has(value)) {
      state.selected = value;
    } else if (key === "s" && value) {
      const [dr, dc] = value.split(",").map(Number);
      if (Number.isFinite(dr) && Number.isFinite(dc)) {
        state.scroll = [mod6(dr), mod6(dc)];
      }
    } else if (key === "o" && value !== undefined) {
      state.overlays = value
        .split(",")
        .filter((o): o is Overlay => (OVERLAYS as readonly string[]).includes(o));
    } else if (key === "t" && value && model.byId.has(value)) {
      state.pathTarget = value;
    } else if (key === "ties") {
      state.tiePanelOpen = value === "1";
    }
  }
  return state;
}
