/** Pure cell descriptors for the 12x12 grid plus thin DOM rendering. */

import { AtlasModel } from "./model.js";
import { GameRecord } from "./schema.js";
import { ViewState } from "./state.js";
import { PathStep } from "./pathfinding.js";

export interface CellDescriptor {
  id: string;
  x: number;
  y: number;
  color: string;
  selected: boolean;
  onPath: boolean;
  label: string;
}

const ALIGNMENT_COLORS: Record<string, string> = {
  PureCommon: "#9fd6a8",
  PureConflict: "#e89f9f",
  Mixed: "#e8e3c9",
};

const EQUILIBRIA_COLORS = ["#d9d9d9", "#bcd9ef", "#77aadd"];

function overlayColor(model: AtlasModel, game: GameRecord, state: ViewState): string {
  // Later toggles win, matching the panel's top-to-bottom order.
  let color = "#ffffff";
  for (const overlay of state.overlays) {
    if (overlay === "families") {
      color = model.doc.meta.family_colors[game.family];
    } else if (overlay === "symmetry") {
      color = game.analysis.symmetric ? "#f5d76e" : "#f2f2f2";
    } else if (overlay === "dominance") {
      const row = game.analysis.dominant_row !== null;
      const col = game.analysis.dominant_col !== null;
      color = row && col ? "#7f9ed1" : row ? "#a8c4e0" : col ? "#c0d6e8" : "#efefef";
    } else if (overlay === "alignment") {
      color = ALIGNMENT_COLORS[game.analysis.alignment];
    } else if (overlay === "equilibria") {
      color = EQUILIBRIA_COLORS[game.analysis.nash.length] ?? "#77aadd";
    }
  }
  return color;
}

/** Grid position: four 6x6 layers in quadrants, row 1 at the south edge,
 * column 1 at the west edge, both axes scrolled modulo 6. */
export function cellPosition(
  model: AtlasModel,
  game: GameRecord,
  scroll: [number, number],
): [number, number] {
  const [qx, qy] = model.doc.meta.chart_quadrants[String(game.layer)];
  const dx = (game.col - 1 + scroll[1]) % 6;
  const dy = (game.row - 1 + scroll[0]) % 6;
  return [qx * 6 + dx, qy * 6 + (5 - dy)];
}

export function gridCells(
  model: AtlasModel,
  state: ViewState,
  path: PathStep[] = [],
): CellDescriptor[] {
  const onPath = new Set(path.map((step) => step.target));
  if (path.length > 0) {
    onPath.add(state.selected);
  }
  return model.doc.games.map((game) => {
    const [x, y] = cellPosition(model, game, state.scroll);
    return {
      id: game.id,
      x,
      y,
      color: overlayColor(model, game, state),
      selected: game.id === state.selected,
      onPath: onPath.has(game.id),
      label: game.id,
    };
  });
}

export interface DetailView {
  id: string;
  payoffString: string;
  family: string;
  subfamily: string | null;
  nash: string[];
  dominance: string[];
  alignment: string;
  symmetric: boolean;
  classPair: string;
  tieCoordinate: string | null;
  halfSwapMoves: string[];
}

export function detailView(model: AtlasModel, state: ViewState): DetailView {
  const game = model.game(state.selected);
  const dominance: string[] = [];
  if (game.analysis.dominant_row) {
    dominance.push(`row ${game.analysis.dominant_row.move}`);
  }
  if (game.analysis.dominant_col) {
    dominance.push(`column ${game.analysis.dominant_col.move}`);
  }
  return {
    id: game.id,
    payoffString: game.payoff_string,
    family: game.family,
    subfamily: game.subfamily,
    nash: game.analysis.nash.map((n) => `${n.cell} (${n.payoffs.join(",")})`),
    dominance,
    alignment: game.analysis.alignment,
    symmetric: game.analysis.symmetric,
    classPair: `${game.row_class}x${game.col_class}`,
    tieCoordinate: game.tie_coordinate ?? null,
    halfSwapMoves: model.tiesEnabled
      ? (model.halfSwapNeighbors.get(game.payoff_string) ?? [])
      : [],
  };
}

/** Render the grid into a container element.  Cells carry data-id so the
 * controller can wire click handlers; the payoff animation is a CSS
 * transition on the highlight class. */
export function renderGrid(container: HTMLElement, cells: CellDescriptor[]): void {
  container.textContent = "";
  container.style.position = "relative";
  for (const cell of cells) {
    const div = document.createElement("div");
    div.className =
      "cell" + (cell.selected ? " selected" : "") + (cell.onPath ? " on-path" : "");
    div.dataset.id = cell.id;
    div.style.position = "absolute";
    div.style.left = `${cell.x * 48}px`;
    div.style.top = `${cell.y * 48}px`;
    div.style.width = "46px";
    div.style.height = "46px";
    div.style.background = cell.color;
    div.textContent = cell.label;
    container.appendChild(div);
  }
}
