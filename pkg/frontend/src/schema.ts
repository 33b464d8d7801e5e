/** Types for the exported atlas document and its validated loading. */

export const SCHEMA_VERSION = "1";

export type Player = "Row" | "Col";
export type Kind = "Low" | "Mid" | "High";
export type CellName = "UL" | "UR" | "DL" | "DR";

export interface DominanceRecord {
  move: string;
  strict: boolean;
}

export interface AnalysisRecord {
  nash: { cell: CellName; payoffs: [number, number] }[];
  nash_payoffs: [number, number][];
  dominant_row: DominanceRecord | null;
  dominant_col: DominanceRecord | null;
  pareto_optimal: CellName[];
  pareto_inferior_equilibria: CellName[];
  maximin: {
    row_move: string;
    col_move: string;
    row_guarantee: number;
    col_guarantee: number;
    row_tied: boolean;
    col_tied: boolean;
  };
  symmetric: boolean;
  alignment: "PureCommon" | "PureConflict" | "Mixed";
}

export interface GameRecord {
  id: string;
  layer: number;
  row: number;
  col: number;
  payoff_string: string;
  row_ranks: number[];
  col_ranks: number[];
  family: string;
  subfamily: string | null;
  row_class: string;
  col_class: string;
  analysis: AnalysisRecord;
  natural_order?: {
    row_class_index: number;
    col_class_index: number;
    within_block: number;
  };
  tie_coordinate?: string;
}

export interface EdgeRecord {
  a: string;
  b: string;
  player: Player;
  kind: Kind;
}

export interface TieNodeRecord {
  payoff_string: string;
  tie_coordinate: string;
  strict_id: string | null;
}

export interface AtlasDocument {
  schema_version: string;
  kind: string;
  meta: {
    family_colors: Record<string, string>;
    class_order: string[];
    chart_quadrants: Record<string, [number, number]>;
    default_scroll: [number, number];
  };
  games: GameRecord[];
  edges: EdgeRecord[];
  hotspots: string[][];
  pipes: string[][];
  ties?: { nodes: TieNodeRecord[]; edges: { a: string; b: string }[] };
}

/** Raised when a document cannot back the explorer. */
export class SchemaMismatch extends Error {
  constructor(message: string, readonly expected: string = SCHEMA_VERSION) {
    super(`${message} (expected schema ${SCHEMA_VERSION})`);
    this.name = "SchemaMismatch";
  }
}

/** Validate the parts of a document the explorer relies on. */
export function checkDocument(doc: unknown): AtlasDocument {
  if (typeof doc !== "object" || doc === null) {
    throw new SchemaMismatch("document is not an object");
  }
  const candidate = doc as Partial<AtlasDocument>;
  if (candidate.schema_version !== SCHEMA_VERSION) {
    throw new SchemaMismatch(
      `unsupported schema version ${String(candidate.schema_version)}`,
    );
  }
  if (!Array.isArray(candidate.games) || !Array.isArray(candidate.edges)) {
    throw new SchemaMismatch("games/edges missing");
  }
  if (candidate.games.length !== 144) {
    throw new SchemaMismatch(`expected 144 games, found ${candidate.games.length}`);
  }
  if (!candidate.meta || typeof candidate.meta.family_colors !== "object") {
    throw new SchemaMismatch("meta.family_colors missing");
  }
  for (const game of candidate.games) {
    if (!game.id || !game.analysis || !game.family) {
      throw new SchemaMismatch(`incomplete game record ${JSON.stringify(game.id)}`);
    }
  }
  return candidate as AtlasDocument;
}
