/** Navigable in-memory model over a loaded atlas document.
 *
 * The explorer performs no game-theoretic computation of its own: every
 * analysis field comes from the document; only path search runs here.
 */

import {
  AtlasDocument,
  EdgeRecord,
  GameRecord,
  Kind,
  Player,
  checkDocument,
} from "./schema.js";

const PLAYER_ORDER: Player[] = ["Row", "Col"];
const KIND_ORDER: Kind[] = ["Low", "Mid", "High"];

export interface NeighborEntry {
  player: Player;
  kind: Kind;
  target: string;
}

export class AtlasModel {
  readonly doc: AtlasDocument;
  readonly byId: Map<string, GameRecord>;
  /** Per game, the six outgoing edges in deterministic order:
   * Row before Col, Low < Mid < High. */
  readonly neighbors: Map<string, NeighborEntry[]>;
  readonly tiesEnabled: boolean;
  readonly halfSwapNeighbors: Map<string, string[]>;

  constructor(doc: AtlasDocument) {
    this.doc = doc;
    this.byId = new Map(doc.games.map((g) => [g.id, g]));
    this.neighbors = new Map(doc.games.map((g) => [g.id, []]));
    for (const edge of doc.edges) {
      this.addDirected(edge.a, edge.b, edge);
      this.addDirected(edge.b, edge.a, edge);
    }
    for (const list of this.neighbors.values()) {
      list.sort(
        (x, y) =>
          PLAYER_ORDER.indexOf(x.player) - PLAYER_ORDER.indexOf(y.player) ||
          KIND_ORDER.indexOf(x.kind) - KIND_ORDER.indexOf(y.kind),
      );
    }
    this.tiesEnabled = doc.ties !== undefined;
    this.halfSwapNeighbors = new Map();
    if (doc.ties) {
      const strictByPayoff = new Map(
        doc.ties.nodes
          .filter((n) => n.strict_id !== null)
          .map((n) => [n.payoff_string, n.strict_id as string]),
      );
      for (const edge of doc.ties.edges) {
        for (const [from, to] of [
          [edge.a, edge.b],
          [edge.b, edge.a],
        ]) {
          const key = strictByPayoff.get(from) ?? from;
          const list = this.halfSwapNeighbors.get(key) ?? [];
          list.push(to);
          this.halfSwapNeighbors.set(key, list);
        }
      }
    }
  }

  private addDirected(from: string, to: string, edge: EdgeRecord): void {
    const list = this.neighbors.get(from);
    if (!list) {
      throw new Error(`edge endpoint ${from} is not a game`);
    }
    list.push({ player: edge.player, kind: edge.kind, target: to });
  }

  game(id: string): GameRecord {
    const record = this.byId.get(id);
    if (!record) {
      throw new Error(`no such game: ${id}`);
    }
    return record;
  }

  /** The neighbor reached by one labeled swap. */
  step(id: string, player: Player, kind: Kind): string {
    const entry = this.neighbors
      .get(id)
      ?.find((e) => e.player === player && e.kind === kind);
    if (!entry) {
      throw new Error(`no ${player}-${kind} edge at ${id}`);
    }
    return entry.target;
  }

  familyColor(id: string): string {
    return this.doc.meta.family_colors[this.game(id).family];
  }
}

export function loadAtlas(raw: unknown): AtlasModel {
  return new AtlasModel(checkDocument(raw));
}
