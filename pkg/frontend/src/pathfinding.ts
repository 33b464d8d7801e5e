/** Breadth-first swap paths, step-for-step identical to the CLI.
 *
 * Determinism contract: neighbors expand in edge order (Row before Col,
 * Low < Mid < High) and the first discovery of a node wins, so the
 * reported path always matches the command-line `path` output.
 */

import { AtlasModel } from "./model.js";
import { Kind, Player } from "./schema.js";

export interface PathStep {
  player: Player;
  kind: Kind;
  target: string;
}

export class UnreachableError extends Error {
  constructor(from: string, to: string, kinds: Kind[]) {
    super(`no path from ${from} to ${to} using kinds {${kinds.join(", ")}}`);
    this.name = "UnreachableError";
  }
}

export function shortestPath(
  model: AtlasModel,
  from: string,
  to: string,
  kinds: Kind[] = ["Low", "Mid", "High"],
): PathStep[] {
  model.game(from);
  model.game(to);
  if (kinds.length === 0) {
    throw new Error("allowed swap kinds must be non-empty");
  }
  if (from === to) {
    return [];
  }
  const allowed = new Set(kinds);
  const parents = new Map<string, { prev: string; step: PathStep }>();
  const frontier: string[] = [from];
  const seen = new Set([from]);
  while (frontier.length > 0) {
    const current = frontier.shift() as string;
    for (const entry of model.neighbors.get(current) ?? []) {
      if (!allowed.has(entry.kind) || seen.has(entry.target)) {
        continue;
      }
      seen.add(entry.target);
      parents.set(entry.target, {
        prev: current,
        step: { player: entry.player, kind: entry.kind, target: entry.target },
      });
      if (entry.target === to) {
        const steps: PathStep[] = [];
        let node = to;
        while (node !== from) {
          const link = parents.get(node) as { prev: string; step: PathStep };
          steps.push(link.step);
          node = link.prev;
        }
        steps.reverse();
        return steps;
      }
      frontier.push(entry.target);
    }
  }
  throw new UnreachableError(from, to, kinds);
}
