import { describe, expect, it } from "vitest";

import atlasDoc from "./fixtures/ui-data.json";
import pathCases from "./fixtures/path-cases.json";
import { loadAtlas } from "../src/model.js";
import { shortestPath, UnreachableError } from "../src/pathfinding.js";
import { Kind } from "../src/schema.js";

const model = loadAtlas(atlasDoc);

interface FixtureCase {
  name: string;
  from: string;
  to: string;
  kinds: Kind[];
  steps?: { player: string; kind: string; target: string }[];
  error?: string;
}

describe("path parity with the command line", () => {
  for (const fixture of pathCases as FixtureCase[]) {
    it(fixture.name, () => {
      if (fixture.error) {
        expect(() =>
          shortestPath(model, fixture.from, fixture.to, fixture.kinds),
        ).toThrow(UnreachableError);
        return;
      }
      const steps = shortestPath(model, fixture.from, fixture.to, fixture.kinds);
      expect(
        steps.map((s) => ({ player: s.player, kind: s.kind, target: s.target })),
      ).toEqual(fixture.steps);
    });
  }
});

describe("shortestPath", () => {
  it("returns an empty route to itself", () => {
    expect(shortestPath(model, "111", "111")).toEqual([]);
  });

  it("is deterministic", () => {
    const once = shortestPath(model, "111", "344");
    const again = shortestPath(model, "111", "344");
    expect(once).toEqual(again);
  });

  it("honors the kind filter", () => {
    const lowOnly = shortestPath(model, "111", "166", ["Low"]);
    expect(lowOnly.every((s) => s.kind === "Low")).toBe(true);
  });

  it("rejects an empty kind set", () => {
    expect(() => shortestPath(model, "111", "166", [])).toThrow();
  });
});
