import { describe, expect, it } from "vitest";

import {
  deriveModel,
  displayedMembers,
  pruneSelection,
  toggleSelection,
} from "../src/state.js";
import { pairKey } from "../src/types.js";
import { FIVE_CHORD_SESSION, FOUR_CHORD_SESSION } from "./fixtures.js";

const FRAME = FIVE_CHORD_SESSION.frame.diagonals;

describe("selection rules", () => {
  it("selects a frame chord", () => {
    const next = toggleSelection(new Set(), [1, 6], FRAME);
    expect(next.has("1,6")).toBe(true);
  });

  it("deselects on a second toggle", () => {
    const once = toggleSelection(new Set(), [1, 6], FRAME);
    const twice = toggleSelection(once, [1, 6], FRAME);
    expect(twice.size).toBe(0);
  });

  it("refuses anything outside the frame", () => {
    const next = toggleSelection(new Set(), [1, 8], FRAME);
    expect(next.size).toBe(0);
    const next2 = toggleSelection(new Set(["1,6"]), [7, 10], FRAME);
    expect(next2).toEqual(new Set(["1,6"]));
  });

  it("prunes stale picks when the frame shrinks", () => {
    const kept = pruneSelection(new Set(["1,4", "1,6", "9,9"]), FRAME);
    expect(kept).toEqual(new Set(["1,4", "1,6"]));
    const none = pruneSelection(new Set(["1,4"]), []);
    expect(none.size).toBe(0);
  });
});

describe("drawing model", () => {
  it("is a pure function of response and selection", () => {
    const sel = new Set(["1,6"]);
    const a = deriveModel(FIVE_CHORD_SESSION, sel);
    const b = deriveModel(FIVE_CHORD_SESSION, sel);
    expect(a).toEqual(b);
  });

  it("lays out one vertex per polygon corner", () => {
    const model = deriveModel(FIVE_CHORD_SESSION, new Set());
    expect(model.total).toBe(10);
    expect(model.vertices.map((v) => v.label)).toEqual(
      [1, 2, 3, 4, 5, 6, 7, 8, 9, 10],
    );
  });

  it("shows exactly the members the service sent", () => {
    const model = deriveModel(FIVE_CHORD_SESSION, new Set());
    expect(displayedMembers(model)).toEqual(FIVE_CHORD_SESSION.members.diagonals);
  });

  it("tags frame chords and leaves the rest locked", () => {
    const model = deriveModel(FIVE_CHORD_SESSION, new Set(["1,4"]));
    const byKey = new Map(model.chords.map((c) => [c.key, c]));
    expect(byKey.get("1,4")!.frame).toBe(true);
    expect(byKey.get("1,4")!.selected).toBe(true);
    expect(byKey.get("1,6")!.frame).toBe(true);
    expect(byKey.get("1,6")!.selected).toBe(false);
    expect(byKey.get("1,8")!.frame).toBe(false);
    expect(byKey.get("6,9")!.frame).toBe(false);
    expect(byKey.get("7,10")!.frame).toBe(false);
  });

  it("draws partner-only chords that are not members", () => {
    const model = deriveModel(FOUR_CHORD_SESSION, new Set());
    const byKey = new Map(model.chords.map((c) => [c.key, c]));
    // members and partners overlap only in (1,6) here
    expect(byKey.get("1,8")!.member).toBe(false);
    expect(byKey.get("1,8")!.partner).toBe(true);
    expect(byKey.get("6,9")!.partner).toBe(true);
    expect(byKey.get("1,4")!.member).toBe(true);
    expect(byKey.get("1,4")!.partner).toBe(false);
    expect(byKey.get("1,6")!.member).toBe(true);
    expect(byKey.get("1,6")!.partner).toBe(true);
    expect(byKey.get("1,6")!.frame).toBe(true);
    // no duplicates for the shared chord
    const keys = model.chords.map((c) => c.key);
    expect(new Set(keys).size).toBe(keys.length);
    expect(keys.length).toBe(7);
  });

  it("reports history depth for the undo control", () => {
    const before = deriveModel(FIVE_CHORD_SESSION, new Set());
    expect(before.stepCount).toBe(0);
    expect(before.canUndo).toBe(false);
    const after = deriveModel(
      { ...FIVE_CHORD_SESSION, steps: [{ cut: [[1, 6]], direction: "backward" }] },
      new Set(),
    );
    expect(after.stepCount).toBe(1);
    expect(after.canUndo).toBe(true);
  });

  it("keeps chord endpoints on the stored vertex positions", () => {
    const model = deriveModel(FIVE_CHORD_SESSION, new Set());
    const byLabel = new Map(model.vertices.map((v) => [v.label, v]));
    for (const chord of model.chords) {
      expect(chord.x1).toBeCloseTo(byLabel.get(chord.a)!.x, 9);
      expect(chord.y1).toBeCloseTo(byLabel.get(chord.a)!.y, 9);
      expect(chord.x2).toBeCloseTo(byLabel.get(chord.b)!.x, 9);
      expect(chord.y2).toBeCloseTo(byLabel.get(chord.b)!.y, 9);
    }
  });
});

describe("pair keys", () => {
  it("round-trips", () => {
    expect(pairKey([7, 10])).toBe("7,10");
  });
});
