import { describe, expect, it } from "vitest";

import { vertexPoint } from "../src/geometry.js";
import { deriveModel } from "../src/state.js";
import { animateMoves, renderDrawing } from "../src/svg.js";
import { Pair } from "../src/types.js";
import { FIVE_CHORD_BACKWARD, FIVE_CHORD_SESSION } from "./fixtures.js";

// A just-big-enough stand-in for the DOM: enough surface for the svg
// helpers, nothing more.
class StubElement {
  tag: string;
  attrs: { [key: string]: string } = {};
  children: StubElement[] = [];
  listeners: { [type: string]: Array<() => void> } = {};
  textContent = "";

  constructor(tag: string) {
    this.tag = tag;
  }

  setAttribute(key: string, value: string): void {
    this.attrs[key] = value;
  }

  appendChild(child: StubElement): StubElement {
    this.children.push(child);
    return child;
  }

  removeChild(child: StubElement): StubElement {
    this.children.splice(this.children.indexOf(child), 1);
    return child;
  }

  get firstChild(): StubElement | null {
    return this.children[0] ?? null;
  }

  addEventListener(type: string, cb: () => void): void {
    (this.listeners[type] ??= []).push(cb);
  }

  click(): void {
    for (const cb of this.listeners["click"] ?? []) {
      cb();
    }
  }

  querySelector(selector: string): StubElement | null {
    const match = selector.match(/\[data-chord="(.+)"\]/);
    if (!match) {
      return null;
    }
    return this.children.find((c) => c.attrs["data-chord"] === match[1]) ?? null;
  }
}

const stubDoc = {
  createElementNS: (_ns: string, tag: string) => new StubElement(tag),
} as unknown as Document;

function drawnSvg(selected: Set<string>, onChordClick?: (pair: Pair) => void) {
  const svg = new StubElement("svg");
  const model = deriveModel(FIVE_CHORD_SESSION, selected);
  renderDrawing(stubDoc, svg as unknown as Element, model, { onChordClick });
  return { svg, model };
}

describe("drawing", () => {
  it("renders the rim, every chord, and every labelled vertex", () => {
    const { svg } = drawnSvg(new Set());
    const lines = svg.children.filter((c) => c.tag === "line");
    const circles = svg.children.filter((c) => c.tag === "circle");
    const texts = svg.children.filter((c) => c.tag === "text");
    expect(lines).toHaveLength(5);
    expect(circles).toHaveLength(1 + 10); // rim + one dot per vertex
    expect(texts.map((t) => t.textContent)).toEqual(
      ["1", "2", "3", "4", "5", "6", "7", "8", "9", "10"],
    );
  });

  it("repaints from scratch on each call", () => {
    const svg = new StubElement("svg");
    const model = deriveModel(FIVE_CHORD_SESSION, new Set());
    renderDrawing(stubDoc, svg as unknown as Element, model);
    const count = svg.children.length;
    renderDrawing(stubDoc, svg as unknown as Element, model);
    expect(svg.children.length).toBe(count);
  });

  it("marks roles in the class list", () => {
    const { svg } = drawnSvg(new Set(["1,6"]));
    const byKey = new Map(
      svg.children
        .filter((c) => c.tag === "line")
        .map((c) => [c.attrs["data-chord"], c]),
    );
    expect(byKey.get("1,4")!.attrs.class).toBe("chord member frame");
    expect(byKey.get("1,6")!.attrs.class).toBe("chord member frame selected");
    expect(byKey.get("1,8")!.attrs.class).toBe("chord member locked");
  });

  it("wires clicks only on frame chords", () => {
    const clicked: Pair[] = [];
    const { svg } = drawnSvg(new Set(), (pair) => clicked.push(pair));
    const byKey = new Map(
      svg.children
        .filter((c) => c.tag === "line")
        .map((c) => [c.attrs["data-chord"], c]),
    );
    byKey.get("1,6")!.click();
    expect(clicked).toEqual([[1, 6]]);
    // a locked chord has no listener at all, so clicking does nothing
    expect(byKey.get("1,8")!.listeners["click"]).toBeUndefined();
    byKey.get("1,8")!.click();
    expect(clicked).toEqual([[1, 6]]);
  });
});

describe("rotation animation", () => {
  it("slides moved chords to their new endpoints and then reports done", () => {
    const { svg, model } = drawnSvg(new Set());
    const queue: Array<(now: number) => void> = [];
    let finished = 0;

    animateMoves(
      svg as unknown as Element,
      model,
      FIVE_CHORD_BACKWARD.moved,
      "backward",
      100,
      (cb) => queue.push(cb),
      () => {
        finished += 1;
      },
    );

    // drive the scheduler by hand: t = 0, 0.5, 1
    queue.shift()!(0);
    queue.shift()!(50);
    expect(finished).toBe(0);
    queue.shift()!(100);
    expect(finished).toBe(1);
    expect(queue).toHaveLength(0);

    const byKey = new Map(
      svg.children
        .filter((c) => c.tag === "line")
        .map((c) => [c.attrs["data-chord"], c]),
    );
    // (1,4) travelled to (2,5): endpoint 1 slid to vertex 5, endpoint 4 to 2
    const moved = byKey.get("1,4")!;
    const v5 = vertexPoint(10, 5, model.cx, model.cy, model.r);
    const v2 = vertexPoint(10, 2, model.cx, model.cy, model.r);
    expect(Number(moved.attrs.x1)).toBeCloseTo(v5.x, 6);
    expect(Number(moved.attrs.y1)).toBeCloseTo(v5.y, 6);
    expect(Number(moved.attrs.x2)).toBeCloseTo(v2.x, 6);
    expect(Number(moved.attrs.y2)).toBeCloseTo(v2.y, 6);

    // the cut chord (1,6) never moved
    const still = byKey.get("1,6")!;
    const v1 = vertexPoint(10, 1, model.cx, model.cy, model.r);
    const v6 = vertexPoint(10, 6, model.cx, model.cy, model.r);
    expect(Number(still.attrs.x1)).toBeCloseTo(v1.x, 6);
    expect(Number(still.attrs.y1)).toBeCloseTo(v1.y, 6);
    expect(Number(still.attrs.x2)).toBeCloseTo(v6.x, 6);
    expect(Number(still.attrs.y2)).toBeCloseTo(v6.y, 6);
  });
});
