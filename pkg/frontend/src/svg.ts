// SVG drawing layer. Everything here is presentation: the chords, roles
// and positions all arrive precomputed in the DrawingModel.

import { movedChordPoints } from "./geometry.js";
import { ChordView, DrawingModel } from "./state.js";
import { Direction, Moved, Pair } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export function createSvgNode(
  doc: Document,
  parent: Element | null,
  tag: string,
  attrs: { [key: string]: string | number } = {},
): Element {
  const element = doc.createElementNS(SVG_NS, tag);
  setSvgAttributes(element, attrs);
  parent?.appendChild(element);
  return element;
}

export function setSvgAttributes(
  element: Element,
  attrs: { [key: string]: string | number },
): void {
  for (const key in attrs) {
    element.setAttribute(key, String(attrs[key]));
  }
}

function chordClass(chord: ChordView): string {
  const classes = ["chord"];
  if (chord.member) {
    classes.push("member");
  }
  if (chord.partner && !chord.member) {
    classes.push("partner-only");
  }
  if (chord.frame) {
    classes.push("frame");
  } else {
    classes.push("locked");
  }
  if (chord.selected) {
    classes.push("selected");
  }
  return classes.join(" ");
}

export interface RenderHandlers {
  onChordClick?(pair: Pair): void;
}

/**
 * Repaint the polygon. Frame chords get a click handler; everything else
 * is inert (class "locked", no handler), so off-frame chords simply
 * cannot be selected from the drawing.
 */
export function renderDrawing(
  doc: Document,
  svg: Element,
  model: DrawingModel,
  handlers: RenderHandlers = {},
): void {
  while (svg.firstChild) {
    svg.removeChild(svg.firstChild);
  }
  createSvgNode(doc, svg, "circle", {
    cx: model.cx,
    cy: model.cy,
    r: model.r,
    class: "rim",
  });
  for (const chord of model.chords) {
    const line = createSvgNode(doc, svg, "line", {
      x1: chord.x1,
      y1: chord.y1,
      x2: chord.x2,
      y2: chord.y2,
      class: chordClass(chord),
      "data-chord": chord.key,
    });
    if (chord.frame && handlers.onChordClick) {
      const pair: Pair = [chord.a, chord.b];
      line.addEventListener("click", () => handlers.onChordClick!(pair));
    }
  }
  for (const vertex of model.vertices) {
    createSvgNode(doc, svg, "circle", {
      cx: vertex.x,
      cy: vertex.y,
      r: 4,
      class: "vertex",
    });
    const label = createSvgNode(doc, svg, "text", {
      x: vertex.x,
      y: vertex.y - 8,
      class: "vertex-label",
      "text-anchor": "middle",
    });
    label.textContent = String(vertex.label);
  }
}

/**
 * Slide the moved chords along the boundary from their old to their new
 * endpoints, then hand control back. The frame scheduler is injectable
 * so tests can drive the clock.
 */
export function animateMoves(
  svg: Element,
  model: DrawingModel,
  moved: Moved[],
  direction: Direction,
  durationMs: number,
  schedule: (cb: (now: number) => void) => void,
  done: () => void,
): void {
  const lines = new Map<string, Element>();
  for (const entry of moved) {
    const key = entry.from[0] + "," + entry.from[1];
    const line = svg.querySelector(`[data-chord="${key}"]`);
    if (line) {
      lines.set(key, line);
    }
  }
  let start: number | null = null;
  const tick = (now: number) => {
    if (start === null) {
      start = now;
    }
    const t = Math.min(1, (now - start) / durationMs);
    for (const entry of moved) {
      const key = entry.from[0] + "," + entry.from[1];
      const line = lines.get(key);
      if (!line) {
        continue;
      }
      const [p1, p2] = movedChordPoints(
        model.total,
        entry,
        direction,
        t,
        model.cx,
        model.cy,
        model.r,
      );
      setSvgAttributes(line, { x1: p1.x, y1: p1.y, x2: p2.x, y2: p2.y });
    }
    if (t < 1) {
      schedule(tick);
    } else {
      done();
    }
  };
  schedule(tick);
}
