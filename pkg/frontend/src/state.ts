// Drawing model derivation. The model shown on screen is a pure function
// of the last service response plus the local selection; nothing here
// recomputes crossings, closures or frames.

import { vertexPoint, Point } from "./geometry.js";
import { Pair, pairKey, SessionView, Spec, vertexCount } from "./types.js";

export interface VertexView extends Point {
  label: number;
}

export interface ChordView {
  a: number;
  b: number;
  key: string;
  /** belongs to the configuration itself */
  member: boolean;
  /** belongs to the crosses-nothing partner set */
  partner: boolean;
  /** in both, i.e. eligible as a rotation cut */
  frame: boolean;
  selected: boolean;
  x1: number;
  y1: number;
  x2: number;
  y2: number;
}

export interface DrawingModel {
  spec: Spec;
  total: number;
  cx: number;
  cy: number;
  r: number;
  vertices: VertexView[];
  chords: ChordView[];
  stepCount: number;
  canUndo: boolean;
  selectedKeys: string[];
}

export const CANVAS = { cx: 220, cy: 220, r: 190 };

/**
 * Toggle a chord in the selection, but only when the service reported it
 * as part of the frame. Returns the (possibly new) selection; selecting
 * anything outside the frame is refused and leaves the set untouched.
 */
export function toggleSelection(
  selected: ReadonlySet<string>,
  pair: Pair,
  frame: Pair[],
): Set<string> {
  const key = pairKey(pair);
  const next = new Set(selected);
  if (!frame.some((f) => pairKey(f) === key)) {
    return next;
  }
  if (next.has(key)) {
    next.delete(key);
  } else {
    next.add(key);
  }
  return next;
}

/** Drop any selected chord the current frame no longer contains. */
export function pruneSelection(
  selected: ReadonlySet<string>,
  frame: Pair[],
): Set<string> {
  const allowed = new Set(frame.map(pairKey));
  const next = new Set<string>();
  for (const key of selected) {
    if (allowed.has(key)) {
      next.add(key);
    }
  }
  return next;
}

export function deriveModel(
  view: SessionView,
  selected: ReadonlySet<string>,
): DrawingModel {
  const total = vertexCount(view.spec);
  const { cx, cy, r } = CANVAS;
  const vertices: VertexView[] = [];
  for (let label = 1; label <= total; label++) {
    vertices.push({ label, ...vertexPoint(total, label, cx, cy, r) });
  }

  const memberKeys = new Set(view.members.diagonals.map(pairKey));
  const partnerKeys = new Set(view.nc.diagonals.map(pairKey));
  const frameKeys = new Set(view.frame.diagonals.map(pairKey));

  const seen = new Set<string>();
  const chords: ChordView[] = [];
  for (const [a, b] of [...view.members.diagonals, ...view.nc.diagonals]) {
    const key = pairKey([a, b]);
    if (seen.has(key)) {
      continue;
    }
    seen.add(key);
    const p1 = vertexPoint(total, a, cx, cy, r);
    const p2 = vertexPoint(total, b, cx, cy, r);
    chords.push({
      a,
      b,
      key,
      member: memberKeys.has(key),
      partner: partnerKeys.has(key),
      frame: frameKeys.has(key),
      selected: selected.has(key),
      x1: p1.x,
      y1: p1.y,
      x2: p2.x,
      y2: p2.y,
    });
  }

  return {
    spec: view.spec,
    total,
    cx,
    cy,
    r,
    vertices,
    chords,
    stepCount: view.steps.length,
    canUndo: view.steps.length > 0,
    selectedKeys: [...selected].sort(),
  };
}

/** Member pairs currently shown, in the service's own order. */
export function displayedMembers(model: DrawingModel): Pair[] {
  return model.chords.filter((c) => c.member).map((c) => [c.a, c.b]);
}
