// Polygon layout and rotation animation paths.
//
// Vertex 1 sits at the top of the circle and labels increase clockwise,
// matching the SVG the service renders. All angles are in screen
// coordinates (y grows downward), so increasing angle is clockwise.

import { Direction, Moved } from "./types.js";

export interface Point {
  x: number;
  y: number;
}

export function vertexAngle(total: number, label: number): number {
  return -Math.PI / 2 + (2 * Math.PI * (label - 1)) / total;
}

export function vertexPoint(
  total: number,
  label: number,
  cx: number,
  cy: number,
  r: number,
): Point {
  const theta = vertexAngle(total, label);
  return { x: cx + r * Math.cos(theta), y: cy + r * Math.sin(theta) };
}

/** Vertex steps walked from x to y going counter-clockwise (labels decreasing). */
export function ccwSteps(total: number, x: number, y: number): number {
  return (((x - y) % total) + total) % total;
}

/** Vertex steps walked from x to y going clockwise (labels increasing). */
export function cwSteps(total: number, x: number, y: number): number {
  return ccwSteps(total, y, x);
}

export interface EndpointTrack {
  from: number;
  to: number;
  /** vertex steps travelled in the rotation's sense (ccw for backward) */
  steps: number;
}

function directedSteps(total: number, direction: Direction, x: number, y: number): number {
  return direction === "backward" ? ccwSteps(total, x, y) : cwSteps(total, x, y);
}

/**
 * Decide which endpoint of `moved.from` travels to which endpoint of
 * `moved.to`. A rotation only ever carries endpoints in its own sense
 * around the polygon, so of the two possible matchings the real one is
 * the one with the shorter total directed travel.
 */
export function matchEndpoints(
  total: number,
  moved: Moved,
  direction: Direction,
): [EndpointTrack, EndpointTrack] {
  const [a, b] = moved.from;
  const [p, q] = moved.to;
  const straight =
    directedSteps(total, direction, a, p) + directedSteps(total, direction, b, q);
  const crossed =
    directedSteps(total, direction, a, q) + directedSteps(total, direction, b, p);
  if (crossed < straight) {
    return [
      { from: a, to: q, steps: directedSteps(total, direction, a, q) },
      { from: b, to: p, steps: directedSteps(total, direction, b, p) },
    ];
  }
  return [
    { from: a, to: p, steps: directedSteps(total, direction, a, p) },
    { from: b, to: q, steps: directedSteps(total, direction, b, q) },
  ];
}

/**
 * Position of a travelling endpoint at animation time t in [0, 1]. The
 * endpoint slides along the circle through its vertex steps, clockwise
 * for forward rotations and counter-clockwise for backward ones.
 */
export function trackPoint(
  total: number,
  track: EndpointTrack,
  direction: Direction,
  t: number,
  cx: number,
  cy: number,
  r: number,
): Point {
  const sense = direction === "forward" ? 1 : -1;
  const theta =
    vertexAngle(total, track.from) +
    sense * track.steps * (2 * Math.PI / total) * t;
  return { x: cx + r * Math.cos(theta), y: cy + r * Math.sin(theta) };
}

/** Both endpoints of a moved chord at animation time t. */
export function movedChordPoints(
  total: number,
  moved: Moved,
  direction: Direction,
  t: number,
  cx: number,
  cy: number,
  r: number,
): [Point, Point] {
  const [first, second] = matchEndpoints(total, moved, direction);
  return [
    trackPoint(total, first, direction, t, cx, cy, r),
    trackPoint(total, second, direction, t, cx, cy, r),
  ];
}
