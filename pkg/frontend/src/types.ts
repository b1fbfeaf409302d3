// Wire types for the workbench service. These mirror the JSON the service
// actually sends; the explorer never derives mathematical facts on its own.

export interface Spec {
  n: number;
  m: number;
}

export type Pair = [number, number];

export type Direction = "backward" | "forward";

export interface Envelope {
  version: string;
  spec: Spec;
  diagonals: Pair[];
}

export interface Step {
  cut: Pair[];
  direction: Direction;
}

export interface SessionView {
  id: string;
  createdAt: string;
  updatedAt: string;
  spec: Spec;
  members: Envelope;
  nc: Envelope;
  frame: Envelope;
  initial: Envelope;
  steps: Step[];
}

export interface Moved {
  from: Pair;
  to: Pair;
}

export interface MutateView extends SessionView {
  moved: Moved[];
}

export interface UndoView extends SessionView {
  undone: boolean;
}

export interface ClosedPage {
  spec: Spec;
  kind: string;
  page: number;
  pageSize: number;
  total: number;
  items: Pair[][];
  hasMore: boolean;
}

export interface ErrorBody {
  code: string;
  message: string;
  offending?: Pair[];
  suggestion?: Pair[];
}

export function vertexCount(spec: Spec): number {
  return spec.n * (spec.m + 1) + 2;
}

export function pairKey(p: Pair): string {
  return p[0] + "," + p[1];
}

export function keyPair(key: string): Pair {
  const [a, b] = key.split(",");
  return [Number(a), Number(b)];
}
