// Responses recorded verbatim from a live workbench service. The mock
// service in the app tests replays these, so anything the explorer
// displays is checked against what the real protocol actually says.

import {
  ClosedPage,
  ErrorBody,
  MutateView,
  SessionView,
  UndoView,
} from "../src/types.js";

export const FIVE_CHORD_SESSION: SessionView = {
  id: "08b8a6796d4c",
  createdAt: "2026-08-16T15:02:36+00:00",
  updatedAt: "2026-08-16T15:02:36+00:00",
  spec: { n: 2, m: 3 },
  members: {
    version: "1",
    spec: { n: 2, m: 3 },
    diagonals: [[1, 4], [1, 6], [1, 8], [6, 9], [7, 10]],
  },
  nc: {
    version: "1",
    spec: { n: 2, m: 3 },
    diagonals: [[1, 4], [1, 6]],
  },
  frame: {
    version: "1",
    spec: { n: 2, m: 3 },
    diagonals: [[1, 4], [1, 6]],
  },
  initial: {
    version: "1",
    spec: { n: 2, m: 3 },
    diagonals: [[1, 4], [1, 6], [1, 8], [6, 9], [7, 10]],
  },
  steps: [],
};

export const FIVE_CHORD_BACKWARD: MutateView = {
  id: "08b8a6796d4c",
  createdAt: "2026-08-16T15:02:36+00:00",
  updatedAt: "2026-08-16T15:02:36+00:00",
  spec: { n: 2, m: 3 },
  members: {
    version: "1",
    spec: { n: 2, m: 3 },
    diagonals: [[1, 6], [1, 8], [2, 5], [6, 9], [7, 10]],
  },
  nc: {
    version: "1",
    spec: { n: 2, m: 3 },
    diagonals: [[1, 6], [2, 5]],
  },
  frame: {
    version: "1",
    spec: { n: 2, m: 3 },
    diagonals: [[1, 6], [2, 5]],
  },
  initial: {
    version: "1",
    spec: { n: 2, m: 3 },
    diagonals: [[1, 4], [1, 6], [1, 8], [6, 9], [7, 10]],
  },
  steps: [{ cut: [[1, 6]], direction: "backward" }],
  moved: [
    { from: [1, 4], to: [2, 5] },
    { from: [1, 6], to: [1, 6] },
    { from: [1, 8], to: [6, 9] },
    { from: [6, 9], to: [7, 10] },
    { from: [7, 10], to: [1, 8] },
  ],
};

export const FIVE_CHORD_UNDO: UndoView = {
  ...FIVE_CHORD_SESSION,
  steps: [],
  undone: true,
};

export const FOUR_CHORD_SESSION: SessionView = {
  id: "61c9c2771420",
  createdAt: "2026-08-16T15:15:07+00:00",
  updatedAt: "2026-08-16T15:15:07+00:00",
  spec: { n: 2, m: 3 },
  members: {
    version: "1",
    spec: { n: 2, m: 3 },
    diagonals: [[1, 4], [1, 6], [2, 5], [3, 6]],
  },
  nc: {
    version: "1",
    spec: { n: 2, m: 3 },
    diagonals: [[1, 6], [1, 8], [6, 9], [7, 10]],
  },
  frame: {
    version: "1",
    spec: { n: 2, m: 3 },
    diagonals: [[1, 6]],
  },
  initial: {
    version: "1",
    spec: { n: 2, m: 3 },
    diagonals: [[1, 4], [1, 6], [2, 5], [3, 6]],
  },
  steps: [],
};

export const FORKED_SESSION: SessionView = {
  id: "41c2deb7ae9b",
  createdAt: "2026-08-16T15:21:50+00:00",
  updatedAt: "2026-08-16T15:21:50+00:00",
  spec: { n: 2, m: 3 },
  members: {
    version: "1",
    spec: { n: 2, m: 3 },
    diagonals: [[6, 9], [7, 10]],
  },
  nc: {
    version: "1",
    spec: { n: 2, m: 3 },
    diagonals: [[1, 4], [1, 6], [2, 5], [3, 6], [3, 10], [5, 10]],
  },
  frame: {
    version: "1",
    spec: { n: 2, m: 3 },
    diagonals: [],
  },
  initial: {
    version: "1",
    spec: { n: 2, m: 3 },
    diagonals: [[6, 9], [7, 10]],
  },
  steps: [],
};

export const NOT_CLOSED_ERROR: ErrorBody = {
  code: "not_closed",
  message: "initial configuration is not closed; its closure is suggested",
  offending: [[2, 5]],
  suggestion: [[1, 4], [1, 6], [2, 5], [3, 6]],
};

export const CLOSED_PAGE_0: ClosedPage = {
  spec: { n: 2, m: 3 },
  kind: "closed",
  page: 0,
  pageSize: 6,
  total: 317,
  items: [
    [],
    [[7, 10]],
    [[6, 9]],
    [[6, 9], [7, 10]],
    [[5, 10]],
    [[5, 10], [7, 10]],
  ],
  hasMore: true,
};
