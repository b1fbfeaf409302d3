// Thin client for the workbench HTTP service. The fetch function is
// injectable so tests can run against a scripted service.

import {
  ClosedPage,
  Direction,
  Envelope,
  ErrorBody,
  MutateView,
  Pair,
  SessionView,
  Spec,
  UndoView,
} from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ServiceFailure extends Error {
  status: number;
  code: string;
  offending?: Pair[];
  suggestion?: Pair[];

  constructor(status: number, body: ErrorBody) {
    super(body.message);
    this.name = "ServiceFailure";
    this.status = status;
    this.code = body.code;
    this.offending = body.offending;
    this.suggestion = body.suggestion;
  }
}

async function parse<T>(resp: Response): Promise<T> {
  if (resp.ok) {
    return (await resp.json()) as T;
  }
  let body: ErrorBody;
  try {
    body = (await resp.json()) as ErrorBody;
  } catch {
    body = { code: "http_" + resp.status, message: resp.statusText };
  }
  throw new ServiceFailure(resp.status, body);
}

export type InitialChoice = Pair[] | "empty" | "random-closed" | SessionView;

export class ServiceClient {
  baseUrl: string;
  private fetchFn: FetchLike;

  constructor(baseUrl: string, fetchFn?: FetchLike) {
    this.baseUrl = baseUrl.replace(/\/+$/, "");
    this.fetchFn = fetchFn ?? ((url, init) => fetch(url, init));
  }

  private post<T>(path: string, body: unknown): Promise<T> {
    return this.fetchFn(this.baseUrl + path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    }).then((resp) => parse<T>(resp));
  }

  private get<T>(path: string): Promise<T> {
    return this.fetchFn(this.baseUrl + path).then((resp) => parse<T>(resp));
  }

  createSession(spec: Spec, initial: InitialChoice, seed?: number): Promise<SessionView> {
    const body: Record<string, unknown> = { spec, initial };
    if (seed !== undefined) {
      body.seed = seed;
    }
    return this.post<SessionView>("/sessions", body);
  }

  /** Post a previously fetched view back verbatim to restore it. */
  restoreSnapshot(snapshot: SessionView): Promise<SessionView> {
    return this.post<SessionView>("/sessions", snapshot);
  }

  getSession(id: string): Promise<SessionView> {
    return this.get<SessionView>("/sessions/" + id);
  }

  getFrame(id: string): Promise<Envelope> {
    return this.get<Envelope>("/sessions/" + id + "/frame");
  }

  mutate(id: string, cut: Pair[], direction: Direction): Promise<MutateView> {
    return this.post<MutateView>("/sessions/" + id + "/mutate", {
      diagonals: cut,
      direction,
    });
  }

  undo(id: string): Promise<UndoView> {
    return this.post<UndoView>("/sessions/" + id + "/undo", {});
  }

  closedSets(
    spec: Spec,
    page: number,
    pageSize: number,
    kind: string = "closed",
  ): Promise<ClosedPage> {
    const query = `?page=${page}&pageSize=${pageSize}&kind=${encodeURIComponent(kind)}`;
    return this.get<ClosedPage>(`/specs/${spec.n}/${spec.m}/closed` + query);
  }

  renderUrl(id: string, highlight?: string): string {
    const query = highlight ? "?format=svg&highlight=" + highlight : "?format=svg";
    return this.baseUrl + "/sessions/" + id + "/render" + query;
  }
}
