import { describe, expect, it } from "vitest";

import { FetchLike, ServiceClient, ServiceFailure } from "../src/api.js";
import { FIVE_CHORD_SESSION, NOT_CLOSED_ERROR } from "./fixtures.js";

interface Call {
  url: string;
  method: string;
  body: unknown;
}

function recordingFetch(
  status: number,
  payload: unknown,
): { fetch: FetchLike; calls: Call[] } {
  const calls: Call[] = [];
  const fetchFn: FetchLike = async (url, init) => {
    calls.push({
      url,
      method: init?.method ?? "GET",
      body: init?.body ? JSON.parse(String(init.body)) : undefined,
    });
    return new Response(JSON.stringify(payload), {
      status,
      headers: { "content-type": "application/json" },
    });
  };
  return { fetch: fetchFn, calls };
}

describe("session requests", () => {
  it("posts the spec and initial chords", async () => {
    const { fetch, calls } = recordingFetch(201, FIVE_CHORD_SESSION);
    const client = new ServiceClient("http://svc:8777/", fetch);
    const view = await client.createSession({ n: 2, m: 3 }, [[1, 4], [1, 6]]);
    expect(calls).toHaveLength(1);
    expect(calls[0].url).toBe("http://svc:8777/sessions");
    expect(calls[0].method).toBe("POST");
    expect(calls[0].body).toEqual({
      spec: { n: 2, m: 3 },
      initial: [[1, 4], [1, 6]],
    });
    expect(view.id).toBe(FIVE_CHORD_SESSION.id);
  });

  it("passes the seed for random starts", async () => {
    const { fetch, calls } = recordingFetch(201, FIVE_CHORD_SESSION);
    const client = new ServiceClient("http://svc:8777", fetch);
    await client.createSession({ n: 2, m: 3 }, "random-closed", 7);
    expect(calls[0].body).toEqual({
      spec: { n: 2, m: 3 },
      initial: "random-closed",
      seed: 7,
    });
  });

  it("posts a saved view back verbatim to restore it", async () => {
    const { fetch, calls } = recordingFetch(201, FIVE_CHORD_SESSION);
    const client = new ServiceClient("http://svc:8777", fetch);
    await client.restoreSnapshot(FIVE_CHORD_SESSION);
    expect(calls[0].url).toBe("http://svc:8777/sessions");
    expect(calls[0].body).toEqual(FIVE_CHORD_SESSION);
  });

  it("sends the cut and direction on mutate", async () => {
    const { fetch, calls } = recordingFetch(200, FIVE_CHORD_SESSION);
    const client = new ServiceClient("http://svc:8777", fetch);
    await client.mutate("abc123", [[1, 6]], "backward");
    expect(calls[0].url).toBe("http://svc:8777/sessions/abc123/mutate");
    expect(calls[0].body).toEqual({ diagonals: [[1, 6]], direction: "backward" });
  });

  it("hits the undo endpoint", async () => {
    const { fetch, calls } = recordingFetch(200, FIVE_CHORD_SESSION);
    const client = new ServiceClient("http://svc:8777", fetch);
    await client.undo("abc123");
    expect(calls[0].url).toBe("http://svc:8777/sessions/abc123/undo");
    expect(calls[0].method).toBe("POST");
  });

  it("builds the gallery query string", async () => {
    const { fetch, calls } = recordingFetch(200, {});
    const client = new ServiceClient("http://svc:8777", fetch);
    await client.closedSets({ n: 2, m: 3 }, 4, 50, "cluster-tilting");
    expect(calls[0].url).toBe(
      "http://svc:8777/specs/2/3/closed?page=4&pageSize=50&kind=cluster-tilting",
    );
  });

  it("builds render URLs without fetching", () => {
    const client = new ServiceClient("http://svc:8777", async () => {
      throw new Error("no fetch expected");
    });
    expect(client.renderUrl("abc123")).toBe(
      "http://svc:8777/sessions/abc123/render?format=svg",
    );
    expect(client.renderUrl("abc123", "frame")).toBe(
      "http://svc:8777/sessions/abc123/render?format=svg&highlight=frame",
    );
  });
});

describe("error mapping", () => {
  it("carries the service's code, offenders and suggestion", async () => {
    const { fetch } = recordingFetch(422, NOT_CLOSED_ERROR);
    const client = new ServiceClient("http://svc:8777", fetch);
    let failure: ServiceFailure | null = null;
    try {
      await client.createSession({ n: 2, m: 3 }, [[1, 4], [1, 6], [3, 6]]);
    } catch (err) {
      failure = err as ServiceFailure;
    }
    expect(failure).toBeInstanceOf(ServiceFailure);
    expect(failure!.status).toBe(422);
    expect(failure!.code).toBe("not_closed");
    expect(failure!.offending).toEqual([[2, 5]]);
    expect(failure!.suggestion).toEqual([[1, 4], [1, 6], [2, 5], [3, 6]]);
  });

  it("survives a non-JSON error body", async () => {
    const fetchFn: FetchLike = async () =>
      new Response("gateway exploded", { status: 502, statusText: "Bad Gateway" });
    const client = new ServiceClient("http://svc:8777", fetchFn);
    let failure: ServiceFailure | null = null;
    try {
      await client.getSession("abc123");
    } catch (err) {
      failure = err as ServiceFailure;
    }
    expect(failure!.code).toBe("http_502");
  });
});
