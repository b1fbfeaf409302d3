// Explorer controller. Holds the last service response plus the local
// selection, emits fresh drawing models after every change, and keeps the
// session honest: at most one mutation in flight, stale responses dropped.

import { InitialChoice, ServiceClient, ServiceFailure } from "./api.js";
import {
  deriveModel,
  DrawingModel,
  pruneSelection,
  toggleSelection,
} from "./state.js";
import {
  ClosedPage,
  Direction,
  Moved,
  Pair,
  SessionView,
  Spec,
} from "./types.js";

export interface ExplorerEvents {
  view(model: DrawingModel): void;
  /** fired before the follow-up view event so the chords can glide over */
  animate(moved: Moved[], direction: Direction, after: SessionView): void;
  gallery(page: ClosedPage): void;
  error(failure: ServiceFailure): void;
  busy(flag: boolean): void;
}

export class ExplorerApp {
  private client: ServiceClient;
  private events: ExplorerEvents;
  private view: SessionView | null = null;
  private selected = new Set<string>();
  private viewTicket = 0;
  private galleryTicket = 0;
  private mutationInFlight = false;

  constructor(client: ServiceClient, events: ExplorerEvents) {
    this.client = client;
    this.events = events;
  }

  currentView(): SessionView | null {
    return this.view;
  }

  currentModel(): DrawingModel | null {
    return this.view ? deriveModel(this.view, this.selected) : null;
  }

  private accept(view: SessionView): void {
    this.view = view;
    this.selected = pruneSelection(this.selected, view.frame.diagonals);
    this.events.view(deriveModel(view, this.selected));
  }

  private async run(task: () => Promise<void>): Promise<void> {
    this.events.busy(true);
    try {
      await task();
    } catch (err) {
      if (err instanceof ServiceFailure) {
        this.events.error(err);
      } else {
        throw err;
      }
    } finally {
      this.events.busy(false);
    }
  }

  /** Start a session; stale responses from superseded loads are dropped. */
  loadSession(spec: Spec, initial: InitialChoice, seed?: number): Promise<void> {
    const ticket = ++this.viewTicket;
    this.selected = new Set();
    return this.run(async () => {
      const view = await this.client.createSession(spec, initial, seed);
      if (ticket !== this.viewTicket) {
        return;
      }
      this.accept(view);
    });
  }

  /** Restore a previously saved view, replaying its recorded steps. */
  loadSnapshot(snapshot: SessionView): Promise<void> {
    const ticket = ++this.viewTicket;
    this.selected = new Set();
    return this.run(async () => {
      const view = await this.client.restoreSnapshot(snapshot);
      if (ticket !== this.viewTicket) {
        return;
      }
      this.accept(view);
    });
  }

  /**
   * Toggle a chord in the rotation cut. Only frame chords are selectable;
   * returns false (and changes nothing) for anything else.
   */
  toggleSelect(pair: Pair): boolean {
    if (!this.view) {
      return false;
    }
    const next = toggleSelection(this.selected, pair, this.view.frame.diagonals);
    const changed =
      next.size !== this.selected.size || [...next].some((k) => !this.selected.has(k));
    if (!changed) {
      return false;
    }
    this.selected = next;
    this.events.view(deriveModel(this.view, this.selected));
    return true;
  }

  selection(): Pair[] {
    if (!this.view) {
      return [];
    }
    return this.view.frame.diagonals.filter((p) =>
      this.selected.has(p[0] + "," + p[1]),
    );
  }

  /**
   * Rotate the configuration around the selected cut. Refused (returns
   * false immediately) while another mutation is still in flight.
   */
  applyMutation(direction: Direction): Promise<boolean> {
    if (!this.view || this.mutationInFlight) {
      return Promise.resolve(false);
    }
    const id = this.view.id;
    const cut = this.selection();
    const ticket = ++this.viewTicket;
    this.mutationInFlight = true;
    let applied = false;
    return this.run(async () => {
      try {
        const after = await this.client.mutate(id, cut, direction);
        if (ticket !== this.viewTicket) {
          return;
        }
        this.events.animate(after.moved, direction, after);
        this.accept(after);
        applied = true;
      } finally {
        this.mutationInFlight = false;
      }
    }).then(() => applied);
  }

  /** Undo the most recent rotation. */
  stepBack(): Promise<boolean> {
    if (!this.view || this.mutationInFlight) {
      return Promise.resolve(false);
    }
    const id = this.view.id;
    const ticket = ++this.viewTicket;
    this.mutationInFlight = true;
    let undone = false;
    return this.run(async () => {
      try {
        const after = await this.client.undo(id);
        if (ticket !== this.viewTicket) {
          return;
        }
        undone = after.undone;
        this.accept(after);
      } finally {
        this.mutationInFlight = false;
      }
    }).then(() => undone);
  }

  /** Fetch one gallery page of closed (or cluster-tilting) sets. */
  browseClosed(
    spec: Spec,
    page: number,
    pageSize: number,
    kind: string = "closed",
  ): Promise<void> {
    const ticket = ++this.galleryTicket;
    return this.run(async () => {
      const result = await this.client.closedSets(spec, page, pageSize, kind);
      if (ticket !== this.galleryTicket) {
        return;
      }
      this.events.gallery(result);
    });
  }

  /** Fork a gallery entry into a fresh session. */
  fork(spec: Spec, item: Pair[]): Promise<void> {
    return this.loadSession(spec, item);
  }
}
