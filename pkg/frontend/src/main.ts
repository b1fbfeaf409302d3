// Browser wiring: buttons and inputs on one side, the ExplorerApp
// controller on the other. Runs against a workbench service started with
// `ncotor serve` (CORS is open on the service side).

import { ServiceClient } from "./api.js";
import { ExplorerApp } from "./app.js";
import { DrawingModel } from "./state.js";
import { ClosedPage, Pair, Spec } from "./types.js";
import { animateMoves, renderDrawing } from "./svg.js";

function el<T extends HTMLElement>(id: string): T {
  return document.getElementById(id) as T;
}

const svg = el<HTMLElement>("polygon-canvas");
const statusLine = el<HTMLParagraphElement>("status");
const stepCounter = el<HTMLSpanElement>("step-count");
const selectionLine = el<HTMLSpanElement>("selection");
const galleryList = el<HTMLUListElement>("gallery-items");
const galleryMeta = el<HTMLSpanElement>("gallery-meta");
const baseUrlInput = el<HTMLInputElement>("base-url");
const specN = el<HTMLInputElement>("spec-n");
const specM = el<HTMLInputElement>("spec-m");
const chordInput = el<HTMLInputElement>("chord-input");
const galleryKind = el<HTMLSelectElement>("gallery-kind");

const actionButtons = ["load-empty", "load-random", "load-custom",
  "rotate-backward", "rotate-forward", "undo"].map((id) => el<HTMLButtonElement>(id));

let lastModel: DrawingModel | null = null;
let pendingModel: DrawingModel | null = null;
let animating = false;
let galleryPage = 0;

function readSpec(): Spec {
  return { n: Number(specN.value), m: Number(specM.value) };
}

function paint(model: DrawingModel): void {
  lastModel = model;
  renderDrawing(document, svg as unknown as Element, model, {
    onChordClick: (pair) => app.toggleSelect(pair),
  });
  stepCounter.textContent = String(model.stepCount);
  selectionLine.textContent = model.selectedKeys.length
    ? model.selectedKeys.map((k) => "(" + k + ")").join(" ")
    : "none (empty cut rotates everything)";
}

function makeApp(): ExplorerApp {
  const client = new ServiceClient(baseUrlInput.value);
  return new ExplorerApp(client, {
    view(model) {
      if (animating) {
        pendingModel = model;
        return;
      }
      paint(model);
    },
    animate(moved, direction) {
      if (!lastModel) {
        return;
      }
      animating = true;
      animateMoves(
        svg as unknown as Element,
        lastModel,
        moved,
        direction,
        350,
        (cb) => requestAnimationFrame(cb),
        () => {
          animating = false;
          if (pendingModel) {
            paint(pendingModel);
            pendingModel = null;
          }
        },
      );
    },
    gallery(page) {
      showGallery(page);
    },
    error(failure) {
      let text = failure.code + ": " + failure.message;
      if (failure.suggestion) {
        text += " — closure: " + failure.suggestion.map((p) => "(" + p + ")").join(" ");
      }
      statusLine.textContent = text;
      statusLine.className = "error";
    },
    busy(flag) {
      for (const button of actionButtons) {
        button.disabled = flag;
      }
      if (flag) {
        statusLine.textContent = "…";
        statusLine.className = "";
      } else if (statusLine.textContent === "…") {
        statusLine.textContent = "ready";
      }
    },
  });
}

let app = makeApp();
baseUrlInput.addEventListener("change", () => {
  app = makeApp();
});

function parseChords(text: string): Pair[] {
  const pairs: Pair[] = [];
  for (const token of text.split(/[;\s]+/)) {
    if (!token) {
      continue;
    }
    const [a, b] = token.split(",").map(Number);
    pairs.push([a, b]);
  }
  return pairs;
}

function showGallery(page: ClosedPage): void {
  galleryList.innerHTML = "";
  galleryMeta.textContent =
    `page ${page.page} — ${page.items.length} of ${page.total} ${page.kind} sets`;
  page.items.forEach((item) => {
    const li = document.createElement("li");
    const button = document.createElement("button");
    button.textContent = item.length
      ? item.map((p) => "(" + p + ")").join(" ")
      : "(empty set)";
    button.addEventListener("click", () => app.fork(page.spec, item));
    li.appendChild(button);
    galleryList.appendChild(li);
  });
}

el<HTMLButtonElement>("load-empty").addEventListener("click", () => {
  app.loadSession(readSpec(), "empty");
});
el<HTMLButtonElement>("load-random").addEventListener("click", () => {
  app.loadSession(readSpec(), "random-closed", Math.floor(Math.random() * 1e9));
});
el<HTMLButtonElement>("load-custom").addEventListener("click", () => {
  app.loadSession(readSpec(), parseChords(chordInput.value));
});
el<HTMLButtonElement>("rotate-backward").addEventListener("click", () => {
  app.applyMutation("backward");
});
el<HTMLButtonElement>("rotate-forward").addEventListener("click", () => {
  app.applyMutation("forward");
});
el<HTMLButtonElement>("undo").addEventListener("click", () => {
  app.stepBack();
});
el<HTMLButtonElement>("gallery-load").addEventListener("click", () => {
  galleryPage = 0;
  app.browseClosed(readSpec(), galleryPage, 12, galleryKind.value);
});
el<HTMLButtonElement>("gallery-prev").addEventListener("click", () => {
  if (galleryPage > 0) {
    galleryPage -= 1;
    app.browseClosed(readSpec(), galleryPage, 12, galleryKind.value);
  }
});
el<HTMLButtonElement>("gallery-next").addEventListener("click", () => {
  galleryPage += 1;
  app.browseClosed(readSpec(), galleryPage, 12, galleryKind.value);
});

statusLine.textContent = "ready";
