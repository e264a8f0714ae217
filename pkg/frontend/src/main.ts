// Viewer entry point: connect to the bridge, offer the bundled scenes, and
// wire pointer events into coalesced drags.

import { connect, Session } from "./session.js";
import { SceneModel, Viewport, clampToLine, toWorld } from "./scene.js";
import { re } from "./protocol.js";
import { renderScene } from "./render.js";
import { DEMO_SCENES, DemoScene } from "./scenes.js";

const canvas = document.getElementById("view") as HTMLCanvasElement;
const ctx = canvas.getContext("2d")!;
const banner = document.getElementById("banner") as HTMLDivElement;
const picker = document.getElementById("scene-picker") as HTMLSelectElement;
const hint = document.getElementById("hint") as HTMLDivElement;

const viewport: Viewport = {
  width: canvas.width,
  height: canvas.height,
  worldCenter: [1, 0],
  worldWidth: 8,
};
const model = new SceneModel(viewport);
let session: Session;
let currentScene: DemoScene = DEMO_SCENES[0];
let dragging: string | null = null;
// literal coordinates of lines, for clamping semi-free handles client-side
let lineLiterals = new Map<string, [number, number, number]>();

function loadScene(scene: DemoScene): void {
  currentScene = scene;
  viewport.worldCenter = scene.worldCenter;
  viewport.worldWidth = scene.worldWidth;
  model.setDocument(scene.document);
  lineLiterals = new Map();
  for (const el of scene.document.elements) {
    if (el.kind === "FixedLine" && el.literal) {
      lineLiterals.set(el.id, [re(el.literal[0]), re(el.literal[1]), re(el.literal[2])]);
    }
  }
  hint.textContent = scene.hint;
  session.load(scene.document);
}

for (const scene of DEMO_SCENES) {
  const opt = document.createElement("option");
  opt.value = scene.name;
  opt.textContent = scene.title;
  picker.appendChild(opt);
}
picker.addEventListener("change", () => {
  const scene = DEMO_SCENES.find((s) => s.name === picker.value);
  if (scene) loadScene(scene);
});

const endpoint = `ws://${location.hostname || "127.0.0.1"}:8765`;
session = connect(endpoint, {
  onOpen: () => {
    banner.style.display = "none";
    loadScene(currentScene);
  },
  onScene: (frame) => {
    if (model.apply(frame)) renderScene(ctx, model);
  },
  onError: (err) => {
    hint.textContent = `bridge error: ${err.code} (${err.detail})`;
  },
  onConnectionLoss: () => {
    banner.textContent = "connection to the bridge lost: drags disabled";
    banner.style.display = "block";
    dragging = null;
  },
});

canvas.addEventListener("pointerdown", (ev) => {
  const rect = canvas.getBoundingClientRect();
  const item = model.itemAt(ev.clientX - rect.left, ev.clientY - rect.top);
  if (item) {
    dragging = item.id;
    canvas.setPointerCapture(ev.pointerId);
  }
});

canvas.addEventListener("pointermove", (ev) => {
  if (!dragging || !session.connected) return;
  const rect = canvas.getBoundingClientRect();
  let [wx, wy] = toWorld(viewport, ev.clientX - rect.left, ev.clientY - rect.top);
  const lineId = model.constraintLineOf(dragging);
  if (lineId) {
    const lv = lineLiterals.get(lineId);
    if (lv) [wx, wy] = clampToLine(lv[0], lv[1], lv[2], wx, wy);
  }
  session.drag(dragging, [wx, wy, 1]);
});

canvas.addEventListener("pointerup", () => {
  dragging = null;
});

canvas.addEventListener("dblclick", (ev) => {
  // double-click any element label region probes the nearest dependent element
  const rect = canvas.getBoundingClientRect();
  const sx = ev.clientX - rect.left;
  const sy = ev.clientY - rect.top;
  let best: { id: string; dist: number } | null = null;
  for (const item of model.items) {
    if (!item.shape || item.draggable) continue;
    const s = item.shape;
    const px = s.kind === "point" || s.kind === "far-point" ? s.x : s.kind === "circle" ? s.cx : (s.x1 + s.x2) / 2;
    const py = s.kind === "point" || s.kind === "far-point" ? s.y : s.kind === "circle" ? s.cy : (s.y1 + s.y2) / 2;
    const dd = Math.hypot(px - sx, py - sy);
    if (!best || dd < best.dist) best = { id: item.id, dist: dd };
  }
  if (best) session.checkExtended(best.id);
});
