// Scene model: projective bridge coordinates mapped into the z = 1 affine
// chart for display, with almost-far points turned into direction glyphs at
// the viewport edge and status badges attached to every resolved element.

import {
  ConstructionDocument,
  SceneElement,
  SceneFrame,
  WireCoord,
  magnitude,
  re,
} from "./protocol.js";

export interface Viewport {
  width: number;
  height: number;
  // world rectangle shown by the canvas
  worldCenter: [number, number];
  worldWidth: number;
}

export interface ScreenPoint {
  kind: "point";
  x: number;
  y: number;
}

export interface EdgeGlyph {
  kind: "far-point";
  x: number; // position on the viewport edge
  y: number;
  angle: number; // direction of the far point
}

export interface ScreenSegment {
  kind: "line";
  x1: number;
  y1: number;
  x2: number;
  y2: number;
}

export interface ScreenCircle {
  kind: "circle";
  cx: number;
  cy: number;
  r: number;
}

export type Shape = ScreenPoint | EdgeGlyph | ScreenSegment | ScreenCircle;

export interface SceneItem {
  id: string;
  elementKind: string;
  status: SceneElement["status"];
  badge: string | null;
  shape: Shape | null;
  draggable: boolean;
}

const DRAGGABLE = new Set(["FreePoint", "SemiFreePointOnLine"]);
const LINE_KINDS = new Set(["FixedLine", "LineJoin"]);
const FAR_RATIO = 1e-6;

export function toWorld(vp: Viewport, sx: number, sy: number): [number, number] {
  const scale = vp.worldWidth / vp.width;
  return [
    vp.worldCenter[0] + (sx - vp.width / 2) * scale,
    vp.worldCenter[1] - (sy - vp.height / 2) * scale,
  ];
}

export function toScreen(vp: Viewport, wx: number, wy: number): [number, number] {
  const scale = vp.width / vp.worldWidth;
  return [
    vp.width / 2 + (wx - vp.worldCenter[0]) * scale,
    vp.height / 2 - (wy - vp.worldCenter[1]) * scale,
  ];
}

function worldRect(vp: Viewport): { x0: number; y0: number; x1: number; y1: number } {
  const halfW = vp.worldWidth / 2;
  const halfH = (vp.worldWidth * vp.height) / vp.width / 2;
  return {
    x0: vp.worldCenter[0] - halfW,
    x1: vp.worldCenter[0] + halfW,
    y0: vp.worldCenter[1] - halfH,
    y1: vp.worldCenter[1] + halfH,
  };
}

/** Clip the line ax + by + c = 0 (affine chart) to a world rectangle. */
export function clipLine(
  a: number,
  b: number,
  c: number,
  rect: { x0: number; y0: number; x1: number; y1: number }
): [number, number, number, number] | null {
  const pts: [number, number][] = [];
  const push = (x: number, y: number) => {
    const eps = 1e-9 * (Math.abs(rect.x1 - rect.x0) + Math.abs(rect.y1 - rect.y0));
    if (
      x >= rect.x0 - eps && x <= rect.x1 + eps &&
      y >= rect.y0 - eps && y <= rect.y1 + eps
    ) {
      if (!pts.some(([px, py]) => Math.hypot(px - x, py - y) < eps * 10)) {
        pts.push([x, y]);
      }
    }
  };
  if (Math.abs(b) > 1e-12) {
    push(rect.x0, (-c - a * rect.x0) / b);
    push(rect.x1, (-c - a * rect.x1) / b);
  }
  if (Math.abs(a) > 1e-12) {
    push((-c - b * rect.y0) / a, rect.y0);
    push((-c - b * rect.y1) / a, rect.y1);
  }
  if (pts.length < 2) return null;
  // the two most distant candidates span the visible chord
  let best: [number, number, number, number] | null = null;
  let bestD = -1;
  for (let i = 0; i < pts.length; i++) {
    for (let j = i + 1; j < pts.length; j++) {
      const dd = Math.hypot(pts[i][0] - pts[j][0], pts[i][1] - pts[j][1]);
      if (dd > bestD) {
        bestD = dd;
        best = [pts[i][0], pts[i][1], pts[j][0], pts[j][1]];
      }
    }
  }
  return bestD > 1e-9 ? best : null;
}

export function pointShape(vp: Viewport, coords: WireCoord[]): ScreenPoint | EdgeGlyph | null {
  const [x, y, z] = coords;
  const mz = magnitude(z);
  const mx = Math.max(magnitude(x), magnitude(y));
  if (mx === 0 && mz === 0) return null;
  if (mz <= FAR_RATIO * mx) {
    // far point: direction glyph pinned to the viewport edge
    const angle = Math.atan2(re(y), re(x));
    const rect = worldRect(vp);
    const cx = vp.worldCenter[0];
    const cy = vp.worldCenter[1];
    const halfW = (rect.x1 - rect.x0) / 2;
    const halfH = (rect.y1 - rect.y0) / 2;
    const t = Math.min(
      halfW / Math.max(Math.abs(Math.cos(angle)), 1e-12),
      halfH / Math.max(Math.abs(Math.sin(angle)), 1e-12)
    );
    const [sx, sy] = toScreen(vp, cx + 0.95 * t * Math.cos(angle), cy + 0.95 * t * Math.sin(angle));
    return { kind: "far-point", x: sx, y: sy, angle };
  }
  const ax = re(x) / re(z);
  const ay = re(y) / re(z);
  if (!isFinite(ax) || !isFinite(ay)) return null;
  const [sx, sy] = toScreen(vp, ax, ay);
  return { kind: "point", x: sx, y: sy };
}

export function lineShape(vp: Viewport, coords: WireCoord[]): ScreenSegment | null {
  const [a, b, c] = coords.map(re);
  if (Math.abs(a) < 1e-12 && Math.abs(b) < 1e-12) return null; // line at infinity
  const seg = clipLine(a, b, c, worldRect(vp));
  if (!seg) return null;
  const [p1x, p1y] = toScreen(vp, seg[0], seg[1]);
  const [p2x, p2y] = toScreen(vp, seg[2], seg[3]);
  return { kind: "line", x1: p1x, y1: p1y, x2: p2x, y2: p2y };
}

export function badgeText(el: SceneElement): string | null {
  if (el.status === "removable") {
    return el.order ? `removable (order ${el.order})` : "removable";
  }
  if (el.status === "not-removable") return "not removable";
  if (el.status === "degenerate") return "degenerate";
  return null;
}

export class SceneModel {
  items: SceneItem[] = [];
  frame = -1;
  private kinds = new Map<string, { kind: string; args: string[] }>();

  constructor(public viewport: Viewport) {}

  setDocument(doc: ConstructionDocument): void {
    this.kinds.clear();
    for (const el of doc.elements) {
      this.kinds.set(el.id, { kind: el.kind, args: el.args ?? [] });
    }
    this.items = [];
    this.frame = -1;
  }

  constraintLineOf(id: string): string | null {
    const meta = this.kinds.get(id);
    if (meta && meta.kind === "SemiFreePointOnLine") return meta.args[0] ?? null;
    return null;
  }

  /** Apply a scene frame; stale frames are rejected (monotonic counter). */
  apply(frame: SceneFrame): boolean {
    if (frame.frame <= this.frame) return false;
    this.frame = frame.frame;
    this.items = frame.elements.map((el) => this.toItem(el));
    return true;
  }

  private toItem(el: SceneElement): SceneItem {
    const allZero = el.coords.every((c) => magnitude(c) === 0);
    let shape: Shape | null = null;
    if (!allZero) {
      if (el.kind === "Circle") {
        const center = pointShape(this.viewport, el.coords);
        if (center && center.kind === "point" && el.radius !== undefined) {
          const rScreen = (el.radius * this.viewport.width) / this.viewport.worldWidth;
          shape = { kind: "circle", cx: center.x, cy: center.y, r: rScreen };
        }
      } else if (LINE_KINDS.has(el.kind)) {
        shape = lineShape(this.viewport, el.coords);
      } else {
        shape = pointShape(this.viewport, el.coords);
      }
    }
    return {
      id: el.id,
      elementKind: el.kind,
      status: el.status,
      badge: badgeText(el),
      shape,
      draggable: DRAGGABLE.has(el.kind),
    };
  }

  itemAt(sx: number, sy: number, radius = 12): SceneItem | null {
    for (const item of this.items) {
      if (!item.draggable || !item.shape || item.shape.kind !== "point") continue;
      if (Math.hypot(item.shape.x - sx, item.shape.y - sy) <= radius) return item;
    }
    return null;
  }
}

/** Project a world position onto a constraint line (a, b, c): the drag handle
 * of a semi-free point never leaves its line. */
export function clampToLine(
  a: number,
  b: number,
  c: number,
  wx: number,
  wy: number
): [number, number] {
  const n2 = a * a + b * b;
  if (n2 === 0) return [wx, wy];
  const t = (a * wx + b * wy + c) / n2;
  return [wx - t * a, wy - t * b];
}
