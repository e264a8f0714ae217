// Wire protocol of the lcgeo bridge: UTF-8 JSON frames with v: 1, one
// message per WebSocket text frame.

export const PROTOCOL_VERSION = 1;

export type WireCoord = number | { re: number; im: number };

export interface DocumentElement {
  id: string;
  kind: string;
  args?: string[];
  literal?: WireCoord[];
  branch?: number;
  radius?: number;
}

export interface ConstructionDocument {
  elements: DocumentElement[];
  paths?: { element: string; from: WireCoord[]; to: WireCoord[] }[];
}

export type ElementStatus = "regular" | "degenerate" | "removable" | "not-removable";

export interface SceneElement {
  id: string;
  kind: string;
  coords: WireCoord[];
  status: ElementStatus;
  order?: string;
  radius?: number;
}

export interface SceneFrame {
  v: number;
  type: "scene";
  frame: number;
  elements: SceneElement[];
}

export interface ErrorFrame {
  v: number;
  type: "error";
  code: string;
  detail: string;
}

export type ResponseFrame = SceneFrame | ErrorFrame;

export type RequestFrame =
  | { v: 1; type: "load"; document: ConstructionDocument }
  | { v: 1; type: "drag"; id: string; coords: [number, number, number] }
  | { v: 1; type: "probe"; id: string }
  | { v: 1; type: "check-extended"; id: string; n: number; seed: number }
  | { v: 1; type: "set-policy"; policy: "auto" | "manual" };

export function re(c: WireCoord): number {
  return typeof c === "number" ? c : c.re;
}

export function im(c: WireCoord): number {
  return typeof c === "number" ? 0 : c.im;
}

export function magnitude(c: WireCoord): number {
  return Math.hypot(re(c), im(c));
}

export function encodeFrame(msg: RequestFrame): string {
  return JSON.stringify(msg);
}

export function decodeFrame(raw: string): ResponseFrame {
  let parsed: unknown;
  try {
    parsed = JSON.parse(raw);
  } catch {
    throw new Error(`unparseable frame: ${raw.slice(0, 80)}`);
  }
  const frame = parsed as { v?: number; type?: string };
  if (frame.v !== PROTOCOL_VERSION) {
    throw new Error(`unsupported protocol version: ${frame.v}`);
  }
  if (frame.type === "scene" || frame.type === "error") {
    return parsed as ResponseFrame;
  }
  throw new Error(`unknown frame type: ${frame.type}`);
}

export function loadRequest(document: ConstructionDocument): RequestFrame {
  return { v: 1, type: "load", document };
}

export function dragRequest(id: string, coords: [number, number, number]): RequestFrame {
  return { v: 1, type: "drag", id, coords };
}

export function probeRequest(id: string): RequestFrame {
  return { v: 1, type: "probe", id };
}

export function checkExtendedRequest(id: string, n = 5, seed = 0): RequestFrame {
  return { v: 1, type: "check-extended", id, n, seed };
}
