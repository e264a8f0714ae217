import { describe, expect, it } from "vitest";

import { Session, SocketLike } from "../src/session.js";
import { SceneFrame } from "../src/protocol.js";

class FakeSocket implements SocketLike {
  sent: string[] = [];
  onmessage: ((ev: { data: string }) => void) | null = null;
  onclose: (() => void) | null = null;
  onopen: (() => void) | null = null;
  onerror: ((ev: unknown) => void) | null = null;

  send(data: string): void {
    this.sent.push(data);
  }

  close(): void {
    this.onclose?.();
  }

  open(): void {
    this.onopen?.();
  }

  receive(frame: object): void {
    this.onmessage?.({ data: JSON.stringify(frame) });
  }
}

function scene(frame: number): SceneFrame {
  return { v: 1, type: "scene", frame, elements: [] };
}

function connected(events = {}) {
  const socket = new FakeSocket();
  const session = new Session(socket, events);
  socket.open();
  return { socket, session };
}

describe("session", () => {
  it("marks connected on open and loads documents", () => {
    const { socket, session } = connected();
    session.load({ elements: [] });
    expect(session.connected).toBe(true);
    expect(JSON.parse(socket.sent[0]).type).toBe("load");
  });

  it("delivers scenes in order and drops stale frames", () => {
    const frames: number[] = [];
    const { socket, session } = connected({ onScene: (s: SceneFrame) => frames.push(s.frame) });
    session.probe("j");
    socket.receive(scene(2));
    session.probe("j");
    socket.receive(scene(2)); // duplicate: must not re-render
    session.probe("j");
    socket.receive(scene(3));
    expect(frames).toEqual([2, 3]);
  });

  it("coalesces drags: at most one unacknowledged", () => {
    const { socket, session } = connected();
    session.drag("B", [1, 0, 1]);
    session.drag("B", [1.2, 0, 1]);
    session.drag("B", [1.4, 0, 1]);
    expect(socket.sent).toHaveLength(1);
    expect(session.dragInFlight).toBe(true);
    socket.receive(scene(1)); // acknowledges the first drag
    expect(socket.sent).toHaveLength(2);
    expect(JSON.parse(socket.sent[1]).coords[0]).toBeCloseTo(1.4);
  });

  it("does not let non-drag responses over-release the coalescer", () => {
    const { socket, session } = connected();
    session.drag("B", [1, 0, 1]); // drag in flight
    session.probe("j"); // second request queued behind it
    session.drag("B", [2, 0, 1]); // coalesced, pending
    socket.receive(scene(1)); // response to the drag -> flush pending
    expect(socket.sent.filter((s) => JSON.parse(s).type === "drag")).toHaveLength(2);
    socket.receive(scene(2)); // response to the probe: must NOT release
    expect(session.dragInFlight).toBe(true);
    socket.receive(scene(3)); // response to the flushed drag
    expect(session.dragInFlight).toBe(false);
  });

  it("disables drags after connection loss and raises the banner", () => {
    let lost = false;
    const { socket, session } = connected({ onConnectionLoss: () => (lost = true) });
    socket.close();
    expect(lost).toBe(true);
    expect(session.connected).toBe(false);
    session.drag("B", [1, 0, 1]);
    expect(socket.sent).toHaveLength(0);
  });

  it("surfaces protocol errors", () => {
    const errors: string[] = [];
    const { socket, session } = connected({ onError: (e: { code: string }) => errors.push(e.code) });
    session.probe("zzz");
    socket.receive({ v: 1, type: "error", code: "unknown-element", detail: "zzz" });
    expect(errors).toEqual(["unknown-element"]);
  });
});
