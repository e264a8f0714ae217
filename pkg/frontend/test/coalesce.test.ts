import { describe, expect, it } from "vitest";

import { DragCoalescer, DragCoords } from "../src/coalesce.js";

function tracked() {
  const sent: { id: string; coords: DragCoords }[] = [];
  const c = new DragCoalescer((id, coords) => sent.push({ id, coords }));
  return { sent, c };
}

describe("drag coalescing", () => {
  it("sends the first drag immediately", () => {
    const { sent, c } = tracked();
    c.request("B", [1, 0, 1]);
    expect(sent).toHaveLength(1);
    expect(c.hasInFlight).toBe(true);
  });

  it("keeps at most one drag in flight and drops intermediate positions", () => {
    const { sent, c } = tracked();
    c.request("B", [1, 0, 1]);
    c.request("B", [1.1, 0, 1]);
    c.request("B", [1.2, 0, 1]);
    c.request("B", [1.3, 0, 1]);
    expect(sent).toHaveLength(1); // nothing else until acknowledged
    c.acknowledge();
    expect(sent).toHaveLength(2); // only the newest position was flushed
    expect(sent[1].coords).toEqual([1.3, 0, 1]);
    c.acknowledge();
    expect(sent).toHaveLength(2);
    expect(c.hasInFlight).toBe(false);
  });

  it("a fresh drag after settling goes straight out", () => {
    const { sent, c } = tracked();
    c.request("B", [1, 0, 1]);
    c.acknowledge();
    c.request("B", [2, 0, 1]);
    expect(sent).toHaveLength(2);
  });

  it("reset clears in-flight state", () => {
    const { sent, c } = tracked();
    c.request("B", [1, 0, 1]);
    c.request("B", [2, 0, 1]);
    c.reset();
    c.request("B", [3, 0, 1]);
    expect(sent.map((s) => s.coords[0])).toEqual([1, 3]);
  });
});
