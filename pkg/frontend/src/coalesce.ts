// Drag coalescing: pointer-move events arrive faster than the bridge answers,
// so at most one drag request may be unacknowledged; the newest position
// waits in a single slot and is flushed when the acknowledgement arrives.

export type DragCoords = [number, number, number];

export class DragCoalescer {
  private inFlight = false;
  private pending: { id: string; coords: DragCoords } | null = null;

  constructor(private send: (id: string, coords: DragCoords) => void) {}

  request(id: string, coords: DragCoords): void {
    if (this.inFlight) {
      this.pending = { id, coords };
      return;
    }
    this.inFlight = true;
    this.send(id, coords);
  }

  acknowledge(): void {
    if (this.pending !== null) {
      const { id, coords } = this.pending;
      this.pending = null;
      this.send(id, coords);
      return; // still in flight with the flushed drag
    }
    this.inFlight = false;
  }

  get hasInFlight(): boolean {
    return this.inFlight;
  }

  reset(): void {
    this.inFlight = false;
    this.pending = null;
  }
}
