// Live session against the bridge: one socket, drag coalescing, monotonic
// frame handling, and a connection banner hook.

import { DragCoalescer, DragCoords } from "./coalesce.js";
import {
  ConstructionDocument,
  ErrorFrame,
  RequestFrame,
  SceneFrame,
  checkExtendedRequest,
  decodeFrame,
  dragRequest,
  encodeFrame,
  loadRequest,
  probeRequest,
} from "./protocol.js";

// Narrow view of a WebSocket so tests can substitute a fake or a raw socket.
export interface SocketLike {
  send(data: string): void;
  close(): void;
  onmessage: ((ev: { data: string }) => void) | null;
  onclose: (() => void) | null;
  onopen: (() => void) | null;
  onerror: ((ev: unknown) => void) | null;
}

export interface SessionEvents {
  onScene?: (scene: SceneFrame) => void;
  onError?: (err: ErrorFrame) => void;
  onConnectionLoss?: () => void;
  onOpen?: () => void;
}

export class Session {
  connected = false;
  private coalescer: DragCoalescer;
  private lastFrame = -1;
  // every request yields exactly one response, in order; the queue lets the
  // coalescer acknowledge only its own drags
  private outstanding: string[] = [];

  constructor(private socket: SocketLike, private events: SessionEvents = {}) {
    this.coalescer = new DragCoalescer((id, coords) => {
      this.sendFrame(dragRequest(id, coords));
    });
    socket.onopen = () => {
      this.connected = true;
      this.events.onOpen?.();
    };
    socket.onmessage = (ev) => this.receive(ev.data);
    socket.onclose = () => {
      this.connected = false;
      this.coalescer.reset();
      this.events.onConnectionLoss?.();
    };
    socket.onerror = () => {
      this.connected = false;
      this.events.onConnectionLoss?.();
    };
  }

  load(doc: ConstructionDocument): void {
    this.lastFrame = -1;
    this.coalescer.reset();
    this.sendFrame(loadRequest(doc));
  }

  drag(id: string, coords: DragCoords): void {
    if (!this.connected) return; // drags disabled while disconnected
    this.coalescer.request(id, coords);
  }

  probe(id: string): void {
    this.sendFrame(probeRequest(id));
  }

  checkExtended(id: string, n = 5, seed = 0): void {
    this.sendFrame(checkExtendedRequest(id, n, seed));
  }

  get dragInFlight(): boolean {
    return this.coalescer.hasInFlight;
  }

  private sendFrame(msg: RequestFrame): void {
    this.outstanding.push(msg.type);
    this.socket.send(encodeFrame(msg));
  }

  private receive(raw: string): void {
    let frame;
    try {
      frame = decodeFrame(raw);
    } catch {
      return;
    }
    const requestType = this.outstanding.shift();
    if (requestType === "drag") {
      this.coalescer.acknowledge();
    }
    if (frame.type === "error") {
      this.events.onError?.(frame);
      return;
    }
    // a stale frame must never reach the renderer
    if (frame.frame <= this.lastFrame) return;
    this.lastFrame = frame.frame;
    this.events.onScene?.(frame);
  }
}

export function connect(endpoint: string, events: SessionEvents): Session {
  const socket = new WebSocket(endpoint) as unknown as SocketLike;
  return new Session(socket, events);
}
