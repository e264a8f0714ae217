"""Live session protocol for interactive viewers.

One session per connection; requests are processed strictly in order and every
request yields exactly one response.  Frames are UTF-8 JSON objects carrying
``"v": 1``, one message per line (TCP) or per text frame (WebSocket).

Requests:  load{document}, drag{id, coords}, probe{id},
           check-extended{id, n, seed}, set-policy{policy}.
Responses: scene{frame, elements: [{id, coords, status, order?}]},
           error{code, detail}.

Under the default auto policy a drag re-evaluates the construction and every
degenerate dependent element is pushed through the extended continuation check
(with the construction's constraint projector and the session seed), so the
viewer always receives resolved coordinates or an explicit not-removable.
"""

from __future__ import annotations

import base64
import hashlib
import json
import socket
import socketserver
import struct
import threading
from dataclasses import dataclass, field
from typing import Optional

from .construct import (
    Construction,
    ConstructionError,
    EvalResult,
    constraint_projector,
    evaluate,
    spatial_map_for,
    _build,
)
from .desing import PerturbationSpec, ResolveStatus, resolve_extended
from .lcf import from_real
from .projgeo import point

__all__ = ["SessionState", "handle", "serve", "BridgeServer"]

PROTOCOL_VERSION = 1


@dataclass
class SessionState:
    construction: Optional[Construction] = None
    assignment: dict[str, tuple[complex, complex, complex]] = field(default_factory=dict)
    policy: str = "auto"
    seed: int = 0
    frame: int = 0


def _err(code: str, detail: str) -> dict:
    return {"v": PROTOCOL_VERSION, "type": "error", "code": code, "detail": detail}


def _encode_coord(c: complex):
    if abs(c.imag) < 1e-12:
        return c.real
    return {"re": c.real, "im": c.imag}


def _decode_coord(v) -> complex:
    if isinstance(v, dict):
        return complex(v.get("re", 0.0), v.get("im", 0.0))
    return complex(v)


def handle(msg: dict, s: SessionState) -> tuple[SessionState, dict]:
    """Process one request against the session, returning the one response."""
    if not isinstance(msg, dict) or "type" not in msg:
        return s, _err("bad-request", "message must be an object with a 'type'")
    mtype = msg["type"]
    if mtype == "load":
        return _handle_load(msg, s)
    if s.construction is None:
        return s, _err("no-construction", "load a construction first")
    if mtype == "drag":
        return _handle_drag(msg, s)
    if mtype == "probe":
        return _handle_probe(msg, s, n=5, seed=s.seed)
    if mtype == "check-extended":
        n = int(msg.get("n", 5))
        seed = int(msg.get("seed", s.seed))
        return _handle_probe(msg, s, n=n, seed=seed)
    if mtype == "set-policy":
        policy = msg.get("policy")
        if policy not in ("auto", "manual"):
            return s, _err("bad-request", "policy must be 'auto' or 'manual'")
        s.policy = policy
        return s, _scene(s, _evaluate(s))
    return s, _err("bad-request", f"unknown message type {mtype!r}")


def _handle_load(msg: dict, s: SessionState) -> tuple[SessionState, dict]:
    doc = msg.get("document")
    if not isinstance(doc, dict):
        return s, _err("bad-request", "load needs a 'document' object")
    try:
        c = _build(doc)
    except ConstructionError as exc:
        return s, _err("bad-request", str(exc))
    s.construction = c
    s.assignment = {
        fid: c.by_id(fid).literal for fid in c.free_ids()
    }
    return s, _scene(s, _evaluate(s))


def _handle_drag(msg: dict, s: SessionState) -> tuple[SessionState, dict]:
    eid = msg.get("id")
    if eid not in s.assignment:
        return s, _err("unknown-element", f"no draggable element {eid!r}")
    coords = msg.get("coords")
    if not isinstance(coords, list) or len(coords) != 3:
        return s, _err("bad-request", "coords must be a 3-vector")
    vec = tuple(_decode_coord(v) for v in coords)
    if all(v == 0 for v in vec):
        return s, _err("bad-request", "coords must not be the zero vector")
    s.assignment[eid] = vec
    _reclamp_semifree(s)
    return s, _scene(s, _evaluate(s))


def _reclamp_semifree(s: SessionState) -> None:
    """Keep semi-free points on their constraint lines, which may themselves
    move when another element is dragged."""
    semifree = [e for e in s.construction.elements if e.kind == "SemiFreePointOnLine"]
    if not semifree:
        return
    res = _evaluate(s)
    for el in semifree:
        entry = res[el.args[0]]
        if entry.psh is None:
            continue
        s.assignment[el.id] = _clamp_to_line(s.assignment[el.id], entry.psh.vec)


def _handle_probe(msg: dict, s: SessionState, n: int, seed: int) -> tuple[SessionState, dict]:
    eid = msg.get("id")
    try:
        s.construction.by_id(eid)
    except ConstructionError:
        return s, _err("unknown-element", f"no element {eid!r}")
    res = _evaluate(s)
    # a regular element needs no resolution: scene unchanged, status regular
    forced = None
    if res[eid].is_degenerate:
        forced = {eid: _resolve_element(s, eid, n, seed)}
    return s, _scene(s, res, forced)


def _clamp_to_line(vec, lv):
    # project the affine position onto the constraint line
    x, y, z = vec
    if z != 0:
        x, y = x / z, y / z
    a, b, c = lv
    n2 = (abs(a) ** 2 + abs(b) ** 2)
    if n2 == 0:
        return (x, y, 1.0)
    t = (a * x + b * y + c) / n2
    return (x - t * a, y - t * b, 1.0)


def _evaluate(s: SessionState) -> EvalResult:
    lifted = {
        fid: point(*[from_real(c) for c in coords]) for fid, coords in s.assignment.items()
    }
    return evaluate(s.construction, lifted)


def _resolve_element(s: SessionState, eid: str, n: int, seed: int):
    lifted = {
        fid: point(*[from_real(c) for c in coords]) for fid, coords in s.assignment.items()
    }
    smap, v0 = spatial_map_for(s.construction, eid, lifted)
    spec = PerturbationSpec(
        count=n, seed=seed, projector=constraint_projector(s.construction, lifted)
    )
    return resolve_extended(smap, v0, spec)


def _scene(s: SessionState, res: EvalResult, forced: Optional[dict] = None) -> dict:
    s.frame += 1
    elements = []
    for el in s.construction.elements:
        entry = res[el.id]
        item: dict = {"id": el.id}
        outcome = (forced or {}).get(el.id)
        if outcome is None and entry.is_degenerate and el.kind not in ("FreePoint", "SemiFreePointOnLine"):
            if s.policy == "auto":
                outcome = _resolve_element(s, el.id, 5, s.seed)
        if outcome is not None:
            entry.resolved = outcome
            if outcome.status is ResolveStatus.NOT_REMOVABLE:
                item["status"] = "not-removable"
                item["coords"] = [0.0, 0.0, 0.0]
            elif outcome.status is ResolveStatus.REMOVABLE:
                item["status"] = "removable"
                item["coords"] = [_encode_coord(c) for c in outcome.value.vec]
                item["order"] = str(outcome.order)
            elif outcome.status is ResolveStatus.REGULAR:
                item["status"] = "regular"
                item["coords"] = [_encode_coord(c) for c in outcome.value.vec]
            else:
                item["status"] = "degenerate"
                item["coords"] = [0.0, 0.0, 0.0]
        elif entry.is_degenerate:
            item["status"] = "degenerate"
            item["coords"] = [0.0, 0.0, 0.0]
        else:
            item["status"] = "regular"
            item["coords"] = [_encode_coord(c) for c in entry.psh.vec]
        if el.kind == "Circle":
            item["radius"] = el.radius
            item["coords"] = [_encode_coord(c) for c in res[el.args[0]].psh.vec]
        item["kind"] = el.kind
        elements.append(item)
    return {
        "v": PROTOCOL_VERSION,
        "type": "scene",
        "frame": s.frame,
        "elements": elements,
    }


# -- transports --------------------------------------------------------------------


def _session_loop(recv_line, send_line):
    state = SessionState()
    while True:
        raw = recv_line()
        if raw is None:
            return
        raw = raw.strip()
        if not raw:
            continue
        try:
            msg = json.loads(raw)
        except json.JSONDecodeError as exc:
            send_line(json.dumps(_err("bad-request", f"invalid frame: {exc}")))
            continue
        state, resp = handle(msg, state)
        send_line(json.dumps(resp))


class _TcpHandler(socketserver.StreamRequestHandler):
    def handle(self):
        def recv():
            line = self.rfile.readline()
            return None if not line else line.decode("utf-8")

        def send(text: str):
            self.wfile.write((text + "\n").encode("utf-8"))
            self.wfile.flush()

        _session_loop(recv, send)


_WS_GUID = "258EAFA5-E914-47DA-95CA-C5AB0DC85B11"


def _ws_accept_key(key: str) -> str:
    digest = hashlib.sha1((key + _WS_GUID).encode("ascii")).digest()
    return base64.b64encode(digest).decode("ascii")


def _ws_handshake(conn: socket.socket) -> bool:
    data = b""
    while b"\r\n\r\n" not in data:
        chunk = conn.recv(4096)
        if not chunk:
            return False
        data += chunk
    headers = {}
    for line in data.decode("latin-1").split("\r\n")[1:]:
        if ":" in line:
            k, v = line.split(":", 1)
            headers[k.strip().lower()] = v.strip()
    key = headers.get("sec-websocket-key")
    if key is None:
        conn.sendall(b"HTTP/1.1 400 Bad Request\r\n\r\n")
        return False
    resp = (
        "HTTP/1.1 101 Switching Protocols\r\n"
        "Upgrade: websocket\r\n"
        "Connection: Upgrade\r\n"
        f"Sec-WebSocket-Accept: {_ws_accept_key(key)}\r\n\r\n"
    )
    conn.sendall(resp.encode("latin-1"))
    return True


def _ws_recv_message(conn: socket.socket) -> Optional[str]:
    def read_exact(n: int) -> Optional[bytes]:
        buf = b""
        while len(buf) < n:
            chunk = conn.recv(n - len(buf))
            if not chunk:
                return None
            buf += chunk
        return buf

    while True:
        head = read_exact(2)
        if head is None:
            return None
        b1, b2 = head
        opcode = b1 & 0x0F
        masked = b2 & 0x80
        length = b2 & 0x7F
        if length == 126:
            ext = read_exact(2)
            if ext is None:
                return None
            length = struct.unpack(">H", ext)[0]
        elif length == 127:
            ext = read_exact(8)
            if ext is None:
                return None
            length = struct.unpack(">Q", ext)[0]
        mask = read_exact(4) if masked else b"\x00" * 4
        if mask is None:
            return None
        payload = read_exact(length) if length else b""
        if payload is None:
            return None
        if masked:
            payload = bytes(b ^ mask[i % 4] for i, b in enumerate(payload))
        if opcode == 0x8:  # close
            return None
        if opcode == 0x9:  # ping -> pong
            conn.sendall(_ws_frame(payload, opcode=0xA))
            continue
        if opcode in (0x1, 0x2):
            return payload.decode("utf-8")


def _ws_frame(payload: bytes, opcode: int = 0x1) -> bytes:
    head = bytes([0x80 | opcode])
    n = len(payload)
    if n < 126:
        head += bytes([n])
    elif n < 1 << 16:
        head += bytes([126]) + struct.pack(">H", n)
    else:
        head += bytes([127]) + struct.pack(">Q", n)
    return head + payload


class _WsHandler(socketserver.BaseRequestHandler):
    def handle(self):
        conn = self.request
        if not _ws_handshake(conn):
            return

        def recv():
            return _ws_recv_message(conn)

        def send(text: str):
            conn.sendall(_ws_frame(text.encode("utf-8")))

        _session_loop(recv, send)


class BridgeServer(socketserver.ThreadingTCPServer):
    allow_reuse_address = True
    daemon_threads = True

    def __init__(self, host: str, port: int, transport: str = "ws"):
        handler = _WsHandler if transport == "ws" else _TcpHandler
        super().__init__((host, port), handler)
        self.transport = transport

    def serve_in_thread(self) -> threading.Thread:
        t = threading.Thread(target=self.serve_forever, daemon=True)
        t.start()
        return t


def serve(host: str = "127.0.0.1", port: int = 8765, transport: str = "ws") -> None:
    with BridgeServer(host, port, transport) as server:
        bound = server.server_address[1]
        print(f"lcgeo bridge listening on {transport}://{host}:{bound}", flush=True)
        try:
            server.serve_forever()
        except KeyboardInterrupt:
            pass
