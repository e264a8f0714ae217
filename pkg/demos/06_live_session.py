"""A scripted session against the live bridge protocol: load the tangential
circles, drag one center across the tangency, and watch the join element stay
resolved in every scene frame.

This is the same wire protocol the browser viewer speaks (frontend/).

Run:  python3 demos/06_live_session.py
"""

import json

from lcgeo.bridge import SessionState, handle
from lcgeo.construct import TANGENT_CIRCLES_DOC

state = SessionState()
state, scene = handle({"v": 1, "type": "load", "document": json.loads(TANGENT_CIRCLES_DOC)}, state)
print(f"loaded: {len(scene['elements'])} elements, frame {scene['frame']}")
print()

print("dragging the center of circle D from x = 1.6 to x = 2.4:")
for i in range(9):
    x = 1.6 + i * 0.1
    state, scene = handle({"v": 1, "type": "drag", "id": "MD", "coords": [x, 0, 1]}, state)
    j = next(e for e in scene["elements"] if e["id"] == "j")
    coords = tuple(
        round(c, 4) if isinstance(c, float) else c for c in j["coords"]
    )
    badge = f" (order {j['order']})" if "order" in j else ""
    print(f"  x = {x:.1f}  join: {j['status']:<13}{badge}  line = {coords}")

print()
print("the line never flickers out: at the tangency it is the resolved")
print("projective shadow, exactly the limit of the neighboring positions.")
