// Canvas rendering of a SceneModel: lines clipped to the viewport, circles
// from center and radius, points as discs, far points as edge arrows, and
// badge overlays for resolved or failed elements.

import { SceneModel } from "./scene.js";

const COLORS: Record<string, string> = {
  regular: "#2563eb",
  removable: "#059669",
  "not-removable": "#dc2626",
  degenerate: "#9ca3af",
};

export function renderScene(ctx: CanvasRenderingContext2D, model: SceneModel): void {
  const { width, height } = model.viewport;
  ctx.clearRect(0, 0, width, height);
  const badges: { text: string; x: number; y: number; color: string }[] = [];

  for (const item of model.items) {
    if (!item.shape) continue;
    const color = COLORS[item.status] ?? COLORS.regular;
    ctx.strokeStyle = color;
    ctx.fillStyle = color;
    ctx.lineWidth = item.status === "removable" ? 2.5 : 1.5;
    const s = item.shape;
    if (s.kind === "line") {
      ctx.beginPath();
      ctx.moveTo(s.x1, s.y1);
      ctx.lineTo(s.x2, s.y2);
      ctx.stroke();
      if (item.badge) {
        badges.push({
          text: `${item.id}: ${item.badge}`,
          x: (s.x1 + s.x2) / 2,
          y: (s.y1 + s.y2) / 2,
          color,
        });
      }
    } else if (s.kind === "circle") {
      ctx.beginPath();
      ctx.arc(s.cx, s.cy, s.r, 0, 2 * Math.PI);
      ctx.stroke();
    } else if (s.kind === "point") {
      ctx.beginPath();
      ctx.arc(s.x, s.y, item.draggable ? 6 : 4, 0, 2 * Math.PI);
      ctx.fill();
      if (item.draggable) {
        ctx.strokeStyle = "#1f2937";
        ctx.stroke();
      }
      ctx.fillStyle = "#111827";
      ctx.font = "12px sans-serif";
      ctx.fillText(item.id, s.x + 8, s.y - 8);
      ctx.fillStyle = color;
      if (item.badge) badges.push({ text: `${item.id}: ${item.badge}`, x: s.x, y: s.y - 18, color });
    } else if (s.kind === "far-point") {
      drawArrow(ctx, s.x, s.y, s.angle);
      ctx.fillStyle = "#111827";
      ctx.font = "12px sans-serif";
      ctx.fillText(`${item.id} (far)`, s.x - 20, s.y - 12);
      if (item.badge) badges.push({ text: `${item.id}: ${item.badge}`, x: s.x, y: s.y + 18, color });
    }
  }

  for (const item of model.items) {
    // elements that currently have no drawable shape still surface verdicts
    if (!item.shape && item.badge) {
      badges.push({ text: `${item.id}: ${item.badge}`, x: 12, y: 0, color: COLORS[item.status] });
    }
  }

  let fallbackY = 24;
  ctx.font = "13px sans-serif";
  for (const b of badges) {
    const y = b.y === 0 ? (fallbackY += 18) : b.y;
    ctx.fillStyle = b.color;
    ctx.fillText(b.text, Math.max(8, Math.min(b.x, model.viewport.width - 160)), y);
  }
}

function drawArrow(ctx: CanvasRenderingContext2D, x: number, y: number, angle: number): void {
  const len = 16;
  const dx = Math.cos(-angle);
  const dy = Math.sin(-angle);
  ctx.beginPath();
  ctx.moveTo(x - len * dx, y - len * dy);
  ctx.lineTo(x, y);
  ctx.lineTo(x - 6 * dx + 5 * dy, y - 6 * dy - 5 * dx);
  ctx.moveTo(x, y);
  ctx.lineTo(x - 6 * dx - 5 * dy, y - 6 * dy + 5 * dx);
  ctx.stroke();
}
