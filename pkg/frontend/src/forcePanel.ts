// Linked 2D node-link panel: draws the positions the backend's seeded
// force layout returns for a selected peak.

import type { LayoutResponse } from './types';

export function drawLayout(
  canvas: HTMLCanvasElement, layout: LayoutResponse,
): void {
  const ctx = canvas.getContext('2d');
  if (!ctx) return;
  const { width, height } = canvas;
  ctx.clearRect(0, 0, width, height);
  if (!layout.positions.length) return;

  const xs = layout.positions.map((p) => p.x);
  const ys = layout.positions.map((p) => p.y);
  const lo = [Math.min(...xs), Math.min(...ys)];
  const hi = [Math.max(...xs), Math.max(...ys)];
  const span = Math.max(hi[0] - lo[0], hi[1] - lo[1], 1e-9);
  const pad = 24;
  const scale = (Math.min(width, height) - 2 * pad) / span;
  const toScreen = (x: number, y: number): [number, number] => [
    pad + (x - lo[0]) * scale + (width - 2 * pad - (hi[0] - lo[0]) * scale) / 2,
    pad + (y - lo[1]) * scale + (height - 2 * pad - (hi[1] - lo[1]) * scale) / 2,
  ];

  const at = new Map<number, [number, number]>();
  for (const p of layout.positions) at.set(p.id, toScreen(p.x, p.y));

  ctx.strokeStyle = 'rgba(120, 130, 150, 0.55)';
  ctx.lineWidth = 1;
  for (const [a, b] of layout.edges) {
    const pa = at.get(a);
    const pb = at.get(b);
    if (!pa || !pb) continue;
    ctx.beginPath();
    ctx.moveTo(pa[0], pa[1]);
    ctx.lineTo(pb[0], pb[1]);
    ctx.stroke();
  }

  const r = layout.positions.length > 200 ? 2.5 : 5;
  ctx.fillStyle = '#db332e';
  for (const [x, y] of at.values()) {
    ctx.beginPath();
    ctx.arc(x, y, r, 0, Math.PI * 2);
    ctx.fill();
  }

  ctx.fillStyle = '#aab';
  ctx.font = '12px system-ui, sans-serif';
  ctx.fillText(`${layout.positions.length} nodes / ${layout.edges.length} edges`,
    8, height - 8);
}
