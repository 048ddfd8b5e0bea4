// Mesh document -> triangle buffers. Nothing is re-laid-out here: every
// vertex comes verbatim from a boundary loop and one of the two heights
// the document states, so the scene is exactly the mesh file's geometry.

import type { MeshDocument } from './types';

export interface TerrainGeometry {
  positions: Float32Array; // xyz per vertex; document height on y
  colors: Float32Array; // rgb per vertex, rewritable (see colors.ts)
  faceNode: Int32Array; // boundary node per triangle (picking)
  faceIsWall: Uint8Array;
  triangleCount: number;
  heightRange: [number, number];
  nodeClass: Map<number, number>; // document color class per node
}

export function buildTerrainGeometry(mesh: MeshDocument): TerrainGeometry {
  const positions: number[] = [];
  const faceNode: number[] = [];
  const faceIsWall: number[] = [];
  const loops = new Map<number, number[][]>();
  const nodeClass = new Map<number, number>();
  let lo = Infinity;
  let hi = -Infinity;

  const pushTriangle = (
    a: number[], b: number[], c: number[],
    node: number, wall: boolean,
  ) => {
    positions.push(a[0], a[1], a[2], b[0], b[1], b[2], c[0], c[1], c[2]);
    faceNode.push(node);
    faceIsWall.push(wall ? 1 : 0);
  };

  for (const boundary of mesh.boundaries) {
    loops.set(boundary.node, boundary.loop);
    nodeClass.set(boundary.node, boundary.color);
    lo = Math.min(lo, boundary.height);
    hi = Math.max(hi, boundary.height);
    // cap: fan-triangulated loop at the boundary's height
    const h = boundary.height;
    const ring = boundary.loop;
    for (let i = 1; i + 1 < ring.length; i++) {
      pushTriangle(
        [ring[0][0], h, ring[0][1]],
        [ring[i][0], h, ring[i][1]],
        [ring[i + 1][0], h, ring[i + 1][1]],
        boundary.node, false,
      );
    }
  }

  for (const wall of mesh.walls) {
    const ring = loops.get(wall.inner);
    if (!ring) throw new Error(`wall references missing boundary ${wall.inner}`);
    for (let i = 0; i < ring.length; i++) {
      const [x0, y0] = ring[i];
      const [x1, y1] = ring[(i + 1) % ring.length];
      const a = [x0, wall.base, y0];
      const b = [x1, wall.base, y1];
      const c = [x1, wall.top, y1];
      const d = [x0, wall.top, y0];
      pushTriangle(a, b, c, wall.inner, true);
      pushTriangle(a, c, d, wall.inner, true);
    }
  }

  const triangleCount = faceNode.length;
  return {
    positions: new Float32Array(positions),
    colors: new Float32Array(triangleCount * 9),
    faceNode: new Int32Array(faceNode),
    faceIsWall: new Uint8Array(faceIsWall),
    triangleCount,
    heightRange: [lo, hi],
    nodeClass,
  };
}

/** Every cap/wall vertex must reuse a loop corner and a stated height. */
export function geometryMatchesDocument(
  geom: TerrainGeometry, mesh: MeshDocument,
): boolean {
  const corners = new Set<string>();
  const heights = new Set<number>();
  for (const b of mesh.boundaries) {
    heights.add(b.height);
    for (const [x, y] of b.loop) corners.add(`${x},${y}`);
  }
  for (let v = 0; v < geom.positions.length; v += 3) {
    const key = `${geom.positions[v]},${geom.positions[v + 2]}`;
    if (!corners.has(key)) return false;
    if (!heights.has(geom.positions[v + 1])) return false;
  }
  return true;
}
