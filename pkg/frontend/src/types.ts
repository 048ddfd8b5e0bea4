// Document schemas produced by the backend (tree/mesh files and the HTTP
// service). Members of edge-kind documents are dense edge ids resolved to
// original endpoint pairs through the document's `edges` table.

export interface Boundary {
  node: number;
  height: number;
  color: number; // palette class 0..3
  loop: number[][]; // corner ring, implicitly closed
}

export interface Wall {
  inner: number;
  outer: number;
  base: number;
  top: number;
  color: number;
}

export interface MeshDocument {
  kind: 'vertex' | 'edge';
  synthetic_root: boolean;
  palette: string[];
  color_source: string;
  quartiles: number[];
  bounds: number[];
  boundaries: Boundary[];
  walls: Wall[];
}

export interface TreeNode {
  id: number;
  scalar: number;
  parent: number; // -1 for roots
  members: number[];
}

export interface TreeDocument {
  kind: 'vertex' | 'edge';
  synthetic_root: boolean;
  roots: number[];
  nodes: TreeNode[];
  edges?: number[][]; // edge id -> original endpoint pair
}

export interface FieldMeta {
  name: string;
  quartiles: number[];
  node_values: number[];
  node_classes: number[];
}

export interface FieldsDocument {
  fields: FieldMeta[];
  kind: string;
  scalar_source: string;
}

export type MemberId = number | [number, number];

export interface CutComponent {
  node: number;
  alpha: number;
  size: number;
  members: MemberId[];
}

export interface CutResponse {
  alpha: number;
  components: CutComponent[];
}

export interface PeakResponse {
  node: number;
  alpha: number;
  area: number;
  size: number;
  members: MemberId[];
}

export interface LayoutResponse {
  positions: { id: number; x: number; y: number }[];
  edges: number[][];
}

export function isMeshDocument(doc: unknown): doc is MeshDocument {
  const d = doc as MeshDocument;
  return !!d && Array.isArray(d.boundaries) && Array.isArray(d.walls)
    && Array.isArray(d.palette)
    && d.boundaries.every((b) => Array.isArray(b.loop)
      && typeof b.height === 'number' && typeof b.node === 'number');
}

export function isTreeDocument(doc: unknown): doc is TreeDocument {
  const d = doc as TreeDocument;
  return !!d && Array.isArray(d.nodes) && Array.isArray(d.roots)
    && d.nodes.every((n) => typeof n.id === 'number'
      && typeof n.scalar === 'number' && Array.isArray(n.members));
}
