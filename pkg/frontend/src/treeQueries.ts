// Local tree-document queries mirroring the service semantics, so the
// viewer works from static files with no backend.

import type { CutComponent, MemberId, TreeDocument, TreeNode } from './types';

export interface TreeIndex {
  doc: TreeDocument;
  byId: Map<number, TreeNode>;
  children: Map<number, number[]>;
  minScalar: number;
  maxScalar: number;
}

export function buildIndex(doc: TreeDocument): TreeIndex {
  const byId = new Map<number, TreeNode>();
  const children = new Map<number, number[]>();
  let minScalar = Infinity;
  let maxScalar = -Infinity;
  for (const node of doc.nodes) {
    byId.set(node.id, node);
    minScalar = Math.min(minScalar, node.scalar);
    maxScalar = Math.max(maxScalar, node.scalar);
  }
  for (const node of doc.nodes) {
    if (node.parent >= 0) {
      const sibs = children.get(node.parent) ?? [];
      sibs.push(node.id);
      children.set(node.parent, sibs);
    }
  }
  for (const sibs of children.values()) sibs.sort((a, b) => a - b);
  return { doc, byId, children, minScalar, maxScalar };
}

/** Child scalars must strictly exceed their parent's all the way down. */
export function heightsMonotone(index: TreeIndex): boolean {
  for (const node of index.doc.nodes) {
    if (node.parent >= 0) {
      const parent = index.byId.get(node.parent);
      if (!parent || node.scalar <= parent.scalar) return false;
    }
  }
  return true;
}

function resolveMembers(index: TreeIndex, raw: number[]): MemberId[] {
  if (index.doc.kind === 'edge' && index.doc.edges) {
    const table = index.doc.edges;
    return raw.map((e) => [table[e][0], table[e][1]] as [number, number]);
  }
  return raw;
}

export function subtreeMemberIds(index: TreeIndex, node: number): number[] {
  const out: number[] = [];
  const stack = [node];
  while (stack.length) {
    const q = stack.pop()!;
    const n = index.byId.get(q);
    if (!n) throw new Error(`unknown tree node ${q}`);
    out.push(...n.members);
    const kids = index.children.get(q);
    if (kids) stack.push(...kids);
  }
  return out.sort((a, b) => a - b);
}

export function subtreeMembers(index: TreeIndex, node: number): MemberId[] {
  return resolveMembers(index, subtreeMemberIds(index, node));
}

/** All maximal subtrees whose root scalar is >= alpha, as the service
 *  reports them (ascending root id). */
export function cutAtAlpha(index: TreeIndex, alpha: number): CutComponent[] {
  const roots: number[] = [];
  for (const node of index.doc.nodes) {
    if (node.scalar < alpha) continue;
    const parent = node.parent >= 0 ? index.byId.get(node.parent) : undefined;
    if (!parent || parent.scalar < alpha) roots.push(node.id);
  }
  roots.sort((a, b) => a - b);
  return roots.map((id) => {
    const members = subtreeMembers(index, id);
    return {
      node: id,
      alpha: index.byId.get(id)!.scalar,
      size: members.length,
      members,
    };
  });
}

/** The root of the tallest peak: maximal-scalar leaf's enclosing cut
 *  component at the top height. */
export function tallestPeakNode(index: TreeIndex): number {
  const top = cutAtAlpha(index, index.maxScalar);
  if (!top.length) throw new Error('empty tree');
  let best = top[0];
  for (const comp of top) if (comp.size > best.size) best = comp;
  return best.node;
}
