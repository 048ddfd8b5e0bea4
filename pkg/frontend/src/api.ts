// Typed client for the query service. Each request category keeps one
// in-flight request: starting a new one aborts its superseded predecessor
// (slider scrubbing fires many /cut calls).

import type {
  CutResponse,
  FieldsDocument,
  LayoutResponse,
  MeshDocument,
  PeakResponse,
  TreeDocument,
} from './types';

export class ApiClient {
  private controllers = new Map<string, AbortController>();

  constructor(public readonly base: string) {}

  private async fetchJson<T>(
    path: string, category: string, init?: RequestInit,
  ): Promise<T> {
    this.controllers.get(category)?.abort();
    const controller = new AbortController();
    this.controllers.set(category, controller);
    const resp = await fetch(this.base + path, {
      ...init,
      signal: controller.signal,
    });
    if (!resp.ok) {
      let detail = `${resp.status}`;
      try {
        detail = (await resp.json()).error ?? detail;
      } catch { /* non-JSON error body */ }
      throw new Error(`${path}: ${detail}`);
    }
    return resp.json() as Promise<T>;
  }

  health(): Promise<{ status: string }> {
    return this.fetchJson('/health', 'health');
  }

  mesh(): Promise<MeshDocument> {
    return this.fetchJson('/mesh', 'mesh');
  }

  tree(): Promise<TreeDocument> {
    return this.fetchJson('/tree', 'tree');
  }

  fields(): Promise<FieldsDocument> {
    return this.fetchJson('/fields', 'fields');
  }

  cut(alpha: number): Promise<CutResponse> {
    return this.fetchJson(`/cut?alpha=${encodeURIComponent(alpha)}`, 'cut');
  }

  peak(node: number | 'root'): Promise<PeakResponse> {
    return this.fetchJson(`/peak?node=${node}`, 'peak');
  }

  layout2d(vertices: (number | number[])[]): Promise<LayoutResponse> {
    return this.fetchJson('/layout2d', 'layout', {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify({ vertices }),
    });
  }
}
