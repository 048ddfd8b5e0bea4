// Entry point. `?api=http://host:port` points at a running service
// (default http://127.0.0.1:8787); `?mesh=URL&tree=URL` loads static
// documents instead, with no backend at all.

import { ApiClient } from './api';
import { TerrainViewer, type ViewerElements } from './viewer';

function grab<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
}

async function boot(): Promise<void> {
  const els: ViewerElements = {
    canvasHost: grab('scene'),
    alphaSlider: grab<HTMLInputElement>('alpha'),
    alphaReadout: grab('alpha-readout'),
    componentList: grab('components'),
    selectionPanel: grab('selection'),
    fieldSelect: grab<HTMLSelectElement>('field'),
    legend: grab('legend'),
    banner: grab('banner'),
    toast: grab('toast'),
    layoutCanvas: grab<HTMLCanvasElement>('layout-canvas'),
  };

  const params = new URLSearchParams(location.search);
  const meshUrl = params.get('mesh');
  const treeUrl = params.get('tree');

  if (meshUrl && treeUrl) {
    const viewer = new TerrainViewer(els, null);
    const [mesh, tree] = await Promise.all([
      fetch(meshUrl).then((r) => r.json()),
      fetch(treeUrl).then((r) => r.json()),
    ]);
    viewer.loadDocuments(mesh, tree, null);
    return;
  }

  const base = params.get('api') ?? 'http://127.0.0.1:8787';
  const api = new ApiClient(base);
  const viewer = new TerrainViewer(els, api);
  try {
    await viewer.loadFromApi();
  } catch (err) {
    els.banner.textContent =
      `cannot reach ${base} — start one with: graphterrain serve `
      + `--graph <edges> --scalar kcore (${err})`;
    els.banner.style.display = 'block';
  }
}

boot().catch((err) => {
  const banner = document.getElementById('banner');
  if (banner) {
    banner.textContent = String(err);
    (banner as HTMLElement).style.display = 'block';
  }
});
