// The interactive terrain scene: orbit/zoom camera, cross-section slider,
// double-click peak picking, recoloring, linked 2D layout panel.

import * as THREE from 'three';
import { OrbitControls } from 'three/addons/controls/OrbitControls.js';

import type { ApiClient } from './api';
import { buildTerrainGeometry, type TerrainGeometry } from './geometry';
import { PALETTE_CSS, paintByClasses } from './colors';
import { drawLayout } from './forcePanel';
import {
  buildIndex,
  cutAtAlpha,
  subtreeMembers,
  type TreeIndex,
} from './treeQueries';
import type {
  CutComponent,
  FieldsDocument,
  MemberId,
  MeshDocument,
  TreeDocument,
} from './types';
import { isMeshDocument, isTreeDocument } from './types';
import { decodeState, encodeState, type ViewState } from './viewState';

const LAYOUT_PROMPT_LIMIT = 2000;

export interface ViewerElements {
  canvasHost: HTMLElement;
  alphaSlider: HTMLInputElement;
  alphaReadout: HTMLElement;
  componentList: HTMLElement;
  selectionPanel: HTMLElement;
  fieldSelect: HTMLSelectElement;
  legend: HTMLElement;
  banner: HTMLElement;
  toast: HTMLElement;
  layoutCanvas: HTMLCanvasElement;
}

export class TerrainViewer {
  private scene = new THREE.Scene();
  private camera: THREE.PerspectiveCamera;
  private renderer: THREE.WebGLRenderer;
  private controls: OrbitControls;
  private raycaster = new THREE.Raycaster();
  private terrain: THREE.Mesh | null = null;
  private cutPlane: THREE.Mesh | null = null;

  private mesh: MeshDocument | null = null;
  private tree: TreeIndex | null = null;
  private fields: FieldsDocument | null = null;
  private geom: TerrainGeometry | null = null;

  private state: ViewState = decodeState(
    typeof location === 'undefined' ? '' : location.hash);
  private scalarOfNode = new Map<number, number>();

  constructor(
    private el: ViewerElements,
    private api: ApiClient | null,
  ) {
    const width = el.canvasHost.clientWidth || 800;
    const height = el.canvasHost.clientHeight || 600;
    this.camera = new THREE.PerspectiveCamera(48, width / height, 0.01, 1e6);
    this.renderer = new THREE.WebGLRenderer({ antialias: true });
    this.renderer.setSize(width, height);
    this.renderer.setPixelRatio(window.devicePixelRatio ?? 1);
    el.canvasHost.appendChild(this.renderer.domElement);

    this.controls = new OrbitControls(this.camera, this.renderer.domElement);
    this.controls.enableDamping = true;
    this.controls.dampingFactor = 0.08;

    this.scene.background = new THREE.Color(0x10131a);
    const sun = new THREE.DirectionalLight(0xffffff, 2.2);
    sun.position.set(1, 2, 1.2);
    this.scene.add(sun, new THREE.AmbientLight(0xffffff, 0.7));

    this.renderer.domElement.addEventListener('dblclick', (ev) => {
      this.pickAt(ev).catch((err) => this.showToast(String(err)));
    });
    el.alphaSlider.addEventListener('input', () => {
      this.setAlpha(Number(el.alphaSlider.value));
    });
    el.fieldSelect.addEventListener('change', () => {
      this.recolor(el.fieldSelect.value).catch((err) => {
        this.showToast(String(err));
        el.fieldSelect.value = this.state.field;
      });
    });
    window.addEventListener('resize', () => this.resize());

    const animate = () => {
      requestAnimationFrame(animate);
      this.controls.update();
      this.renderer.render(this.scene, this.camera);
    };
    animate();
  }

  // -- loading --------------------------------------------------------

  async loadFromApi(): Promise<void> {
    if (!this.api) throw new Error('no service configured');
    const [mesh, tree, fields] = await Promise.all([
      this.api.mesh(), this.api.tree(), this.api.fields(),
    ]);
    this.loadDocuments(mesh, tree, fields);
  }

  loadDocuments(
    mesh: unknown, tree: unknown, fields: FieldsDocument | null,
  ): void {
    if (!isMeshDocument(mesh)) {
      this.showBanner('mesh document does not match the expected schema');
      throw new Error('bad mesh document');
    }
    if (!isTreeDocument(tree)) {
      this.showBanner('tree document does not match the expected schema');
      throw new Error('bad tree document');
    }
    this.hideBanner();
    this.mesh = mesh;
    this.tree = buildIndex(tree);
    this.fields = fields;
    this.scalarOfNode.clear();
    for (const node of tree.nodes) this.scalarOfNode.set(node.id, node.scalar);
    for (const b of mesh.boundaries) {
      if (!this.scalarOfNode.has(b.node)) this.scalarOfNode.set(b.node, b.height);
    }

    this.geom = buildTerrainGeometry(mesh);
    this.installTerrain();
    this.installSlider();
    this.installFields();
    this.renderLegend(mesh.palette);
    this.applyState();
  }

  private installTerrain(): void {
    if (this.terrain) this.scene.remove(this.terrain);
    const g = this.geom!;
    const geometry = new THREE.BufferGeometry();
    geometry.setAttribute('position', new THREE.BufferAttribute(g.positions, 3));
    geometry.setAttribute('color', new THREE.BufferAttribute(g.colors, 3));
    geometry.computeVertexNormals();
    const material = new THREE.MeshLambertMaterial({
      vertexColors: true,
      side: THREE.DoubleSide,
    });
    this.terrain = new THREE.Mesh(geometry, material);
    this.scene.add(this.terrain);
    this.paint();

    const bounds = new THREE.Box3().setFromObject(this.terrain);
    const center = bounds.getCenter(new THREE.Vector3());
    const size = bounds.getSize(new THREE.Vector3()).length() || 1;
    this.controls.target.copy(center);
    this.camera.position.copy(center)
      .add(new THREE.Vector3(size * 0.65, size * 0.8, size * 0.65));
    this.camera.near = size / 1000;
    this.camera.far = size * 20;
    this.camera.updateProjectionMatrix();
  }

  private installSlider(): void {
    const { el } = this;
    const [lo, hi] = [this.tree!.minScalar, this.tree!.maxScalar];
    el.alphaSlider.min = String(lo);
    el.alphaSlider.max = String(hi);
    el.alphaSlider.step = String(Math.max((hi - lo) / 200, 1e-6));
    const alpha = this.state.alpha ?? lo;
    el.alphaSlider.value = String(Math.min(Math.max(alpha, lo), hi));
  }

  private installFields(): void {
    const select = this.el.fieldSelect;
    select.innerHTML = '';
    const names = this.fields
      ? this.fields.fields.map((f) => f.name)
      : ['self'];
    for (const name of names) {
      const opt = document.createElement('option');
      opt.value = name;
      opt.textContent = name;
      select.appendChild(opt);
    }
    if (!names.includes(this.state.field)) this.state.field = 'self';
    select.value = this.state.field;
  }

  private applyState(): void {
    if (this.state.camera) {
      const { theta, phi, radius } = this.state.camera;
      const t = this.controls.target;
      this.camera.position.set(
        t.x + radius * Math.sin(phi) * Math.sin(theta),
        t.y + radius * Math.cos(phi),
        t.z + radius * Math.sin(phi) * Math.cos(theta),
      );
    }
    this.setAlpha(Number(this.el.alphaSlider.value));
    if (this.state.field !== 'self') {
      this.recolor(this.state.field).catch(() => { this.state.field = 'self'; });
    }
    if (this.state.selected !== null) {
      this.select(this.state.selected).catch(() => { /* stale selection */ });
    }
  }

  // -- cross section ----------------------------------------------------

  setAlpha(alpha: number): void {
    if (!this.tree || !this.mesh) return;
    this.state.alpha = alpha;
    this.el.alphaReadout.textContent = alpha.toFixed(3);
    this.paint();
    this.moveCutPlane(alpha);
    this.syncUrl();

    const render = (components: CutComponent[]) =>
      this.renderComponents(components, alpha);
    if (this.api) {
      this.api.cut(alpha).then((resp) => render(resp.components))
        .catch((err) => {
          if ((err as Error).name !== 'AbortError') render(cutAtAlpha(this.tree!, alpha));
        });
    } else {
      render(cutAtAlpha(this.tree, alpha));
    }
  }

  private moveCutPlane(alpha: number): void {
    if (!this.mesh) return;
    const [x0, y0, x1, y1] = this.mesh.bounds;
    if (!this.cutPlane) {
      const geo = new THREE.PlaneGeometry(1, 1);
      const mat = new THREE.MeshBasicMaterial({
        color: 0x76c7ff, transparent: true, opacity: 0.18,
        side: THREE.DoubleSide, depthWrite: false,
      });
      this.cutPlane = new THREE.Mesh(geo, mat);
      this.cutPlane.rotation.x = -Math.PI / 2;
      this.scene.add(this.cutPlane);
    }
    this.cutPlane.scale.set((x1 - x0) * 1.05, (y1 - y0) * 1.05, 1);
    this.cutPlane.position.set((x0 + x1) / 2, alpha, (y0 + y1) / 2);
  }

  private renderComponents(components: CutComponent[], alpha: number): void {
    const host = this.el.componentList;
    host.innerHTML = '';
    const head = document.createElement('div');
    head.className = 'list-head';
    head.textContent =
      `${components.length} component(s) at α = ${alpha.toFixed(3)}`;
    host.appendChild(head);
    for (const comp of components) {
      const row = document.createElement('button');
      row.className = 'component-row';
      row.textContent =
        `peak ${comp.node} · height ${comp.alpha} · ${comp.size} member(s)`;
      row.addEventListener('click', () => {
        this.select(comp.node).catch((err) => this.showToast(String(err)));
      });
      host.appendChild(row);
    }
  }

  // -- picking ----------------------------------------------------------

  private async pickAt(ev: MouseEvent): Promise<void> {
    if (!this.terrain || !this.geom) return;
    const rect = this.renderer.domElement.getBoundingClientRect();
    const ndc = new THREE.Vector2(
      ((ev.clientX - rect.left) / rect.width) * 2 - 1,
      -((ev.clientY - rect.top) / rect.height) * 2 + 1,
    );
    this.raycaster.setFromCamera(ndc, this.camera);
    const hits = this.raycaster.intersectObject(this.terrain);
    if (!hits.length || hits[0].faceIndex === undefined) return;
    await this.select(this.geom.faceNode[hits[0].faceIndex!]);
  }

  async select(node: number): Promise<void> {
    if (!this.tree) return;
    this.state.selected = node;
    this.syncUrl();
    let members: MemberId[];
    let height: number;
    if (this.api) {
      const peak = await this.api.peak(node === -1 ? 'root' : node);
      members = peak.members;
      height = peak.alpha;
    } else {
      members = node === -1
        ? this.tree.doc.roots.flatMap((r) => subtreeMembers(this.tree!, r))
        : subtreeMembers(this.tree, node);
      height = this.scalarOfNode.get(node) ?? 0;
    }
    this.renderSelection(node, height, members);
  }

  private renderSelection(
    node: number, height: number, members: MemberId[],
  ): void {
    const host = this.el.selectionPanel;
    host.innerHTML = '';
    const head = document.createElement('div');
    head.className = 'list-head';
    head.textContent =
      `peak ${node} · height ${height} · ${members.length} member(s)`;
    host.appendChild(head);

    const list = document.createElement('div');
    list.className = 'member-list';
    const shown = members.slice(0, 400);
    list.textContent = shown
      .map((m) => (Array.isArray(m) ? `${m[0]}–${m[1]}` : String(m)))
      .join(', ') + (members.length > shown.length ? ', …' : '');
    host.appendChild(list);

    if (this.api) {
      const button = document.createElement('button');
      button.textContent = 'open 2D layout';
      button.addEventListener('click', () => {
        if (members.length > LAYOUT_PROMPT_LIMIT) {
          this.showToast(
            `selection has ${members.length} members; pick a smaller peak `
            + 'or raise the cross-section first');
          return;
        }
        this.api!.layout2d(members as (number | number[])[])
          .then((layout) => drawLayout(this.el.layoutCanvas, layout))
          .catch((err) => this.showToast(String(err)));
      });
      host.appendChild(button);
    }
  }

  // -- recoloring ---------------------------------------------------------

  async recolor(fieldName: string): Promise<void> {
    if (!this.geom) return;
    if (fieldName === 'self' || !this.fields) {
      this.state.field = 'self';
      this.paint();
      this.syncUrl();
      return;
    }
    const field = this.fields.fields.find((f) => f.name === fieldName);
    if (!field) throw new Error(`unknown color field '${fieldName}'`);
    this.state.field = fieldName;
    this.paint();
    this.syncUrl();
  }

  /** Current class for a node under the active color field. */
  classOf(node: number): number {
    if (this.state.field !== 'self' && this.fields && this.tree) {
      const field = this.fields.fields.find((f) => f.name === this.state.field);
      if (field) {
        const idx = this.tree.doc.nodes.findIndex((n) => n.id === node);
        if (idx >= 0) return field.node_classes[idx];
      }
    }
    return this.geom?.nodeClass.get(node) ?? 3;
  }

  private paint(): void {
    if (!this.geom || !this.terrain) return;
    const alpha = this.state.alpha;
    paintByClasses(
      this.geom,
      (node) => this.classOf(node),
      alpha === null ? undefined : {
        alpha,
        scalarOf: (node) => this.scalarOfNode.get(node) ?? -Infinity,
      },
    );
    const attr = this.terrain.geometry.getAttribute('color') as THREE.BufferAttribute;
    attr.needsUpdate = true;
  }

  private renderLegend(palette: string[]): void {
    const host = this.el.legend;
    host.innerHTML = '';
    palette.forEach((name, i) => {
      const chip = document.createElement('span');
      chip.className = 'legend-chip';
      chip.style.background = PALETTE_CSS[i];
      chip.title = name;
      const label = document.createElement('span');
      label.textContent = name;
      host.append(chip, label);
    });
  }

  // -- chrome -------------------------------------------------------------

  private showBanner(message: string): void {
    this.el.banner.textContent = message;
    this.el.banner.style.display = 'block';
  }

  private hideBanner(): void {
    this.el.banner.style.display = 'none';
  }

  private showToast(message: string): void {
    const toast = this.el.toast;
    toast.textContent = message;
    toast.style.display = 'block';
    setTimeout(() => { toast.style.display = 'none'; }, 4000);
  }

  private syncUrl(): void {
    const offset = this.camera.position.clone().sub(this.controls.target);
    this.state.camera = {
      theta: Math.atan2(offset.x, offset.z),
      phi: Math.acos(Math.min(Math.max(offset.y / offset.length(), -1), 1)),
      radius: offset.length(),
    };
    history.replaceState(null, '', `#${encodeState(this.state)}`);
  }

  private resize(): void {
    const width = this.el.canvasHost.clientWidth || 800;
    const height = this.el.canvasHost.clientHeight || 600;
    this.camera.aspect = width / height;
    this.camera.updateProjectionMatrix();
    this.renderer.setSize(width, height);
  }
}
