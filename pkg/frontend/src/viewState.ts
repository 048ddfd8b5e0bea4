// Shareable view state, URL-hash encoded. Reloading a link restores the
// camera, cross-section height, selection and color field.

export interface ViewState {
  alpha: number | null;
  selected: number | null;
  field: string;
  camera: { theta: number; phi: number; radius: number } | null;
}

export const DEFAULT_STATE: ViewState = {
  alpha: null,
  selected: null,
  field: 'self',
  camera: null,
};

export function encodeState(state: ViewState): string {
  const params = new URLSearchParams();
  if (state.alpha !== null) params.set('alpha', trim(state.alpha));
  if (state.selected !== null) params.set('sel', String(state.selected));
  if (state.field !== 'self') params.set('field', state.field);
  if (state.camera) {
    params.set('cam', [state.camera.theta, state.camera.phi, state.camera.radius]
      .map(trim).join(','));
  }
  return params.toString();
}

export function decodeState(hash: string): ViewState {
  const params = new URLSearchParams(hash.replace(/^#/, ''));
  const state: ViewState = { ...DEFAULT_STATE };
  const alpha = params.get('alpha');
  if (alpha !== null && Number.isFinite(Number(alpha))) state.alpha = Number(alpha);
  const sel = params.get('sel');
  if (sel !== null && Number.isFinite(Number(sel))) state.selected = Number(sel);
  const field = params.get('field');
  if (field) state.field = field;
  const cam = params.get('cam');
  if (cam) {
    const parts = cam.split(',').map(Number);
    if (parts.length === 3 && parts.every(Number.isFinite)) {
      state.camera = { theta: parts[0], phi: parts[1], radius: parts[2] };
    }
  }
  return state;
}

function trim(x: number): string {
  return Number(x.toFixed(5)).toString();
}
