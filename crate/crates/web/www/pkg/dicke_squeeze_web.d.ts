/* tslint:disable */
/* eslint-disable */

export class PointView {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    /**
     * NaN when the mean spin vanishes.
     */
    readonly perp_var: number;
    /**
     * Normalized Dicke populations, index = number of excitations.
     */
    readonly populations: Float64Array;
    readonly sx: number;
    readonly sz: number;
    readonly verdict: string;
    readonly xi: number;
    readonly xi_oracle: number;
}

export function a_grid(a_start: number, a_end: number, steps: number): Float64Array;

export function evaluate_point(n: number, k: number, a: number): PointView;

export function max_n(): number;

export function perp_variance_profile(n: number, k: number, a: number, steps: number): Float64Array;

/**
 * Flat array of `ks.len()` curves, `steps` values each; NaN where undefined.
 */
export function xi_curves(n: number, ks: Uint32Array, a_start: number, a_end: number, steps: number): Float64Array;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_pointview_free: (a: number, b: number) => void;
    readonly a_grid: (a: number, b: number, c: number) => [number, number, number, number];
    readonly evaluate_point: (a: number, b: number, c: number) => [number, number, number];
    readonly max_n: () => number;
    readonly perp_variance_profile: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly pointview_perp_var: (a: number) => number;
    readonly pointview_populations: (a: number) => [number, number];
    readonly pointview_sx: (a: number) => number;
    readonly pointview_sz: (a: number) => number;
    readonly pointview_verdict: (a: number) => [number, number];
    readonly pointview_xi: (a: number) => number;
    readonly pointview_xi_oracle: (a: number) => number;
    readonly xi_curves: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
