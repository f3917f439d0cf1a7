/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_pointview_free: (a: number, b: number) => void;
export const a_grid: (a: number, b: number, c: number) => [number, number, number, number];
export const evaluate_point: (a: number, b: number, c: number) => [number, number, number];
export const max_n: () => number;
export const perp_variance_profile: (a: number, b: number, c: number, d: number) => [number, number, number, number];
export const pointview_perp_var: (a: number) => number;
export const pointview_populations: (a: number) => [number, number];
export const pointview_sx: (a: number) => number;
export const pointview_sz: (a: number) => number;
export const pointview_verdict: (a: number) => [number, number];
export const pointview_xi: (a: number) => number;
export const pointview_xi_oracle: (a: number) => number;
export const xi_curves: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_start: () => void;
