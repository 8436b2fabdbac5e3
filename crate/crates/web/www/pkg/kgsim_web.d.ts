/* tslint:disable */
/* eslint-disable */

/**
 * JSON text of a bundled config (`"case_a"` or `"case_b"`).
 */
export function bundledConfig(name: string): string;

/**
 * OpenQASM 2.0 for the configured component evolved to `t` in `r` steps.
 */
export function exportQasm(config_json: string, t: number, r: number): string;

/**
 * `r,error` CSV of Trotter error against the exact propagator.
 */
export function oracleCompare(config_json: string, t: number, steps: Uint32Array): string;

/**
 * Runs the time sweep and returns the heatmap SVG.
 */
export function sweepSvg(config_json: string): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly bundledConfig: (a: number, b: number) => [number, number, number, number];
    readonly exportQasm: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly oracleCompare: (a: number, b: number, c: number, d: number, e: number) => [number, number, number, number];
    readonly sweepSvg: (a: number, b: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
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
