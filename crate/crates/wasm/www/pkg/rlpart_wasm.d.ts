/* tslint:disable */
/* eslint-disable */

/**
 * A planted (r,l)-graph on `n` vertices plus `plant` noise vertices.
 */
export function generate(seed: number, n: number, r: number, l: number, plant: number, p: number): string;

/**
 * Is the graph an (r,l)-graph? Returns a report with an empty deletion.
 */
export function recognize(edge_list: string, r: number, l: number): string;

/**
 * Deletion to an (r,l)-graph with budget `k`. `mode` is `vertex` or
 * `edge`; `any` asks vertex (2,2) for some solution within budget rather
 * than a minimum one.
 */
export function solve(edge_list: string, mode: string, r: number, l: number, k: number, any: boolean): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly generate: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number];
    readonly recognize: (a: number, b: number, c: number, d: number) => [number, number];
    readonly solve: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
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
