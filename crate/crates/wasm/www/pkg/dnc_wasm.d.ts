/* tslint:disable */
/* eslint-disable */

/**
 * A Kripke model with at most `max_worlds` worlds whose root does not
 * force the propositional `formula`; `model` is null if there is none.
 */
export function countermodel(formula: string, max_worlds: number): string;

/**
 * Searches for a derivation of `sequent` after expanding classical
 * constructors. A depth of 0 selects the default.
 */
export function prove(logic: string, sequent: string, depth: number): string;

/**
 * `method` is one of dowek, kgg, before, after, light.
 */
export function translate(method: string, formula: string): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly countermodel: (a: number, b: number, c: number) => [number, number];
    readonly prove: (a: number, b: number, c: number, d: number, e: number) => [number, number];
    readonly translate: (a: number, b: number, c: number, d: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
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
