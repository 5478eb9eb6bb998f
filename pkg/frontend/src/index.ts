export { AugforgeClient, AugforgeCliError, BoundEntryHandle } from "./client.js";
export type {
  ClientOptions,
  EntryMeta,
  EvaluateOptions,
  FilterOptions,
  ListOptions,
  Params,
  ParamValue,
  ScoreReport,
  TagQuery,
  TransformOptions,
} from "./types.js";

import { AugforgeClient } from "./client.js";
import type {
  EvaluateOptions,
  FilterOptions,
  ListOptions,
  ScoreReport,
  TransformOptions,
} from "./types.js";

const defaultClient = new AugforgeClient();

/** Module-level conveniences bound to a default client. */
export function listEntries(options: ListOptions = {}) {
  return defaultClient.listEntries(options);
}

export function transform(id: string, texts: string[], options: TransformOptions = {}) {
  return defaultClient.transform(id, texts, options);
}

export function filter(id: string, texts: string[], options: FilterOptions = {}) {
  return defaultClient.filter(id, texts, options);
}

export function evaluate(id: string, options: EvaluateOptions): ScoreReport {
  return defaultClient.evaluate(id, options);
}
