/** Parameter values accepted by entries (serialized as JSON on the CLI). */
export type ParamValue = string | number | boolean | null | ParamValue[];

export type Params = Record<string, ParamValue>;

export interface EntryMeta {
  id: string;
  kind: "transformation" | "filter";
  description: string;
  default_params: Params;
}

export interface TagQuery {
  /** Criterion name, e.g. "meaning", "implementation", "linguistic-level". */
  criterion: string;
  /** Kebab-case tag value, e.g. "always-preserved". */
  value: string;
}

export interface ListOptions {
  kind?: "transformation" | "filter";
  tag?: TagQuery;
}

export interface TransformOptions {
  seed?: number;
  params?: Params;
  /** Item ids keying each text's random stream; defaults to "0", "1", ... */
  ids?: string[];
  workers?: number;
}

export interface FilterOptions {
  params?: Params;
  ids?: string[];
}

export interface EvaluateOptions {
  /** Path to a corpus JSONL file. */
  corpusPath: string;
  /** Provider spec: "file:PATH" or "http:URL". */
  provider: string;
  seed?: number;
  fraction?: number;
  baseline?: "sample" | "full";
  params?: Params;
  /** Write the perturbation run JSONL here as well. */
  runOut?: string;
}

export interface ScoreReport {
  entry_id: string;
  n: number;
  transformation_rate: number | null;
  original_score: number;
  perturbed_score: number;
  var_s: number;
}

export interface ClientOptions {
  /** Command prefix launching the CLI (default: ["python3", "-m", "augforge"]). */
  command?: string[];
  /** Data override directory (forwarded as --data-dir). */
  dataDir?: string;
  /** Extra environment variables for the CLI process. */
  env?: Record<string, string>;
}
