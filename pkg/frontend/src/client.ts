/**
 * Thin client around the augforge CLI.
 *
 * No perturbation logic lives on this side of the boundary: every call shells
 * out to the CLI and speaks its public JSONL formats, so results are
 * byte-identical to direct CLI invocations with the same seed.  Signatures
 * are batch-first; scalar convenience wrappers sit on top.
 */

import { spawnSync } from "node:child_process";
import { mkdtempSync, readFileSync, rmSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";

import type {
  ClientOptions,
  EntryMeta,
  EvaluateOptions,
  FilterOptions,
  ListOptions,
  Params,
  ScoreReport,
  TransformOptions,
} from "./types.js";

export class AugforgeCliError extends Error {
  constructor(
    message: string,
    public readonly exitCode: number,
    public readonly stderr: string,
  ) {
    super(message);
    this.name = "AugforgeCliError";
  }
}

function paramArgs(params: Params | undefined): string[] {
  if (!params || Object.keys(params).length === 0) return [];
  const pairs = Object.entries(params).map(
    ([key, value]) =>
      `${key}=${typeof value === "string" ? value : JSON.stringify(value)}`,
  );
  return ["--params", ...pairs];
}

function defaultIds(count: number): string[] {
  return Array.from({ length: count }, (_, i) => String(i));
}

export class AugforgeClient {
  private readonly command: string[];
  private readonly dataDir?: string;
  private readonly env: NodeJS.ProcessEnv;

  constructor(options: ClientOptions = {}) {
    this.command = options.command ?? ["python3", "-m", "augforge"];
    this.dataDir = options.dataDir;
    this.env = { ...process.env, ...options.env };
  }

  /** Run one CLI subcommand, returning stdout; throws on nonzero exit. */
  run(args: string[]): string {
    const [cmd, ...prefix] = this.command;
    const full = this.dataDir
      ? [...prefix, "--data-dir", this.dataDir, ...args]
      : [...prefix, ...args];
    const proc = spawnSync(cmd, full, {
      encoding: "utf-8",
      env: this.env,
      maxBuffer: 64 * 1024 * 1024,
    });
    if (proc.error) throw proc.error;
    if (proc.status !== 0) {
      throw new AugforgeCliError(
        `augforge ${args[0]} exited with ${proc.status}: ${proc.stderr.trim()}`,
        proc.status ?? -1,
        proc.stderr,
      );
    }
    return proc.stdout;
  }

  listEntries(options: ListOptions = {}): EntryMeta[] {
    const args = ["list", "--format", "json"];
    if (options.kind) args.push("--kind", options.kind);
    if (options.tag) args.push("--tag", `${options.tag.criterion}=${options.tag.value}`);
    return JSON.parse(this.run(args)) as EntryMeta[];
  }

  describe(id: string): Record<string, unknown> {
    return JSON.parse(this.run(["describe", id])) as Record<string, unknown>;
  }

  entry(id: string): BoundEntryHandle {
    const meta = this.listEntries().find((e) => e.id === id);
    if (!meta) {
      throw new AugforgeCliError(`unknown entry id ${id}`, 2, "");
    }
    return new BoundEntryHandle(this, meta);
  }

  transform(id: string, texts: string[], options: TransformOptions = {}): string[] {
    if (texts.length === 0) return [];
    const ids = options.ids ?? defaultIds(texts.length);
    return this.withWorkdir((dir) => {
      const inPath = join(dir, "in.jsonl");
      const outPath = join(dir, "out.jsonl");
      writeFileSync(inPath, toJsonl(ids, texts), "utf-8");
      const args = ["transform", id, "--in", inPath, "--out", outPath];
      if (options.seed !== undefined) args.push("--seed", String(options.seed));
      if (options.workers !== undefined) args.push("--workers", String(options.workers));
      args.push(...paramArgs(options.params));
      this.run(args);
      return fromJsonl(outPath, ids, (obj) => obj.text as string);
    });
  }

  transformOne(id: string, text: string, options: TransformOptions = {}): string {
    return this.transform(id, [text], options)[0];
  }

  filter(id: string, texts: string[], options: FilterOptions = {}): boolean[] {
    if (texts.length === 0) return [];
    const ids = options.ids ?? defaultIds(texts.length);
    return this.withWorkdir((dir) => {
      const inPath = join(dir, "in.jsonl");
      const outPath = join(dir, "out.jsonl");
      writeFileSync(inPath, toJsonl(ids, texts), "utf-8");
      const args = ["filter", id, "--in", inPath, "--out", outPath];
      args.push(...paramArgs(options.params));
      this.run(args);
      return fromJsonl(outPath, ids, (obj) => obj.value as boolean);
    });
  }

  filterOne(id: string, text: string, options: FilterOptions = {}): boolean {
    return this.filter(id, [text], options)[0];
  }

  evaluate(id: string, options: EvaluateOptions): ScoreReport {
    const args = [
      "evaluate",
      id,
      "--corpus",
      options.corpusPath,
      "--provider",
      options.provider,
    ];
    if (options.seed !== undefined) args.push("--seed", String(options.seed));
    if (options.fraction !== undefined) args.push("--fraction", String(options.fraction));
    if (options.baseline) args.push("--baseline", options.baseline);
    if (options.runOut) args.push("--run-out", options.runOut);
    args.push(...paramArgs(options.params));
    return JSON.parse(this.run(args)) as ScoreReport;
  }

  private withWorkdir<T>(body: (dir: string) => T): T {
    const dir = mkdtempSync(join(tmpdir(), "augforge-"));
    try {
      return body(dir);
    } finally {
      rmSync(dir, { recursive: true, force: true });
    }
  }
}

/** An entry id plus its parameter defaults, bound to a client. */
export class BoundEntryHandle {
  constructor(
    private readonly client: AugforgeClient,
    public readonly meta: EntryMeta,
  ) {}

  get id(): string {
    return this.meta.id;
  }

  get defaults(): Params {
    return { ...this.meta.default_params };
  }

  transform(texts: string[], options: TransformOptions = {}): string[] {
    return this.client.transform(this.meta.id, texts, options);
  }

  filter(texts: string[], options: FilterOptions = {}): boolean[] {
    return this.client.filter(this.meta.id, texts, options);
  }
}

function toJsonl(ids: string[], texts: string[]): string {
  return (
    texts.map((text, i) => JSON.stringify({ id: ids[i], text })).join("\n") + "\n"
  );
}

function fromJsonl<T>(
  path: string,
  ids: string[],
  pick: (obj: Record<string, unknown>) => T,
): T[] {
  const byId = new Map<string, T>();
  for (const line of readFileSync(path, "utf-8").split("\n")) {
    if (!line.trim()) continue;
    const obj = JSON.parse(line) as Record<string, unknown>;
    byId.set(String(obj.id), pick(obj));
  }
  return ids.map((id) => {
    const value = byId.get(id);
    if (value === undefined) {
      throw new AugforgeCliError(`CLI output missing id ${id}`, 1, "");
    }
    return value;
  });
}
