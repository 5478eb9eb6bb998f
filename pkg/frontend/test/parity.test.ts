/**
 * Binding parity suite: every transform/filter result obtained through the
 * binding must be byte-identical to what a direct CLI invocation produces on
 * the same fixture with the same seed.  The binding adds no logic, so any
 * divergence here is an argument-plumbing bug.
 */

import assert from "node:assert/strict";
import { spawnSync } from "node:child_process";
import { mkdtempSync, readFileSync, rmSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { dirname, join } from "node:path";
import { test } from "node:test";
import { fileURLToPath } from "node:url";

import { AugforgeClient } from "../src/index.js";
import type { Params } from "../src/index.js";

const HERE = dirname(fileURLToPath(import.meta.url));
const REPO_ROOT = join(HERE, "..", "..", "..");
const FIXTURE = join(REPO_ROOT, "frontend", "test", "fixtures", "mixed_200.jsonl");
const SEED = 424242;

const env = {
  ...process.env,
  PYTHONPATH: join(REPO_ROOT, "src"),
};

const client = new AugforgeClient({ env: { PYTHONPATH: join(REPO_ROOT, "src") } });

interface FixtureRow {
  id: string;
  text: string;
}

function fixtureRows(): FixtureRow[] {
  return readFileSync(FIXTURE, "utf-8")
    .split("\n")
    .filter((line) => line.trim())
    .map((line) => JSON.parse(line) as FixtureRow);
}

function cliDirect(args: string[]): string {
  const proc = spawnSync("python3", ["-m", "augforge", ...args], {
    encoding: "utf-8",
    env,
    maxBuffer: 64 * 1024 * 1024,
  });
  assert.equal(proc.status, 0, proc.stderr);
  return proc.stdout;
}

function cliTransformDirect(id: string, params: string[]): Map<string, string> {
  const dir = mkdtempSync(join(tmpdir(), "parity-"));
  try {
    const outPath = join(dir, "out.jsonl");
    const args = [
      "transform", id, "--in", FIXTURE, "--out", outPath, "--seed", String(SEED),
    ];
    if (params.length) args.push("--params", ...params);
    cliDirect(args);
    const out = new Map<string, string>();
    for (const line of readFileSync(outPath, "utf-8").split("\n")) {
      if (!line.trim()) continue;
      const obj = JSON.parse(line) as FixtureRow;
      out.set(obj.id, obj.text);
    }
    return out;
  } finally {
    rmSync(dir, { recursive: true, force: true });
  }
}

function cliFilterDirect(id: string, params: string[]): Map<string, boolean> {
  const dir = mkdtempSync(join(tmpdir(), "parity-"));
  try {
    const outPath = join(dir, "out.jsonl");
    const args = ["filter", id, "--in", FIXTURE, "--out", outPath];
    if (params.length) args.push("--params", ...params);
    cliDirect(args);
    const out = new Map<string, boolean>();
    for (const line of readFileSync(outPath, "utf-8").split("\n")) {
      if (!line.trim()) continue;
      const obj = JSON.parse(line) as { id: string; value: boolean };
      out.set(obj.id, obj.value);
    }
    return out;
  } finally {
    rmSync(dir, { recursive: true, force: true });
  }
}

function assertBytesEqual(actual: string, expected: string, label: string) {
  assert.ok(
    Buffer.from(actual, "utf-8").equals(Buffer.from(expected, "utf-8")),
    `${label}: binding bytes differ from CLI bytes`,
  );
}

const TRANSFORM_CASES: Array<{ id: string; params?: Params; cliParams: string[] }> = [
  { id: "contraction_expansions", cliParams: [] },
  { id: "butter_fingers", params: { p: 0.3 }, cliParams: ["p=0.3"] },
  { id: "leet_letters", params: { p: 0.5 }, cliParams: ["p=0.5"] },
  { id: "pig_latin", cliParams: [] },
  { id: "simple_ciphers", params: { mode: "homoglyph" }, cliParams: ["mode=homoglyph"] },
  { id: "numeric_to_word", cliParams: [] },
  { id: "replace_financial_amounts", cliParams: [] },
  { id: "random_deletion", cliParams: [] },
  { id: "change_date_format", cliParams: [] },
  { id: "americanize_britishize_english", cliParams: [] },
  { id: "whitespace_perturbation", cliParams: [] },
  { id: "unit_converter", cliParams: [] },
];

for (const { id, params, cliParams } of TRANSFORM_CASES) {
  test(`transform parity: ${id}`, () => {
    const rows = fixtureRows();
    const expected = cliTransformDirect(id, cliParams);
    const got = client.transform(
      id,
      rows.map((r) => r.text),
      { seed: SEED, params, ids: rows.map((r) => r.id) },
    );
    assert.equal(got.length, rows.length);
    rows.forEach((row, i) => {
      assertBytesEqual(got[i], expected.get(row.id)!, `${id}/${row.id}`);
    });
  });
}

const FILTER_CASES: Array<{ id: string; params?: Params; cliParams: string[] }> = [
  { id: "length", params: { op: ">", threshold: 6 }, cliParams: ["op=>", "threshold=6"] },
  { id: "numeric", cliParams: [] },
  { id: "encoding", cliParams: [] },
  { id: "special_casing", cliParams: [] },
  { id: "repetitions", cliParams: [] },
  { id: "diacritic", cliParams: [] },
  { id: "yesno_question", cliParams: [] },
  { id: "quantitative_ques", cliParams: [] },
  { id: "englishness", cliParams: [] },
  {
    id: "soundex",
    params: { keywords: ["trombone", "cricket"] },
    cliParams: ['keywords=["trombone", "cricket"]'],
  },
];

for (const { id, params, cliParams } of FILTER_CASES) {
  test(`filter parity: ${id}`, () => {
    const rows = fixtureRows();
    const expected = cliFilterDirect(id, cliParams);
    const got = client.filter(
      id,
      rows.map((r) => r.text),
      { params, ids: rows.map((r) => r.id) },
    );
    rows.forEach((row, i) => {
      assert.equal(got[i], expected.get(row.id), `${id}/${row.id}`);
    });
  });
}

test("list entries matches CLI json", () => {
  const viaBinding = client.listEntries();
  const direct = JSON.parse(cliDirect(["list", "--format", "json"]));
  assert.deepEqual(viaBinding, direct);
  assert.ok(viaBinding.length >= 45);
});

test("tag query round-trips", () => {
  const preserved = client.listEntries({
    tag: { criterion: "meaning", value: "always-preserved" },
  });
  assert.ok(preserved.some((e) => e.id === "contraction_expansions"));
  assert.ok(preserved.every((e) => e.kind === "transformation"));
});

test("bound entry handle mirrors defaults and transforms", () => {
  const handle = client.entry("butter_fingers");
  assert.equal(handle.defaults.p, 0.1);
  assert.equal(handle.defaults.layout, "qwerty");
  const [out] = handle.transform(["the quick brown fox"], { seed: 7, params: { p: 1.0 } });
  assert.notEqual(out, "the quick brown fox");
});

test("scalar wrappers", () => {
  assert.equal(
    client.transformOne("contraction_expansions", "I'm fine", { seed: 1 }),
    "I am fine",
  );
  assert.equal(client.filterOne("numeric", "room 101"), true);
  assert.equal(client.transform("pig_latin", []).length, 0);
});

test("evaluate parity with direct CLI", () => {
  const dir = mkdtempSync(join(tmpdir(), "parity-eval-"));
  try {
    const rows = fixtureRows().slice(0, 40);
    const corpusPath = join(dir, "corpus.jsonl");
    const predsPath = join(dir, "preds.jsonl");
    const corpusLines = rows.map((r, i) =>
      JSON.stringify({ id: r.id, text: r.text, label: String(i % 2) }),
    );
    const predLines = rows.flatMap((r, i) => [
      JSON.stringify({ id: r.id, variant: "original", prediction: String(i % 2) }),
      JSON.stringify({ id: r.id, variant: "perturbed", prediction: "0" }),
    ]);
    writeFileSync(corpusPath, corpusLines.join("\n") + "\n", "utf-8");
    writeFileSync(predsPath, predLines.join("\n") + "\n", "utf-8");

    const viaBinding = client.evaluate("simple_ciphers", {
      corpusPath,
      provider: `file:${predsPath}`,
      seed: SEED,
      fraction: 0.5,
    });
    const direct = JSON.parse(
      cliDirect([
        "evaluate", "simple_ciphers", "--corpus", corpusPath,
        "--provider", `file:${predsPath}`, "--seed", String(SEED),
        "--fraction", "0.5",
      ]),
    );
    assert.deepEqual(viaBinding, direct);
    assert.equal(viaBinding.n, 20);
  } finally {
    rmSync(dir, { recursive: true, force: true });
  }
});

test("unknown entry raises with exit code 2", () => {
  assert.throws(
    () => client.transform("not_a_real_entry", ["x"]),
    (err: Error) => /exited with 2/.test(err.message),
  );
});
