"""Command-line entry point.

Exit codes: 0 success, 1 runtime error, 2 usage error or unknown id.
Data goes to stdout, diagnostics to stderr, so output is pipe-safe.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import api
from .corpus import load_corpus, write_run
from .entries import (
    apply_corpus_filter,
    apply_filter,
    builtin_registry,
    is_corpus_filter,
    merge_params,
)
from .errors import AugforgeError, UnknownEntryError
from .harness import (
    ScoreReport,
    aggregate_by_tag,
    make_provider,
    render_report,
)
from .registry import EntryKind, datacard_json
from .resources import DATA_ENV
from .tags import CRITERIA

USAGE_EXIT = 2
ERROR_EXIT = 1


def _parse_params(pairs: list[str]) -> dict:
    params = {}
    for pair in pairs:
        key, sep, value = pair.partition("=")
        if not sep or not key:
            raise SystemExit(f"bad --params entry {pair!r}, expected key=value")
        try:
            params[key] = json.loads(value)
        except json.JSONDecodeError:
            params[key] = value
    return params


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="augforge",
        description="Deterministic text perturbations, filters, and robustness evaluation.",
    )
    parser.add_argument("--data-dir", help=f"data override directory (also ${DATA_ENV})")
    sub = parser.add_subparsers(dest="command", required=True)

    p_list = sub.add_parser("list", help="list registered entries")
    p_list.add_argument("--kind", choices=["transformation", "filter"])
    p_list.add_argument("--tag", help="CRITERION=VALUE tag query, e.g. meaning=always-preserved")
    p_list.add_argument("--format", default="md", choices=["md", "csv", "json"])

    p_desc = sub.add_parser("describe", help="print one entry's datacard as JSON")
    p_desc.add_argument("id")

    p_tr = sub.add_parser("transform", help="transform a JSONL corpus file")
    p_tr.add_argument("id")
    p_tr.add_argument("--in", dest="in_path", required=True)
    p_tr.add_argument("--out", dest="out_path", required=True)
    p_tr.add_argument("--seed", type=int, default=api.DEFAULT_SEED)
    p_tr.add_argument("--params", nargs="*", default=[], metavar="KEY=VALUE")
    p_tr.add_argument("--workers", type=int, default=1)

    p_fl = sub.add_parser("filter", help="run a filter over a JSONL corpus file")
    p_fl.add_argument("id")
    p_fl.add_argument("--in", dest="in_path", required=True)
    p_fl.add_argument("--out", dest="out_path", required=True)
    p_fl.add_argument("--params", nargs="*", default=[], metavar="KEY=VALUE")

    p_ev = sub.add_parser("evaluate", help="run the perturb-and-score protocol")
    p_ev.add_argument("id")
    p_ev.add_argument("--corpus", required=True)
    p_ev.add_argument("--provider", required=True, help="file:PATH or http:URL")
    p_ev.add_argument("--seed", type=int, default=api.DEFAULT_SEED)
    p_ev.add_argument("--fraction", type=float, default=0.2)
    p_ev.add_argument("--baseline", default="sample", choices=["sample", "full"])
    p_ev.add_argument("--params", nargs="*", default=[], metavar="KEY=VALUE")
    p_ev.add_argument("--workers", type=int, default=1)
    p_ev.add_argument("--run-out", help="also write the perturbation run JSONL here")

    p_rep = sub.add_parser("report", help="aggregate score reports by tag")
    p_rep.add_argument("--reports", required=True, help="directory of ScoreReport JSON files")
    p_rep.add_argument("--criterion", required=True, choices=sorted(CRITERIA))
    p_rep.add_argument("--format", default="md", choices=["md", "csv", "json"])

    return parser


def _get_entry(entry_id: str):
    try:
        return builtin_registry().get(entry_id)
    except UnknownEntryError:
        print(f"augforge: unknown entry id {entry_id!r}", file=sys.stderr)
        raise SystemExit(USAGE_EXIT) from None


def _cmd_list(args) -> int:
    tag = None
    if args.tag:
        criterion, sep, value = args.tag.partition("=")
        if not sep or criterion not in CRITERIA:
            print(f"augforge: bad tag query {args.tag!r}", file=sys.stderr)
            return USAGE_EXIT
        tag = (criterion, value)
    records = api.list_entries(kind=args.kind, tag=tag)
    if args.format == "json":
        print(json.dumps(records, indent=2, sort_keys=True))
    elif args.format == "csv":
        print("id,kind,description")
        for r in records:
            desc = r["description"].replace('"', '""')
            print(f'{r["id"]},{r["kind"]},"{desc}"')
    else:
        width = max((len(r["id"]) for r in records), default=2)
        print(f"| {'id'.ljust(width)} | kind           | description |")
        print(f"| {'-' * width} | -------------- | ----------- |")
        for r in records:
            print(f"| {r['id'].ljust(width)} | {r['kind'].ljust(14)} | {r['description']} |")
    return 0


def _cmd_describe(args) -> int:
    entry = _get_entry(args.id)
    print(datacard_json(entry))
    return 0


def _cmd_transform(args) -> int:
    entry = _get_entry(args.id)
    if entry.kind is not EntryKind.TRANSFORMATION:
        print(f"augforge: {args.id} is not a transformation", file=sys.stderr)
        return USAGE_EXIT
    params = merge_params(entry, _parse_params(args.params))
    corpus = load_corpus(args.in_path)
    texts = [ex.text for ex in corpus.examples]
    ids = [ex.id for ex in corpus.examples]
    outputs = api.transform_texts(
        args.id, texts, seed=args.seed, params=params, ids=ids, workers=args.workers
    )
    lines = []
    for ex, new_text in zip(corpus.examples, outputs):
        obj = {"id": ex.id}
        if ex.is_pair:
            obj["text1"] = new_text
            obj["text2"] = ex.text2
        else:
            obj["text"] = new_text
        if ex.label is not None:
            obj["label"] = ex.label
        lines.append(json.dumps(obj, ensure_ascii=False))
    Path(args.out_path).write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {len(lines)} examples to {args.out_path}", file=sys.stderr)
    return 0


def _cmd_filter(args) -> int:
    entry = _get_entry(args.id)
    if entry.kind is not EntryKind.FILTER:
        print(f"augforge: {args.id} is not a filter", file=sys.stderr)
        return USAGE_EXIT
    overrides = _parse_params(args.params)
    corpus = load_corpus(args.in_path)
    lines = []
    if is_corpus_filter(args.id):
        verdicts = apply_corpus_filter(args.id, [ex.text for ex in corpus.examples], overrides)
        for category in sorted(verdicts):
            lines.append(
                json.dumps({"category": category, "value": verdicts[category].value})
            )
    else:
        for ex in corpus.examples:
            verdict = apply_filter(args.id, ex, overrides)
            lines.append(json.dumps({"id": ex.id, "value": verdict.value}))
    Path(args.out_path).write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {len(lines)} verdicts to {args.out_path}", file=sys.stderr)
    return 0


def _cmd_evaluate(args) -> int:
    entry = _get_entry(args.id)
    if entry.kind is not EntryKind.TRANSFORMATION:
        print(f"augforge: {args.id} is not a transformation", file=sys.stderr)
        return USAGE_EXIT
    params = _parse_params(args.params)
    merge_params(entry, params)  # validate keys up front
    corpus = load_corpus(args.corpus)
    provider = make_provider(args.provider, auth_header=os.environ.get("AUGFORGE_AUTH_HEADER"))
    report, run = api.evaluate_corpus(
        corpus,
        args.id,
        provider,
        seed=args.seed,
        fraction=args.fraction,
        baseline=args.baseline,
        params=params,
        workers=args.workers,
    )
    if args.run_out:
        write_run(run, args.run_out)
    print(json.dumps(report.to_dict(), indent=2, sort_keys=True))
    return 0


def _cmd_report(args) -> int:
    reports_dir = Path(args.reports)
    reports = []
    for path in sorted(reports_dir.glob("*.json")):
        reports.append(ScoreReport.from_dict(json.loads(path.read_text(encoding="utf-8"))))
    aggregates = aggregate_by_tag(reports, builtin_registry(), args.criterion)
    fmt = {"md": "markdown"}.get(args.format, args.format)
    sys.stdout.write(render_report(aggregates, fmt))
    return 0


_COMMANDS = {
    "list": _cmd_list,
    "describe": _cmd_describe,
    "transform": _cmd_transform,
    "filter": _cmd_filter,
    "evaluate": _cmd_evaluate,
    "report": _cmd_report,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.data_dir:
        os.environ[DATA_ENV] = args.data_dir
    try:
        return _COMMANDS[args.command](args)
    except ValueError as exc:
        print(f"augforge: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except AugforgeError as exc:
        print(f"augforge: {exc}", file=sys.stderr)
        return ERROR_EXIT
    except OSError as exc:
        print(f"augforge: {exc}", file=sys.stderr)
        return ERROR_EXIT


if __name__ == "__main__":
    raise SystemExit(main())
