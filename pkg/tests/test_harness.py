import http.server
import json
import threading

import pytest
from conftest import make_entry

from augforge.corpus import Corpus, Pairing, PerturbationRun, RunRecord, Split
from augforge.errors import (
    EmptyRunError,
    IncompleteCoverageError,
    MissingLabelError,
    ProviderError,
    UnknownEntryError,
)
from augforge.harness import (
    FileProvider,
    HttpProvider,
    PredictionSet,
    ScoreReport,
    TagAggregate,
    accuracy,
    aggregate_by_tag,
    make_provider,
    parse_report_csv,
    render_report,
    score_variation,
    transformation_rate,
)
from augforge.registry import Registry
from augforge.tags import Meaning
from augforge.types import Example


def run_of(changed_flags, entry_id="entry"):
    records = [
        RunRecord(id=f"r{i}", original="a", perturbed="b" if c else "a", changed=c)
        for i, c in enumerate(changed_flags)
    ]
    return PerturbationRun(
        entry_id=entry_id,
        global_seed=0,
        sample_fraction=1.0,
        selected_ids=tuple(rec.id for rec in records),
        records=records,
    )


def test_transformation_rate():
    assert transformation_rate(run_of([True] * 7 + [False] * 3)) == 0.7
    assert transformation_rate(run_of([False] * 4)) == 0.0


def test_transformation_rate_matches_brute_force():
    run = run_of([True, False, True, True, False])
    brute = sum(1 for rec in run.records if rec.original != rec.perturbed) / len(run.records)
    assert transformation_rate(run) == brute


def test_empty_run():
    with pytest.raises(EmptyRunError):
        transformation_rate(run_of([]))


def corpus_with_labels(labels):
    return Corpus(
        name="g",
        split=Split.VALIDATION,
        pairing=Pairing.SINGLE,
        examples=[Example(id=f"r{i}", text="t", label=l) for i, l in enumerate(labels)],
    )


def test_accuracy_and_variation():
    gold = corpus_with_labels(["x", "x", "y", "y"])
    preds = PredictionSet("e", "original", {"r0": "x", "r1": "y", "r2": "y", "r3": "y"})
    assert accuracy(preds, gold) == 75.0
    assert score_variation(94, 56) == -38
    assert score_variation(91, 47) == -44
    assert score_variation(80.0, 80.0) == 0


def test_accuracy_missing_label():
    gold = corpus_with_labels(["x", None])
    preds = PredictionSet("e", "original", {"r0": "x", "r1": "x"})
    with pytest.raises(MissingLabelError):
        accuracy(preds, gold)


def test_accuracy_missing_prediction():
    gold = corpus_with_labels(["x", "y"])
    preds = PredictionSet("e", "original", {"r0": "x"})
    with pytest.raises(MissingLabelError):
        accuracy(preds, gold)


def report(entry_id, rate, var):
    return ScoreReport(
        entry_id=entry_id,
        n=10,
        transformation_rate=rate,
        original_score=90.0,
        perturbed_score=90.0 + var,
        var_s=var,
    )


def synthetic_registry():
    return Registry(
        [
            make_entry("p1", meaning=Meaning.ALWAYS_PRESERVED),
            make_entry("p2", meaning=Meaning.ALWAYS_PRESERVED),
            make_entry("p3", meaning=Meaning.ALWAYS_PRESERVED),
            make_entry("c1", meaning=Meaning.POSSIBLY_CHANGED),
            make_entry("c2", meaning=Meaning.POSSIBLY_CHANGED),
            make_entry("a1", meaning=Meaning.ALWAYS_ADDED),
        ]
    )


def test_aggregate_means_and_counts():
    reg = synthetic_registry()
    reports = [report("p1", 0.25, -8.0), report("p2", 0.75, -12.0), report("c1", 1.0, -4.0)]
    aggregates = aggregate_by_tag(reports, reg, "meaning")
    by_tag = {a.tag: a for a in aggregates}
    preserved = by_tag["always-preserved"]
    assert (preserved.n_all, preserved.n_evl) == (3, 2)
    assert preserved.mean_rate == 0.5
    assert preserved.mean_var == -10.0
    changed = by_tag["possibly-changed"]
    assert (changed.n_all, changed.n_evl) == (2, 1)
    added = by_tag["always-added"]
    assert (added.n_all, added.n_evl) == (1, 0)
    assert added.mean_rate is None and added.mean_var is None


def test_aggregate_row_order_is_canonical():
    reg = synthetic_registry()
    reports = [report("a1", 0.5, -1.0), report("p1", 0.5, -1.0)]
    aggregates = aggregate_by_tag(reports, reg, "meaning")
    assert [a.tag for a in aggregates] == ["always-preserved", "possibly-changed", "always-added"]


def test_aggregate_permutation_invariant():
    reg = synthetic_registry()
    reports = [report("p1", 0.2, -8.0), report("p2", 0.4, -2.0), report("c1", 0.6, -4.0)]
    fwd = aggregate_by_tag(reports, reg, "meaning")
    rev = aggregate_by_tag(list(reversed(reports)), reg, "meaning")
    assert fwd == rev


def test_aggregate_unknown_entry():
    with pytest.raises(UnknownEntryError):
        aggregate_by_tag([report("ghost", 0.1, -1.0)], synthetic_registry(), "meaning")


def test_aggregate_rate_none_leaves_blank_mean():
    reg = synthetic_registry()
    aggregates = aggregate_by_tag([report("p1", None, -1.0)], reg, "meaning")
    preserved = next(a for a in aggregates if a.tag == "always-preserved")
    assert preserved.n_evl == 1
    assert preserved.mean_rate is None
    assert preserved.mean_var == -1.0


def test_render_markdown_blank_cells():
    aggregates = [
        TagAggregate("meaning", "always-preserved", 3, 2, 0.5, -10.0),
        TagAggregate("meaning", "always-improved", 2, 0, None, None),
    ]
    text = render_report(aggregates, "markdown")
    lines = text.splitlines()
    assert lines[0] == "| Tag | #All | #Evl | R_T | Var_S |"
    assert "| always-preserved | 3 | 2 | 0.5 | -10 |" in lines
    assert "| always-improved | 2 | 0 |  |  |" in lines


def test_render_csv_round_trip():
    aggregates = [
        TagAggregate("meaning", "always-preserved", 3, 2, 0.5, -10.0),
        TagAggregate("meaning", "always-improved", 2, 0, None, None),
        TagAggregate("meaning", "unclear", 1, 1, 0.3333333333333333, -7.5),
    ]
    assert parse_report_csv(render_report(aggregates, "csv")) == aggregates


def test_render_empty_is_header_only():
    assert render_report([], "markdown").count("\n") == 2
    assert render_report([], "csv").splitlines() == [
        "criterion,tag,n_all,n_evl,mean_rate,mean_var"
    ]


def test_render_json():
    aggregates = [TagAggregate("meaning", "unclear", 1, 1, 0.25, -1.0)]
    data = json.loads(render_report(aggregates, "json"))
    assert data[0]["tag"] == "unclear"
    assert data[0]["mean_rate"] == 0.25


# --- providers ---------------------------------------------------------------

def test_file_provider_complete(tmp_path):
    run = run_of([True, False])
    lines = []
    for variant in ("original", "perturbed"):
        for rec in run.records:
            lines.append(json.dumps({"id": rec.id, "variant": variant, "prediction": "L"}))
    path = tmp_path / "preds.jsonl"
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    orig, pert = FileProvider(path).fetch(run)
    assert orig.variant == "original" and pert.variant == "perturbed"
    assert set(orig.predictions) == {"r0", "r1"}


def test_file_provider_missing_id_named(tmp_path):
    run = run_of([True, False])
    lines = [
        json.dumps({"id": "r0", "variant": "original", "prediction": "L"}),
        json.dumps({"id": "r0", "variant": "perturbed", "prediction": "L"}),
        json.dumps({"id": "r1", "variant": "perturbed", "prediction": "L"}),
    ]
    path = tmp_path / "preds.jsonl"
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    with pytest.raises(IncompleteCoverageError) as err:
        FileProvider(path).fetch(run)
    assert "r1" in str(err.value)


class _EchoHandler(http.server.BaseHTTPRequestHandler):
    label = "stub"
    batch_sizes = []

    def do_POST(self):
        length = int(self.headers["Content-Length"])
        payload = json.loads(self.rfile.read(length).decode("utf-8"))
        type(self).batch_sizes.append(len(payload["texts"]))
        body = json.dumps({"predictions": [self.label] * len(payload["texts"])}).encode("utf-8")
        self.send_response(200)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def log_message(self, *args):
        pass


@pytest.fixture
def stub_server():
    server = http.server.HTTPServer(("127.0.0.1", 0), _EchoHandler)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    _EchoHandler.batch_sizes = []
    yield f"http://127.0.0.1:{server.server_port}/predict"
    server.shutdown()


def test_http_provider_stub(stub_server):
    run = run_of([True] * 70)  # forces two batches per variant
    orig, pert = HttpProvider(stub_server).fetch(run)
    assert set(orig.predictions.values()) == {"stub"}
    assert len(orig.predictions) == 70 and len(pert.predictions) == 70
    assert _EchoHandler.batch_sizes == [64, 6, 64, 6]


def test_make_provider(tmp_path, stub_server):
    assert isinstance(make_provider(f"file:{tmp_path}/x.jsonl"), FileProvider)
    provider = make_provider(stub_server)
    assert isinstance(provider, HttpProvider)
    assert provider.endpoint == stub_server
    with pytest.raises(ProviderError):
        make_provider("carrier-pigeon:coop")


def test_output_axis_tables_exclude_filters():
    from augforge.entries import builtin_registry

    reg = builtin_registry()
    aggregates = aggregate_by_tag([], reg, "meaning")
    assert all(a.tag != "na" for a in aggregates)
    total = sum(a.n_all for a in aggregates)
    assert total == len([e for e in reg.entries() if e.kind.value == "transformation"])
    # processing-axis tables keep counting everything
    impl = aggregate_by_tag([], reg, "implementation")
    assert sum(a.n_all for a in impl) == len(reg)
