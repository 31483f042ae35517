import json
from pathlib import Path

from pencil_lab.corpus import CorpusEntry, EntryResult, load_corpus, run_corpus

CORPUS = Path(__file__).with_name("corpus.jsonl")


def test_schema_errors_do_not_abort():
    lines = [
        "not json",
        json.dumps({"name": "one-var", "nvars": 1, "f": "x"}),
        json.dumps({"name": "ok", "nvars": 2, "f": "x/y"}),
        json.dumps({"name": "ok", "nvars": 2, "f": "x*y"}),
        json.dumps({"name": "bad-expect", "nvars": 2, "f": "x", "expect": {"colour": 1}}),
        json.dumps({"name": "parse-error", "nvars": 2, "f": "x+"}),
    ]
    items = load_corpus(lines)
    assert [type(i) for i in items] == [EntryResult, EntryResult, CorpusEntry, EntryResult,
                                        EntryResult, CorpusEntry]
    results = run_corpus(lines)
    assert [r.ok for r in results] == [False, False, True, False, False, False]
    assert results[-1].error.startswith("ExpressionSyntaxError")


def test_corpus_names_unique_and_valid():
    items = load_corpus(CORPUS.read_text().splitlines())
    assert all(isinstance(i, CorpusEntry) for i in items)
    assert len({i.name for i in items}) == len(items)


def test_expectation_mismatch_reported():
    line = json.dumps({"name": "xy", "nvars": 2, "f": "x*y",
                       "expect": {"rho": 0, "bounds": {"stein": "pass"}}})
    (result,) = run_corpus([line])
    assert not result.ok
    assert result.failures == ["rho: expected 0, got 1"]
