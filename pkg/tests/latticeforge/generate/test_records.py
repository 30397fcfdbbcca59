import json

import pytest

from latticeforge.generate.records import GenerationRecord, RunLog, log_record, read_records

AWKWARD = 'Here are three:\n<sol> 1.9,2.6 <\\sol>\n\t"quoted" ünïcode ✓\r\n'


def _record(i, response=AWKWARD):
    return GenerationRecord(
        step=i,
        prompt=f"prompt {i}",
        response=response,
        latency=0.25 * i,
        prompt_tokens=100 + i,
        completion_tokens=None,
        trial=i % 3,
        backend="replay",
    )


@pytest.mark.parametrize("count", [1, 50])
def test_records_read_back_unchanged(tmp_path, count):
    path = tmp_path / "runlog.jsonl"
    written = [_record(i) for i in range(count)]
    with RunLog(path) as log:
        for rec in written:
            log.write(rec)

    assert read_records(path) == written
    with open(path, encoding="utf-8") as f:
        lines = f.read().split("\n")
    assert len(lines) == count + 1 and lines[-1] == ""


def test_response_bytes_are_kept_exactly(tmp_path):
    path = tmp_path / "one.jsonl"
    with open(path, "w", encoding="utf-8") as f:
        log_record(_record(0), f)
    (rec,) = read_records(path)
    assert rec.response.encode("utf-8") == AWKWARD.encode("utf-8")


def test_each_line_is_a_json_object(tmp_path):
    path = tmp_path / "runlog.jsonl"
    with RunLog(path) as log:
        log.write(_record(1, response="ok"))
    with open(path, encoding="utf-8") as f:
        data = json.loads(f.readline())
    assert data["response"] == "ok"
    assert data["backend"] == "replay"
    assert set(data) == set(GenerationRecord.__dataclass_fields__)


def test_run_log_appends_when_not_truncating(tmp_path):
    path = tmp_path / "runlog.jsonl"
    with RunLog(path) as log:
        log.write(_record(0))
    with RunLog(path, truncate=False) as log:
        log.write(_record(1))
    assert [r.step for r in read_records(path)] == [0, 1]


def test_blank_lines_are_skipped(tmp_path):
    path = tmp_path / "runlog.jsonl"
    path.write_text(json.dumps({"step": 3, "response": "r"}) + "\n\n", encoding="utf-8")
    (rec,) = read_records(path)
    assert rec.step == 3 and rec.prompt == "" and rec.trial is None
