import json

import pytest

from secatbounds.config import Caps, load_settings
from secatbounds.errors import CapExceededError, InputError
from secatbounds.utils import records_table, render, setup_logging
from secatbounds.utils.validators import FiniteQuery, SubgroupSpec, load_document, parse_model


def test_json_is_sorted_and_stable():
    text = render({"b": 1, "a": [1, 2]})
    assert text == json.dumps({"a": [1, 2], "b": 1}, indent=2) + "\n"


def test_text_tables_flat_records():
    text = render({"rows": [{"n": 1, "nonzero": True}, {"n": 2, "nonzero": False}]}, "text")
    lines = text.splitlines()
    assert lines[0] == "rows:"
    assert "n" in lines[1] and "nonzero" in lines[1]
    assert lines[2].split() == ["1", "yes"]
    assert lines[3].split() == ["2", "no"]


def test_records_table_union_of_columns():
    table = records_table([{"a": 1}, {"b": [1, 2]}])
    header = table.splitlines()[0].split()
    assert header == ["a", "b"]
    assert "[1, 2]" in table


def test_nested_text():
    text = render({"outer": {"inner": None, "list": [{"x": {"y": 1}}]}}, "text")
    assert "  inner: " in text
    assert "      y: 1" in text


def test_load_document_formats(tmp_path):
    (tmp_path / "a.toml").write_text('query = "tc"\nr = 2\n')
    (tmp_path / "a.yml").write_text("query: tc\nr: 2\n")
    assert load_document(tmp_path / "a.toml") == load_document(tmp_path / "a.yml") == {"query": "tc", "r": 2}


@pytest.mark.parametrize("name, content", [
    ("a.txt", "query: tc"),
    ("a.json", "{not json"),
    ("a.json", "[1, 2]"),
])
def test_load_document_errors(tmp_path, name, content):
    path = tmp_path / name
    path.write_text(content)
    with pytest.raises(InputError):
        load_document(path)


def test_finite_query_schema():
    query = parse_model(FiniteQuery, {"group": {"kind": "named", "name": "S3"},
                                      "subgroup": {"elements": [0, "(1 2)"]}})
    assert isinstance(query.subgroup, SubgroupSpec)
    assert query.version == 1
    with pytest.raises(InputError) as info:
        parse_model(FiniteQuery, {"group": {"kind": "table", "table": [[0, 1], [1]]}})
    assert info.value.field.startswith("group")
    with pytest.raises(InputError) as info:
        parse_model(FiniteQuery, {"group": {"kind": "named", "name": "Z2"}, "max_n": 0})
    assert info.value.field == "max_n"


def test_caps_check():
    caps = Caps(max_rank=10)
    caps.check("max_rank", 10)
    with pytest.raises(CapExceededError) as info:
        caps.check("max_rank", 11)
    assert (info.value.cap, info.value.value, info.value.limit) == ("max_rank", 11, 10)


def test_load_settings(tmp_path, monkeypatch):
    monkeypatch.delenv("SECATBOUNDS_MAX_RANK", raising=False)
    path = tmp_path / "config.yaml"
    path.write_text("caps:\n  max_rank: 77\nverify:\n  powers: [2]\n")
    settings = load_settings(path)
    assert settings.caps.max_rank == 77
    assert settings.verify.powers == (2,)
    monkeypatch.setenv("SECATBOUNDS_MAX_RANK", "12")
    assert load_settings(path).caps.max_rank == 12


@pytest.mark.parametrize("content, field", [
    ("caps:\n  max_rnk: 5\n", "caps"),
    ("caps:\n  max_rank: 0\n", "caps.max_rank"),
])
def test_bad_settings(tmp_path, content, field):
    path = tmp_path / "config.yaml"
    path.write_text(content)
    with pytest.raises(InputError) as info:
        load_settings(path)
    assert info.value.field == field


def test_missing_config_file(tmp_path):
    with pytest.raises(InputError):
        load_settings(tmp_path / "nope.yaml")


def test_log_level():
    setup_logging("debug")
    with pytest.raises(InputError):
        setup_logging("chatty")
