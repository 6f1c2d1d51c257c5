import json

import pytest

import main
from secatbounds.core import EXIT_INPUT, EXIT_OK, Request


def write(tmp_path, payload, name="query.json"):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


def invoke(capsys, *argv):
    status = main.main(list(argv))
    out = capsys.readouterr().out
    return status, out


TC_Z3 = {"version": 1, "query": "tc", "group": {"variant": "free_abelian", "n": 3}, "r": 4}


def test_bound_free_abelian(tmp_path, capsys):
    status, out = invoke(capsys, "bound", "--input", write(tmp_path, TC_Z3))
    report = json.loads(out)
    assert status == EXIT_OK
    assert report["command"] == "bound"
    assert report["interval"]["lower"] == report["interval"]["upper"] == 9
    assert report["exact"] is True
    assert report["derivation"]


def test_r_flag_overrides_file(tmp_path, capsys):
    status, out = invoke(capsys, "bound", "-i", write(tmp_path, {**TC_Z3, "r": 2}), "--r", "4")
    assert status == EXIT_OK
    assert json.loads(out)["interval"]["lower"] == 9


def test_text_output(tmp_path, capsys):
    status, out = invoke(capsys, "bound", "--input", write(tmp_path, TC_Z3), "--text")
    assert status == EXIT_OK
    assert "exact: yes" in out
    assert "text: = 9" in out


def test_yaml_input(tmp_path, capsys):
    path = tmp_path / "query.yaml"
    path.write_text("version: 1\nquery: tc\ngroup:\n  variant: surface\n  n: 2\nr: 3\n")
    status, out = invoke(capsys, "bound", "--input", str(path))
    assert status == EXIT_OK
    assert json.loads(out)["interval"]["lower"] == 6


def test_secat_diagonal_from_file(tmp_path, capsys):
    payload = {"query": "secat", "group": {"variant": "free", "n": 2}, "r": 3,
               "subgroup": {"relation": "diagonal"}}
    status, out = invoke(capsys, "bound", "--input", write(tmp_path, payload))
    assert status == EXIT_OK
    assert json.loads(out)["interval"]["text"] == "= 3"


def test_epimorphism_from_file(tmp_path, capsys):
    payload = {"query": "tc_epi", "epimorphism": {
        "source": {"variant": "free_abelian", "n": 3},
        "target": {"variant": "free_abelian", "n": 1},
        "kernel": {"variant": "free_abelian", "n": 2},
        "central_kernel": True}}
    status, out = invoke(capsys, "bound", "--input", write(tmp_path, payload))
    assert status == EXIT_OK
    assert json.loads(out)["interval"]["lower"] == 2


def test_malformed_descriptor(tmp_path, capsys):
    payload = {"query": "tc", "group": {"variant": "free", "n": 1}, "r": 2}
    status, out = invoke(capsys, "bound", "--input", write(tmp_path, payload))
    report = json.loads(out)
    assert status == EXIT_INPUT
    assert report["error"] == "input"
    assert report["field"] == "group.n"


def test_unknown_key(tmp_path, capsys):
    status, out = invoke(capsys, "bound", "--input", write(tmp_path, {"query": "tc", "grp": {}}))
    assert status == EXIT_INPUT
    assert json.loads(out)["field"] == "grp"


def test_unsupported_version(tmp_path, capsys):
    status, out = invoke(capsys, "bound", "--input", write(tmp_path, {**TC_Z3, "version": 2}))
    assert status == EXIT_INPUT
    assert json.loads(out)["field"] == "version"


def test_missing_file(capsys):
    status, out = invoke(capsys, "bound", "--input", "does-not-exist.json")
    assert status == EXIT_INPUT
    assert json.loads(out)["field"] == "--input"


def test_inconsistent_metadata_is_an_input_error(tmp_path, capsys):
    payload = {"query": "cd", "group": {"variant": "free_abelian", "n": 2, "cd": 3}}
    status, out = invoke(capsys, "bound", "--input", write(tmp_path, payload))
    assert status == EXIT_INPUT
    assert json.loads(out)["error"] == "inconsistent_bounds"


S3_PERM = {"kind": "perm", "degree": 3, "generators": [[[1, 2]], [[1, 2, 3]]]}


def test_order_cap(tmp_path, capsys):
    path = write(tmp_path, {"group": S3_PERM, "degree": 1})
    status, out = invoke(capsys, "cohomology", "--input", path, "--max-order", "5")
    report = json.loads(out)
    assert status == EXIT_INPUT
    assert report["error"] == "cap_exceeded"
    assert report["cap"] == "max_order" and report["limit"] == 5


def test_cohomology(tmp_path, capsys):
    path = write(tmp_path, {"group": {"kind": "named", "name": "Z4"}})
    status, out = invoke(capsys, "cohomology", "--input", path, "--degree", "2")
    report = json.loads(out)
    assert status == EXIT_OK
    assert report["cohomology"]["invariants"]["torsion"] == [4]
    assert report["coefficients"] == "trivial"


def test_cohomology_needs_degree(tmp_path, capsys):
    status, out = invoke(capsys, "cohomology", "--input", write(tmp_path, {"group": S3_PERM}))
    assert status == EXIT_INPUT
    assert json.loads(out)["field"] == "degree"


def test_ideal_coefficients_need_proper_subgroup(tmp_path, capsys):
    path = write(tmp_path, {"group": S3_PERM, "subgroup": "whole", "degree": 0, "coefficients": "ideal"})
    status, out = invoke(capsys, "cohomology", "--input", path)
    assert status == EXIT_INPUT
    assert json.loads(out)["field"] == "subgroup"


def test_height(tmp_path, capsys):
    path = write(tmp_path, {"group": {"kind": "named", "name": "Z2"}, "subgroup": "trivial", "max_n": 3})
    status, out = invoke(capsys, "height", "--input", path)
    report = json.loads(out)
    assert status == EXIT_OK
    assert report["height"] == 3 and report["text"] == "≥ 3"


def test_subgroup_by_labels(tmp_path, capsys):
    path = write(tmp_path, {"group": S3_PERM, "subgroup": {"generators": ["(1 2)"]}, "max_n": 1})
    status, out = invoke(capsys, "height", "--input", path)
    report = json.loads(out)
    assert status == EXIT_OK
    assert report["group"]["subgroup"]["order"] == 2


def test_unknown_element_label(tmp_path, capsys):
    path = write(tmp_path, {"group": S3_PERM, "subgroup": {"generators": ["(1 4)"]}, "max_n": 1})
    status, out = invoke(capsys, "height", "--input", path)
    assert status == EXIT_INPUT
    assert json.loads(out)["field"] == "subgroup.generators.0"


def test_spectral(tmp_path, capsys):
    path = write(tmp_path, {"group": {"kind": "named", "name": "Z2"}, "subgroup": "trivial"})
    status, out = invoke(capsys, "spectral", "--input", path, "--window", "1")
    report = json.loads(out)
    assert status == EXIT_OK
    assert [p["page"] for p in report["pages"]] == [0, 1]
    assert report["kappa"]["malnormal"] is True
    assert report["dp"]["p"] <= report["dp"]["height"] or report["dp"]["height_at_least"]
    names = {c["name"] for c in report["checks"]}
    assert {"exact_at_E", "d0_squared_zero", "d1_is_restriction_kernel", "membership_chain"} <= names
    assert all(c["passed"] for c in report["checks"])


def test_reports_are_deterministic(tmp_path, capsys):
    bound = write(tmp_path, TC_Z3)
    height = write(tmp_path, {"group": S3_PERM, "subgroup": {"generators": ["(1 2)"]}, "max_n": 2}, "h.json")
    outputs = []
    for _ in range(2):
        outputs.append(invoke(capsys, "bound", "--input", bound)[1] + invoke(capsys, "height", "--input", height)[1])
    assert outputs[0] == outputs[1]


def test_verify_on_one_group(tmp_path, capsys):
    status, out = invoke(capsys, "verify", "--input", write(tmp_path, {"group": {"kind": "named", "name": "Z2"}}))
    report = json.loads(out)
    assert status == EXIT_OK
    assert report["status"] == "pass"
    assert {row["suite"] for row in report["summary"]} >= {"golden_bounds", "crossed_hom", "bar_oracle"}


def test_request_validation():
    status, report = main.run(Request("bound", input=None))
    assert status == EXIT_INPUT and report["field"] == "--input"
    status, report = main.run(Request("height", input="x.json", r=1))
    assert status == EXIT_INPUT and report["field"] == "--r"


def test_unknown_subcommand_is_rejected_by_argparse():
    with pytest.raises(SystemExit):
        main.build_parser().parse_args(["tc"])
