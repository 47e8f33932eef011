import io
import json
import os
import pytest
from pathlib import Path
from reflexive_minhom.cli import run
from reflexive_minhom.formats.digraph_format import load_digraph
from reflexive_minhom.formats.reports import parse_report

MOCKS = Path(__file__).parent.absolute().joinpath("mocks")


def _mock(file_name):
    return str(MOCKS.joinpath(file_name))


def _run(raw_args):
    out = io.StringIO()
    err = io.StringIO()
    exit_code = run(raw_args, out, err)
    return exit_code, out.getvalue(), err.getvalue()


def _pairs(text):
    return dict(parse_report(text))


class TestClassify(object):

    def test_path_is_polynomial(self):
        # Act
        exit_code, out, err = _run(["classify", _mock("path.digraph")])

        # Assert
        pairs = _pairs(out)
        assert exit_code == 0
        assert err == ""
        assert pairs["template"] == "path"
        assert pairs["verdict"] == "polynomial"
        assert sorted(pairs["ordering"].split(" < ")) == ["p0", "p1", "p2"]
        assert pairs["source"] in ("exchange", "search")

    def test_four_cycle_is_np_complete(self):
        # Act
        exit_code, out, _ = _run(["classify", _mock("four_cycle.digraph")])

        # Assert
        pairs = _pairs(out)
        assert exit_code == 2
        assert pairs["verdict"] == "NP-complete"
        assert pairs["certificate"] == "induced C4 in S(H)"

    def test_size_limit_applies_and_can_be_lifted(self):
        # Act
        limited_code, _, limited_err = _run(["classify", _mock("path.digraph"), "--limit-template-size", "2"])
        lifted_code, _, _ = _run(["classify", _mock("path.digraph"), "--limit-template-size", "0"])

        # Assert
        assert limited_code == 1
        assert limited_err.startswith("error: TemplateSizeLimitExceeded")
        assert lifted_code == 0


class TestOrdering(object):

    def test_path_ordering(self):
        # Act
        exit_code, out, _ = _run(["ordering", _mock("path.digraph")])

        # Assert
        assert exit_code == 0
        assert "ordering" in _pairs(out)

    def test_search_only(self):
        # Act
        exit_code, out, _ = _run(["ordering", _mock("path.digraph"), "--search-only", "true"])

        # Assert
        assert exit_code == 0
        assert _pairs(out)["source"] == "search"

    def test_four_cycle_has_certificate(self):
        # Act
        exit_code, out, _ = _run(["ordering", _mock("four_cycle.digraph")])

        # Assert
        assert exit_code == 2
        assert _pairs(out)["certificate"] == "induced C4 in S(H)"


class TestSolve(object):

    def test_min_cut_on_polynomial_template(self):
        # Act
        exit_code, out, _ = _run(["solve", "--template", _mock("path.digraph"), "--instance", _mock("edge.digraph"),
                                  "--costs", _mock("edge_costs.csv")])

        # Assert
        pairs = _pairs(out)
        assert exit_code == 0
        assert pairs["method"] == "min-cut"
        assert pairs["assignment"] == "a->p0 b->p1"
        assert pairs["cost"] == "0"

    def test_np_complete_template_without_oracle(self):
        # Act
        exit_code, out, _ = _run(["solve", "--template", _mock("four_cycle.digraph"),
                                  "--instance", _mock("edge.digraph"), "--costs", _mock("four_cycle_costs.csv")])

        # Assert
        assert exit_code == 2
        assert _pairs(out)["certificate"] == "induced C4 in S(H)"

    def test_np_complete_template_with_oracle(self):
        # Act
        exit_code, out, _ = _run(["solve", "--template", _mock("four_cycle.digraph"),
                                  "--instance", _mock("edge.digraph"), "--costs", _mock("four_cycle_costs.csv"),
                                  "--oracle", "true"])

        # Assert
        pairs = _pairs(out)
        assert exit_code == 0
        assert pairs["method"] == "brute-force"
        assert pairs["assignment"] == "a->b b->a"
        assert pairs["cost"] == "0"

    def test_missing_costs_raise(self):
        # Act
        exit_code, out, err = _run(["solve", "--template", _mock("path.digraph"), "--instance", _mock("edge.digraph")])

        # Assert
        assert exit_code == 1
        assert out == ""
        assert err == "error: MissingInputException: --costs is required by this command\n"


class TestCommandsWithOutputDir(object):

    def test_catalog_writes_index(self, set_tmp_directory, cleanup_run, request):
        # Act
        exit_code, out, _ = _run(["catalog", "--max-size", "3", "--out", "catalog",
                                  "--output-dir", request.node.run_output_dir])

        # Assert
        pairs = _pairs(out)
        assert exit_code == 0
        assert pairs["members"] == "1"
        assert pairs["converse_classes"] == "1"
        assert os.path.isfile(os.path.join(pairs["directory"], "index.txt"))
        assert os.path.isfile(os.path.join(pairs["directory"], "member_00.digraph"))
        assert os.path.dirname(pairs["directory"]).startswith(request.node.run_output_dir)

    def test_reduce_writes_instance_and_verifies(self, set_tmp_directory, cleanup_run, request):
        # Act
        exit_code, out, _ = _run(["reduce", "--obstruction", "h2", "--input", _mock("single_edge.graph"),
                                  "--k", "1", "--out", "gadget", "--verify", "true",
                                  "--output-dir", request.node.run_output_dir])

        # Assert
        pairs = _pairs(out)
        assert exit_code == 0
        assert pairs["obstruction"] == "H2"
        assert pairs["vertices"] == "2"
        assert pairs["intermediates"] == "0"
        assert pairs["budget"] == "1"
        assert pairs["independence_number"] == "1"
        assert pairs["min_cost"] == "1"
        assert pairs["reduction_holds"] == "True"

        instance = load_digraph(os.path.join(pairs["directory"], "instance.digraph"))
        template = load_digraph(os.path.join(pairs["directory"], "template.digraph"))
        assert instance.arcs == (("u1", "v1"),)
        assert template.vertices == ("x1", "x2", "x3", "x4")
        with open(os.path.join(pairs["directory"], "provenance.txt")) as provenance_file:
            assert _pairs(provenance_file.read())["u1"] == "vertex u1 of class U"

    def test_verify_theorem_listing(self, set_tmp_directory, cleanup_run, request):
        # Act
        exit_code, out, _ = _run(["verify-theorem", "--max-n", "2", "--listing", "listing.txt",
                                  "--output-dir", request.node.run_output_dir])

        # Assert
        assert exit_code == 0
        assert _pairs(out)["mismatches"] == "0"
        run_dirs = [path for path in Path(request.node.run_output_dir).iterdir() if path.is_dir()]
        assert len(run_dirs) == 1
        assert run_dirs[0].name.startswith("verify-theorem_")
        assert run_dirs[0].joinpath("listing.txt").is_file()


class TestExportDotAndCrosscheck(object):

    def test_export_polynomial_template(self):
        # Act
        exit_code, out, _ = _run(["export-dot", _mock("path.digraph")])

        # Assert
        assert exit_code == 0
        assert out.startswith('digraph "path" {')

    def test_export_certificate(self):
        # Act
        exit_code, out, _ = _run(["export-dot", _mock("four_cycle.digraph")])

        # Assert
        assert exit_code == 2
        assert out.startswith('graph "four_cycle: induced C4 in S(H)" {')
        assert "fillcolor" in out

    def test_crosscheck_with_seed(self):
        # Act
        exit_code, out, _ = _run(["crosscheck", "--seed", "3", "--solver-trials", "5", "--gadget-trials", "1",
                                  "--max-instance-size", "3"])

        # Assert
        pairs = _pairs(out)
        assert exit_code == 0
        assert pairs["seed"] == "3"
        assert pairs["solver_trials"] == "5"


class TestErrors(object):

    @pytest.mark.parametrize("raw_args, error_name", [
        ([], "ArgumentMissingException"),
        (["bogus"], "CommandNotFoundException"),
        (["classify"], "MissingInputException"),
        (["classify", "a", "b"], "IllFormedConfig"),
        (["classify", _mock("path.digraph"), "--bogus", "1"], "UnknownConfigEntry"),
        (["classify", _mock("path.digraph"), "--seed"], "ArgumentMissingException"),
        (["classify", _mock("path.digraph"), "--parallel", "many"], "MismatchTypeException"),
        (["classify", _mock("malformed.digraph")], "DigraphSyntaxError"),
        (["reduce", "--obstruction", "h7", "--input", _mock("single_edge.graph"), "--out", "x"],
         "UnknownObstructionException"),
    ])
    def test_errors_exit_one_with_single_line(self, raw_args, error_name):
        # Act
        exit_code, out, err = _run(raw_args)

        # Assert
        assert exit_code == 1
        assert out == ""
        assert err.startswith(f"error: {error_name}: ")
        assert err.count("\n") == 1

    def test_syntax_error_names_position(self):
        # Act
        _, _, err = _run(["classify", _mock("malformed.digraph")])

        # Assert
        assert "line 3, column 7" in err


class TestConfigFileMode(object):

    def test_entries_run_in_turn(self, set_tmp_directory, cleanup_run, request):
        # Arrange
        os.makedirs(request.node.run_output_dir, exist_ok=True)
        config_path = os.path.join(request.node.run_output_dir, "two_commands.json")
        with open(config_path, "w") as config_file:
            json.dump([{"command": "classify", "path": _mock("path.digraph")},
                       {"command": "classify", "path": _mock("four_cycle.digraph")}], config_file)
        raw_args = ["--config-file", config_path, "--output-dir", request.node.run_output_dir]

        # Act
        first = _run(raw_args)
        second = _run(raw_args)
        third = _run(raw_args)

        # Assert
        assert first[0] == 0
        assert second[0] == 2
        assert third[0] == 1
        assert third[2] == "error: no command left to run in the config file\n"
        assert Path(request.node.run_output_dir).joinpath("two_commands", "0").is_dir()
        assert Path(request.node.run_output_dir).joinpath("two_commands", "1").is_dir()
