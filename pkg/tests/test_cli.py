from __future__ import annotations

import json
import subprocess
import sys

import pytest

from conftest import atlas, glue_cliques, random_graphs
from isolator.cli import EXIT_INPUT, EXIT_OK, EXIT_VIOLATION, run
from isolator.formats import dump_graph
from isolator.graph import Graph


def call(capsys, *argv: str) -> tuple[int, dict]:
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


@pytest.fixture
def write_graph(tmp_path):
    counter = [0]

    def write(g: Graph, fmt: str = "edgelist") -> str:
        counter[0] += 1
        path = tmp_path / f"g{counter[0]}.{'g6' if fmt == 'graph6' else 'el'}"
        path.write_text(dump_graph(g, fmt))
        return str(path)

    return write


def corpus() -> list[Graph]:
    named = [Graph.complete(5), Graph.complete(7), Graph.path(5), Graph.cycle(6),
             glue_cliques([4, 4], [1]), glue_cliques([4, 4], [2]), glue_cliques([7, 7], [1]),
             glue_cliques([6, 5, 6], [2, 1]), Graph.complete_bipartite(3, 3)]
    return named + atlas(5)[::4] + [g for g in random_graphs(77, 12, 6, 11, p=0.6)]


class TestRoundTrip:
    def test_isolate_examples(self, capsys, write_graph):
        code, doc = call(capsys, "isolate", "--k", "1", "--in", write_graph(glue_cliques([4, 4], [1])))
        assert code == EXIT_OK and doc["kind"] == "isolated" and doc["schema"] == "isolator/1"

    def test_every_certificate_verifies(self, capsys, write_graph, tmp_path):
        cert = str(tmp_path / "cert.json")
        for g in corpus():
            path = write_graph(g)
            jobs = [(["isolate", "--k", str(k)], ["verify", "isolation", "--k", str(k)]) for k in (1, 2)]
            jobs += [(["chunk2"], ["verify", "chunk2"])]
            if g.n >= 3:
                jobs += [(["mader5"], ["verify", "mader5"])]
            for produce, check in jobs:
                assert run(produce + ["--in", path, "--out", cert]) == EXIT_OK
                capsys.readouterr()
                code, doc = call(capsys, *check, "--in", path, "--cert", cert)
                assert code == EXIT_OK and doc["ok"], (produce, dump_graph(g), doc)

    def test_color_extract_verifies(self, capsys, write_graph, tmp_path):
        cert = str(tmp_path / "cert.json")
        path = write_graph(glue_cliques([5, 3, 4], [1, 1]))
        code, doc = call(capsys, "color-extract", "--k", "1", "--c", "3", "--in", path, "--out", cert)
        assert code == EXIT_OK and doc["chi"] == 5 and doc["vertices"] == [0, 1, 2, 3, 4]
        code, doc = call(capsys, "verify", "color-extract", "--k", "1", "--c", "3", "--in", path, "--cert", cert)
        assert code == EXIT_OK and doc["ok"]

    def test_construct_mader_tree(self, capsys, tmp_path):
        cert = str(tmp_path / "tree.json")
        code, doc = call(capsys, "construct", "mader-tree", "--c", "3", "--k", "1", "--out", cert)
        assert code == EXIT_OK and doc["n"] == 15 and len(doc["labels"]) == 15
        code, doc = call(capsys, "verify", "glue-tree", "--cert", cert)
        assert code == EXIT_OK and doc["ok"]

    @pytest.mark.parametrize("argv", [
        ["psi-witness", "--k", "2"],
        ["phi-igood", "--m", "2", "--i", "2"],
        ["usable-witness", "--m", "1", "--d", "6", "--part", "h"],
        ["pendant-girth", "--d", "4"],
    ])
    def test_construct_families(self, capsys, tmp_path, argv):
        cert = str(tmp_path / "tree.json")
        code, doc = call(capsys, "construct", *argv, "--out", cert)
        assert code == EXIT_OK and doc["kind"] == "construction"
        code, doc = call(capsys, "verify", "glue-tree", "--cert", cert)
        assert code == EXIT_OK and doc["ok"], doc

    def test_oracle(self, capsys, write_graph):
        path = write_graph(glue_cliques([4, 4], [1]))
        code, doc = call(capsys, "oracle", "cut-basic", "--in", path)
        assert code == EXIT_OK and doc["min"] == 1
        code, doc = call(capsys, "oracle", "weight-block", "--k", "1", "--in", path, "--no-prune")
        assert code == EXIT_OK and doc["min"] == 1

    def test_convert(self, capsys, write_graph):
        path = write_graph(Graph.path(3))
        assert run(["convert", "--in", path, "--to", "graph6"]) == EXIT_OK
        assert capsys.readouterr().out.strip() == "Bg"
        g6 = write_graph(Graph.cycle(5), "graph6")
        code, doc = call(capsys, "isolate", "--k", "1", "--in", g6, "--format", "graph6")
        assert code == EXIT_OK

    def test_figure(self, capsys, write_graph):
        code, doc = call(capsys, "verify", "figure", "--in", write_graph(Graph.complete(5)))
        assert code == EXIT_VIOLATION and not doc["ok"]


class TestFailures:
    def test_tampered_isolation(self, capsys, write_graph, tmp_path):
        path = write_graph(glue_cliques([4, 4], [1]))
        cert = tmp_path / "cert.json"
        assert run(["isolate", "--k", "1", "--in", path, "--out", str(cert)]) == EXIT_OK
        capsys.readouterr()
        data = json.loads(cert.read_text())
        data["partition"]["a"], data["partition"]["c"] = data["partition"]["c"], data["partition"]["a"]
        cert.write_text(json.dumps(data))
        code, doc = call(capsys, "verify", "isolation", "--k", "1", "--in", path, "--cert", str(cert))
        assert code == EXIT_VIOLATION and doc["violations"]

    def test_tampered_glue_tree(self, capsys, tmp_path):
        cert = tmp_path / "tree.json"
        assert run(["construct", "mader-tree", "--c", "2", "--k", "1", "--out", str(cert)]) == EXIT_OK
        capsys.readouterr()
        data = json.loads(cert.read_text())
        # swap a leaf label with the apex: same graph shape, wrong vertex identities
        labels = data["labels"]
        labels[0], labels[-1] = labels[-1], labels[0]
        cert.write_text(json.dumps(data))
        code, doc = call(capsys, "verify", "glue-tree", "--cert", str(cert))
        assert code == EXIT_VIOLATION

    def test_tampered_partition(self, capsys, write_graph, tmp_path):
        cert = tmp_path / "p.json"
        cert.write_text(json.dumps({"a": [0], "b": [1], "c": [2]}))
        code, doc = call(capsys, "verify", "partition", "--in", write_graph(Graph.path(3)), "--cert", str(cert))
        assert code == EXIT_VIOLATION

    @pytest.mark.parametrize("argv,kind", [
        (["isolate", "--k", "1", "--in", "/nonexistent.el"], "unreadable-file"),
        (["isolate", "--k", "1"], "missing-input"),
        (["isolate", "--in", "GRAPH"], "missing-parameter"),
        (["isolate", "--k", "0", "--in", "GRAPH"], "parameter-out-of-range"),
        (["isolate", "--k", "1", "--in", "BAD"], "malformed-graph"),
        (["construct", "usable-witness", "--m", "1", "--d", "2"], "parameter-out-of-range"),
        (["color-extract", "--k", "1", "--c", "3", "--in", "GRAPH"], "precondition"),
        (["oracle", "frontier-basic", "--class", "nope", "--in", "GRAPH"], "parameter-out-of-range"),
        (["mader5", "--in", "TINY"], "parameter-out-of-range"),
    ])
    def test_input_errors(self, capsys, write_graph, tmp_path, argv, kind):
        bad = tmp_path / "bad.el"
        bad.write_text("3 1\n0 7\n")
        files = {"GRAPH": write_graph(Graph.cycle(5)), "BAD": str(bad), "TINY": write_graph(Graph.path(2))}
        argv = [files.get(a, a) for a in argv]
        code = run(argv)
        captured = capsys.readouterr()
        assert code == EXIT_INPUT
        assert json.loads(captured.out)["error"] == kind and captured.err

    def test_malformed_json(self, capsys, write_graph, tmp_path):
        cert = tmp_path / "cert.json"
        cert.write_text("{not json")
        argv = ["verify", "mader5", "--in", write_graph(Graph.cycle(5)), "--cert", str(cert)]
        assert run(argv) == EXIT_INPUT
        assert json.loads(capsys.readouterr().out)["error"] == "malformed-json"

    def test_bad_usage(self, capsys):
        assert run(["isolate", "--k", "x"]) == 2
        assert run([]) == 2


def test_module_entry_point(tmp_path):
    path = tmp_path / "g.el"
    path.write_text(dump_graph(Graph.complete(5)))
    proc = subprocess.run([sys.executable, "-m", "isolator", "isolate", "--k", "1", "--in", "-"],
                          input=path.read_text(), capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["schema"] == "isolator/1"
