import json
import subprocess
import sys

import pytest

from glacm import LElem, Weights
from glacm.cli import UsageError, main, parse_elem
from glacm.extbundle import ExtLabel
from glacm.k0 import K0Class


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    return code, json.loads(out)


class TestParseElem:
    def test_forms(self, w3333):
        w = w3333
        assert parse_elem(w, "c") == w.c
        assert parse_elem(w, "2x1 + x3 - c") == w.add(w.mul(2, w.x(1)), w.x(3), w.neg(w.c))
        assert parse_elem(w, "1.0.2.0|-1") == LElem((1, 0, 2, 0), -1)
        assert parse_elem(w, '{"lambda": [3, 0, 0, 0], "ell": 0}') == w.c
        assert parse_elem(w, "-omega") == w.neg(w.omega)
        assert parse_elem(w, "delta-x2") == w.sub(w.delta, w.x(2))

    @pytest.mark.parametrize("bad", ["", "x5", "c c", "2y", "{"])
    def test_rejects(self, w3333, bad):
        with pytest.raises(UsageError):
            parse_elem(w3333, bad)


class TestCommands:
    def test_orbit_count(self, capsys):
        code, obj = run_json(capsys, "--weights", "3,3,3,3", "orbit-count")
        assert code == 0
        assert obj["burnside"] == obj["closed_formula"] == 2

    def test_quiver_dot(self, capsys):
        code, out, _ = run(capsys, "--weights", "2,2,2,4", "quiver", "--q", "2,2,2,2", "--format", "dot")
        assert code == 0
        assert out.startswith("digraph")
        assert out.count("[label=\"0.0.0.") == 3

    def test_quiver_json(self, capsys):
        code, obj = run_json(capsys, "--weights", "3,3,3,3", "quiver", "--q", "2,2,2,2")
        assert code == 0 and sum(map(sum, obj["cartan"])) == 81

    def test_bad_weights(self, capsys):
        code, _, err = run(capsys, "--weights", "1,3,3,3", "dim-r", "c")
        assert code == 2 and "weights" in err
        assert run(capsys, "--weights", "3,3,x", "dim-r", "c")[0] == 2

    def test_unknown_subcommand(self, capsys):
        assert run(capsys, "--weights", "3,3,3,3", "frobnicate")[0] == 2

    def test_missing_weights(self, capsys):
        assert run(capsys, "dim-r", "c")[0] == 2

    def test_domain_error(self, capsys):
        code, obj = run_json(capsys, "--weights", "3,3,3,3", "ext", "make", "2x1")
        assert code == 1
        assert obj["error"]["type"] == "DomainError"

    def test_unsupported(self, capsys):
        code, obj = run_json(capsys, "--weights", "3,3,3,3", "stable-hom", "x1", "0")
        assert code == 1 and obj["error"]["type"] == "UnsupportedInput"

    def test_picard(self, capsys):
        w = Weights((2, 3, 4, 5))
        assert run_json(capsys, "--weights", "2,3,4,5", "normal-form", "c-x1-x2-x3-x4")[1]["element"] == {
            "lambda": [1, 2, 3, 4], "ell": -3}
        assert run_json(capsys, "--weights", "2,3,4,5", "add", "x1", "x1")[1]["sum"] == w.c.to_json()
        assert run_json(capsys, "--weights", "2,3,4,5", "leq", "x1", "x2")[1] == {"leq": False}

    def test_graded(self, capsys):
        assert run_json(capsys, "--weights", "3,3,3,3", "dim-r", "2c")[1] == {"dim": 6}
        assert run_json(capsys, "--weights", "3,3,3,3", "dim-s", "2x1", "--q", "2,2,2,2")[1] == {"dim": 0}
        assert run_json(capsys, "--weights", "3,3,3,3", "line-ext", "0", "c")[1] == {"dims": [3, 0, 0]}

    def test_k0(self, capsys):
        assert run_json(capsys, "--weights", "3,3,3,3", "euler", "0", "c")[1] == {"euler": 3}
        assert run_json(capsys, "--weights", "3,3,3,3", "euler", "ext:x1@c", "ext:x1@c")[1] == {"euler": 1}
        args = ["--weights", "3,4,5,6", "k0-eq", "ext:x2@2c", "ext:delta-x2@x2-omega+c"]
        assert run_json(capsys, *args)[1] == {"equal": True}
        code, obj = run_json(capsys, "--weights", "2,2,2,2", "gram-det")
        assert abs(obj["det"]) == 1 and obj["size"] == 17

    def test_ext(self, capsys):
        base = ["--weights", "3,3,3,3", "ext"]
        w = Weights((3, 3, 3, 3))
        obj = run_json(capsys, *base, "make", "x1@c")[1]
        assert obj["rank"] == 4 and ExtLabel.from_json(obj["label"]) == ExtLabel(w.x(1), w.c)
        assert K0Class.from_json(obj["class"]).rank == 4
        obj = run_json(capsys, *base, "suspend", "0", "--n", "2")[1]
        assert ExtLabel.from_json(obj["label"]) == ExtLabel(w.zero, w.c)
        obj = run_json(capsys, *base, "dual", "0")[1]
        assert ExtLabel.from_json(obj["label"]) == ExtLabel(w.x(1), w.sub(w.x(1), w.omega))
        assert len(run_json(capsys, *base, "iso", "x1")[1]["images"]) == 8
        assert run_json(capsys, *base, "iso", "0", "--to", "delta@-omega-c")[1] == {"iso": True}
        assert run_json(capsys, *base, "canon", "delta@-omega-c")[1]["label"] == ExtLabel(w.zero, w.zero).to_json()
        assert len(run_json(capsys, *base, "hull", "x2")[1]["hull"]) == 8
        assert len(run_json(capsys, *base, "cover", "x2")[1]["cover"]) == 8
        assert run_json(capsys, *base, "aus", "x1")[1] == {"auslander": False, "twist": None}
        assert run_json(capsys, *base, "aus", "0")[1]["auslander"] is True
        obj = run_json(capsys, *base, "ucorr", "s")[1]
        assert ExtLabel.from_json(obj["label"]) == ExtLabel(w.delta, w.neg(w.omega))
        assert run_json(capsys, *base, "ucorr", "delta", "--inverse")[1] == {"u": w.s.to_json()}

    def test_stable_hom(self, capsys):
        base = ["--weights", "3,3,3,3", "stable-hom"]
        assert run_json(capsys, *base, "0", "x1")[1] == {"dim": 1}
        assert run_json(capsys, *base, "0@x1", "0")[1] == {"dim": 0}
        rows = run_json(capsys, *base, "--table")[1]
        assert len(rows) == 81
        assert run(capsys, *base)[0] == 2

    def test_rigidity(self, capsys):
        assert run_json(capsys, "--weights", "2,3,4,5", "rigidity")[1] == {"engine": "closed", "rigid": True}
        code, obj = run_json(capsys, "--weights", "3,3,3,3", "rigidity", "--engine", "cover")
        assert code == 0 and obj["rigid"]

    def test_verify(self, capsys):
        code, obj = run_json(capsys, "--weights", "2,2,2,2", "verify", "--suite", "all")
        assert code == 0 and obj["ok"]
        assert {c["status"] for c in obj["checks"]} == {"pass"}
        code, obj = run_json(capsys, "verify", "--suite", "orbit-sweep", "--sweep", "4")
        assert code == 0
        assert run(capsys, "--weights", "3,3,3,3", "verify", "--suite", "nope")[0] == 2
        assert run(capsys, "verify", "--suite", "picard")[0] == 2

    def test_orbit_sweep(self, capsys):
        code, obj = run_json(capsys, "orbit-count", "--sweep", "4")
        assert code == 0 and all(c["status"] == "pass" for c in obj["checks"])


def test_deterministic(capsys):
    argv = ["--weights", "2,3,4,5", "ext", "iso", "x2+x4@c"]
    first = run(capsys, *argv)[1]
    assert all(run(capsys, *argv)[1] == first for _ in range(3))


def test_json_round_trip(capsys, w3456):
    code, obj = run_json(capsys, "--weights", "3,4,5,6", "ext", "iso", "x1+2x3@omega")
    labels = [ExtLabel.from_json(o) for o in obj["images"]]
    for a in labels:
        assert ExtLabel.from_json(json.loads(json.dumps(a.to_json()))) == a
        elem = json.dumps(a.x.to_json())
        assert parse_elem(w3456, elem) == a.x


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "glacm", "--weights", "2,2,2,2", "dim-r", "c"],
        capture_output=True, text=True, check=False,
    )
    assert res.returncode == 0
    assert json.loads(res.stdout) == {"dim": 3}
