import json

import pytest

from arithsite.cli import main


@pytest.fixture
def run(capsys):
    def _run(*argv):
        code = main(list(argv))
        out = capsys.readouterr()
        return code, out.out, out.err

    return _run


def test_distance(run):
    code, out, _ = run("bp", "distance", "1:0", "1:1/2")
    assert code == 0 and out.strip() == "4"


def test_fiber_count(run):
    code, out, _ = run("bp", "fiber", "12", "--count")
    assert code == 0 and out.strip() == "24"


def test_bdk(run):
    code, out, _ = run("by", "bdk", "3", "1")
    assert code == 0 and out.strip() == "-2*x^3+3*x^2"
    code, out2, _ = run("belyi", "bdk", "3", "1")
    assert out2 == out


def test_psi_and_proj(run):
    assert run("bp", "psi", "6")[1].strip() == "12"
    assert run("bp", "psi", "4", "--proj")[1].strip() == "6"


def test_neighbours(run):
    code, out, _ = run("bp", "neighbours", "1:0", "2")
    assert out.splitlines() == ["1/2:0", "1/2:1/2", "2:0"]


def test_cw_verbs(run):
    assert run("cw", "normalize", "P[3,1]*P[2,0]")[1].strip() == "P[2,0]*P[3,2]"
    assert run("cw", "word2class", "P[2,0]*P[3,2]")[1].strip() == "1/6:1/3"
    assert run("cw", "class2word", "1:1/2")[1].strip() == "P[2,1]*P[2,2]"
    assert run("cw", "delta", "P[2,0]*P[3,2]")[1].strip() == "6"
    assert run("cw", "mul", "P[2,1]", "P[3,1]")[1].strip() == "P[2,1]*P[3,1]"
    assert run("cw", "divide", "P[2,1]*P[2,0]", "P[2,0]")[1].strip() == "P[2,1]"
    assert run("cw", "divide", "P[2,1]", "P[3,0]")[1].strip() == "none"


def test_sn_verbs(run):
    assert run("sn", "chain", "2", "4", "12")[1].strip() == "2^2*3*[default=0]"
    assert run("sn", "chain", "2", "4", "--limit")[1].strip() == "2^inf*[default=0]"
    assert run("sn", "equiv", "2^inf*3", "2^inf")[1].strip() == "true"
    assert run("sn", "divides", "12", "2^inf*3")[1].strip() == "true"
    assert run("sn", "lcm", "2^inf", "3^2")[1].strip() == "2^inf*3^2*[default=0]"
    assert run("sn", "open", "2^inf", "6", "4")[1].strip() == "true"


def test_ds_verbs(run):
    code, edk, _ = run("ds", "edk", "3", "1")
    assert code == 0
    assert json.loads(edk) == {"n": 3, "alpha": [1, 0, 2], "beta": [2, 1, 0], "frame_black": 0, "frame_white": 0}
    code, pp, _ = run("ds", "passport", edk.strip())
    assert json.loads(pp) == {"black": [2, 1], "white": [2, 1]}
    code, comp, _ = run("ds", "compose", edk.strip(), edk.strip())
    assert json.loads(comp)["n"] == 9
    assert run("ds", "iso", edk.strip(), edk.strip())[1].strip() == "true"
    assert run("ds", "equiv", edk.strip(), comp.strip())[1].strip() == "false"
    assert run("ds", "monodromy", edk.strip())[1].strip() == "6"
    inv = run("ds", "involution", edk.strip())[1]
    assert json.loads(inv)["alpha"] == [2, 1, 0]
    assert "--" in run("ds", "dot", edk.strip())[1]


def test_by_verbs(run):
    assert run("by", "check", "-2*x^3+3*x^2")[1].strip() == "true"
    assert run("by", "check", "x^3-x")[1].strip() == "false"
    assert run("by", "beta", "-2*x^3+3*x^2")[1].strip() == "1/3:1/3"
    assert run("by", "beta", "-2*x^3+3*x^2", "--word")[1].strip() == "P[3,1]"
    assert run("by", "triangle", "-2*x^3+3*x^2")[1].strip() == "true"
    assert run("by", "compose-count", "-2*x^3+3*x^2", "-2*x^3+3*x^2")[1].strip() == "true"
    assert run("by", "free", "x^3", "-2*x^3+3*x^2", "--maxlen", "2")[1].strip() == "true"


def test_bc_verbs(run):
    obj = json.loads(run("bc", "cond5", "2", "3")[1])
    assert obj == {"condition": 5, "p": 2, "q": 3, "ok": True, "cells": 6}
    assert json.loads(run("bc", "cond3", "6")[1])["ok"] is True
    assert json.loads(run("bc", "cond4", "2", "3")[1])["ok"] is True
    assert run("bc", "op", "2", "1", "1/3")[1].strip() == "2/3"
    assert json.loads(run("bc", "rho", "2", "1/3")[1]) == ["1/6", "2/3"]
    assert json.loads(run("bc", "presheaf", "P[2,1]", "3")[1]) == ["1/2", "2/3", "5/6"]


def test_ar_verbs(run):
    assert run("ar", "generic", "-2*x^3+3*x^2", "--alpha", "1/2")[1].strip() == "true"
    assert run("ar", "squarefree", "-2*x^3+3*x^2", "--alpha", "1/2", "--depth", "2")[1].strip() == "true"
    obj = json.loads(run("ar", "tree", "-2*x^3+3*x^2", "--alpha", "1/2", "--depth", "2")[1])
    assert len(obj["levels"][2]) == 9 and obj["levels"][2][0]["value"]
    assert "->" in run("ar", "dot", "-2*x^3+3*x^2", "--alpha", "1/2", "--depth", "1")[1]


def test_pt_verbs(run):
    c1 = json.dumps({"site": "A", "entries": [2, 4, 8]})
    c2 = json.dumps({"site": "A", "entries": [4, 8]})
    assert run("pt", "equiv", c1, c2)[1].strip() == "true"
    assert run("pt", "tail", c1, json.dumps({"site": "A", "entries": [12, 24]}))[1].strip() == "true"
    cc = json.dumps({"site": "C", "entries": [[[2, 0]], [[2, 1], [2, 0]]]})
    assert json.loads(run("pt", "project", cc)[1]) == {"site": "A", "entries": [2, 4]}


def test_domain_error_exit_code(run):
    code, _, err = run("bp", "distance", "junk", "1:0")
    assert code == 1 and "error" in err


def test_determinism(run):
    a = run("bp", "fiber", "12")
    b = run("bp", "fiber", "12")
    assert a == b
    assert len(a[1].splitlines()) == 24


def test_ball_dot(run):
    code, out, _ = run("bp", "ball-dot", "1:0", "2", "--radius", "1")
    assert code == 0 and out.count("--") == 3
