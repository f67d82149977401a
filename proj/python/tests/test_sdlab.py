import json
import os
import subprocess

import pytest

import sdlab


def spec(text):
    return sdlab.ModuleSpec(text)


def test_parse_and_format():
    s = spec("ring: x,y\nI: x^2, x*y\nJ: 0\n")
    assert s.names == ["x", "y"]
    assert sorted(s.I) == [[1, 1], [2, 0]]
    assert s.J == []
    assert s.canonical_bound() == [2, 1]
    assert spec(str(s)) == s
    assert sdlab.ModuleSpec(["x", "y"], [[2, 0], [1, 1]]) == s


def test_errors():
    with pytest.raises(ValueError):
        spec("ring: x\nI: y\nJ: 0\n")
    with pytest.raises(ValueError):
        sdlab.polarize_step(spec("ring: x\nI: x\nJ: 0\n"), "z")


def test_invariants():
    assert sdlab.sdepth(spec("ring: x,y\nI: x, y\nJ: 0\n"))[0] == 1
    value, partition = sdlab.sdepth(spec("ring: x,y\nI: x*y\nJ: 0\n"))
    assert value == 2
    assert partition == [{"lo": [1, 1], "hi": [1, 1]}]
    assert sdlab.depth(spec("ring: x\nI: 1\nJ: x^2\n")) == 0
    assert sdlab.depth(spec("ring: x,y\nI: 1\nJ: x*y\n")) == 1
    assert sdlab.hilbert_series(spec("ring: x\nI: 1\nJ: x^2\n")) == ([1, 1], 0)
    parts = sdlab.decompose(spec("ring: x,y\nI: x*y\nJ: 0\n"))
    assert parts == [{"a": [1, 1], "monomial": "x*y", "Z": ["x", "y"]}]


def test_rp2_depends_on_the_field():
    s = spec("ring: a,b,c,d,e,f\nI: 1\nJ: a*b*c, a*b*f, a*c*e, a*d*e, a*d*f, b*c*d, b*d*e, "
             "b*e*f, c*d*f, c*e*f\n")
    assert sdlab.depth(s) == 3
    assert sdlab.depth(s, 2) == 2


def test_polarization():
    p = sdlab.polarize(spec("ring: x\nI: x^2\nJ: 0\n"))
    assert p.names == ["x1_1", "x1_2"]
    assert p.I == [[1, 1]]
    assert p.is_squarefree()
    q = sdlab.polarize_step(spec("ring: x\nI: x^3\nJ: 0\n"), "x", "y")
    assert str(q).splitlines()[1] == "I: x^2*y"
    for seed in range(20):
        s = sdlab.random_spec(seed, max_n=2, max_deg=2, max_gens=3)
        t = sdlab.polarize(s)
        assert t.is_squarefree()
        assert sdlab.sdepth(t)[0] - sdlab.depth(t) == sdlab.sdepth(s)[0] - sdlab.depth(s)


def test_verify():
    assert "thm-main" in sdlab.theorem_tags()
    r = sdlab.verify("thm-main", trials=10, seed=7)
    assert r["failures"] == [] and r["trials"] == 10
    with pytest.raises(Exception):
        sdlab.verify("no-such-theorem")


@pytest.mark.skipif("SDLAB_CLI" not in os.environ, reason="CLI path not given")
def test_cli_agrees():
    text = "ring: x,y,z\nI: x*y, y*z^2\nJ: x^2*y*z^2\n"
    out = subprocess.run([os.environ["SDLAB_CLI"], "compute", "-", "--sdepth", "--depth", "--json"],
                         input=text, capture_output=True, text=True, check=True)
    j = json.loads(out.stdout)
    assert j["sdepth"] == sdlab.sdepth(spec(text))[0]
    assert j["depth"] == sdlab.depth(spec(text))
