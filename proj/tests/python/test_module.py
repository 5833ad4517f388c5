"""Python module checks. Skipped when the extension is not built."""

from fractions import Fraction

import pytest

from test_smoke import PAW, er_joint, validate

exnet = pytest.importorskip("exnet")


def test_module_mle():
    z = exnet.exch_mle(4, PAW)
    assert z["1-2"] == Fraction(2, 3)
    assert z["1-4,2-3,2-4,3-4"] == Fraction(1, 12)
    assert list(z) == exnet.class_keys(4)


def test_module_reports():
    validate(exnet.stats(4, PAW), "stats")
    validate(exnet.ergm_fit("kneser", 4, PAW), "fit")
    validate(exnet.dissociated_mle(4, PAW, restarts=4, seed=5), "fit")
    validate(exnet.collisions(4), "collisions")
    joint = er_joint(3, Fraction(1, 2))
    validate(exnet.skeleton(joint), "skeleton")
    validate(exnet.markov(joint, {"n": 3, "edges": []}), "markov")
    validate(exnet.graphon_z("const:0.5", "1-2,1-3"), "graphon_z")


def test_module_extend_er():
    z = {"n": 3, "z": [{"class": k, "z": str(Fraction(1, 2) ** len(k.split(",")) if k != "EMPTY" else 1)}
                       for k in exnet.class_keys(3)]}
    validate(z, "mobius")
    for m in range(4, 8):
        assert exnet.extend(z, m)["feasible"]


def test_module_sampling():
    a = exnet.sample_er(5, 0.4, seed=9, count=2)
    assert a == exnet.sample_er(5, 0.4, seed=9, count=2)
    assert all(g["n"] == 5 for g in a)
    assert len(exnet.sample_beta([0.1, -0.2, 0.3], seed=1)) == 1


def test_module_errors():
    with pytest.raises(exnet.SizeCapExceeded):
        exnet.stats(8, [])
    with pytest.raises(exnet.InvalidParameters):
        exnet.sample_er(3, 1.5, seed=1)
    with pytest.raises(exnet.ParseError):
        exnet.markov("{", "{}")


def test_module_worked_examples():
    results = exnet.paper_examples()
    assert len(results) == 13
    assert all(ok for _, ok, _ in results), [r for r in results if not r[1]]
