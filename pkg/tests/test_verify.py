import pytest

from stackycovers import _mutation
from stackycovers.oracle import SweepBox
from stackycovers.verify import IDENTITIES, run_verify

SMALL = SweepBox(n=(1, 3), r=(2, 6), d=(1, 6), d1=(1, 14), d2=(1, 14))

# mutation switch -> identity that should notice it
CAUGHT_BY = {"pic_stack": "pic_order", "pic_index": "pic_consistency", "witness": "triple_witness"}


def target(mutation):
    return CAUGHT_BY.get(mutation, mutation)


def test_default_sweep_is_clean():
    report = run_verify()
    assert report.ok, "\n".join(report.lines())
    assert len(report.results) >= 6
    assert all(r.checked > 0 for r in report.results)


def test_only_and_unknown():
    assert [r.name for r in run_verify(SMALL, only=["taut", "zlt13"]).results] == ["taut", "zlt13"]
    with pytest.raises(ValueError):
        run_verify(SMALL, only=["nope"])


def test_every_identity_has_a_mutation():
    assert {target(m) for m in _mutation.MUTATIONS} <= set(IDENTITIES)


@pytest.mark.parametrize("name", _mutation.MUTATIONS)
def test_mutation_is_caught(name, monkeypatch):
    monkeypatch.setenv(_mutation.ENV_VAR, name)
    report = run_verify(SMALL, only=[target(name)])
    assert not report.ok
    d = report.results[0].discrepancies[0]
    assert d.shortcut != d.oracle and d.anchor


def test_mutations_stay_local(monkeypatch):
    monkeypatch.setenv(_mutation.ENV_VAR, "zlt13")
    others = [n for n in IDENTITIES if n != "zlt13"]
    assert run_verify(SMALL, only=others).ok
