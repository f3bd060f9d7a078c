import json

from qtpaths import verify
from qtpaths.laurent import exchange_kernel
from qtpaths.macdonald import WeightSpec
from qtpaths.qt_field import q
from qtpaths.symfunc import SymFunc


def test_run_check_catches_exceptions():
    def boom():
        raise RuntimeError("nope")
    r = verify.run_check("x", {"a": 1}, boom)
    assert not r.passed
    assert "nope" in json.dumps(r.to_json())


def test_report_serializes_without_timing():
    rep = verify.run_suite("ext-delta", cases=[(2, 1, 0)])
    assert rep.passed
    data = rep.to_json(timing=False)
    assert "elapsed" not in json.dumps(data)
    assert json.loads(json.dumps(data)) == data


def test_mutations_are_rejected():
    ok, lhs, rhs = verify.check_d_exchange(1, -1, 2, kernel=exchange_kernel(q))
    assert not ok and lhs != rhs
    assert verify.check_d_exchange(1, -1, 2)[0]
    assert not verify.check_ext_delta(2, 1, 0, rhs=SymFunc.one())[0]


def test_random_weights_are_reproducible():
    a, b = verify.random_weight_pairs(), verify.random_weight_pairs()
    assert a == b
    assert all(isinstance(g, WeightSpec) and g.degree <= 2 for pair in a for g in pair)


def test_groups_cover_suites():
    assert set(verify.GROUPS["all"]) == set(verify.SUITES)
    assert set(verify.GROUPS["paths-suite"]) <= set(verify.SUITES)
