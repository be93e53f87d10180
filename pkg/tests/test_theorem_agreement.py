import pytest

import theorem_cases as tc
from hopfbrace import bracelab as bl
from hopfbrace.report import PreconditionFailed


@pytest.mark.parametrize("name,label", tc.all_case_ids(), ids=lambda x: str(x))
def test_checker_agrees_with_direct_brace_check(name, label):
    checker, direct = tc.outcome(name, label)
    assert checker == direct


@pytest.mark.parametrize("name", tc.CHECKERS)
def test_enough_negatives(name):
    both_fail = [label for label, _, _ in tc.cases(name) if tc.outcome(name, label) == (False, False)]
    assert len(both_fail) >= 5, both_fail


@pytest.mark.parametrize("name", tc.CHECKERS)
def test_some_positives(name):
    assert any(tc.outcome(name, label) == (True, True) for label, _, _ in tc.cases(name))


def test_failing_checker_names_its_condition():
    label, checker, _ = next(c for c in tc.cases("mainth2") if not tc.outcome("mainth2", c[0])[0])
    rep = checker()
    assert set(rep.failed()) <= {"E1", "E2"} and rep.failed()
    w = rep.law(rep.failed()[0]).witness
    assert w["lhs"] != w["rhs"] and w["labels"]


def test_builders_refuse_failing_conditions():
    from hopfbrace import envs
    for label, (brA, brH, mp2) in envs.mainth2_fixtures():
        if not bl.check_E1_E2(brA, brH, mp2).passed:
            with pytest.raises(PreconditionFailed) as ei:
                bl.build_brace_tensor_bicrossed(brA, brH, mp2)
            assert ei.value.report is not None
            break
    else:
        pytest.fail("no failing E1/E2 fixture")
