from fractions import Fraction as F
import random

from hypothesis import given, strategies as st
import pytest

from ftpolytope.core import (ConstraintKind, FTError, FTStatus, Point, active_set, build_constraints,
                             constraint_label, derive_constants, is_feasible, new_instance, oddify,
                             parse_instance_text, recover_instance, slack, translate_positive)

from conftest import DEGENERATE

even_lists = st.integers(1, 3).flatmap(lambda m: st.lists(st.integers(1, 12), min_size=2*m, max_size=2*m))

########################################################################################################################
# instances

@pytest.mark.parametrize('elements, status', [
    ([], FTStatus.Empty),
    ([1, 2, 3], FTStatus.OddCount),
    ([1, 1.5], FTStatus.NotAnInteger),
    ([1, True], FTStatus.NotAnInteger),
    (['3', 3], FTStatus.NotAnInteger),
])
def test_new_instance_rejects(elements, status):
    with pytest.raises(FTError) as err:
        new_instance(elements)
    assert err.value.status is status

def test_instance_properties(counterexample):
    assert counterexample.size == 4
    assert counterexample.m == 2
    assert counterexample.total == 12
    assert counterexample.s_max == 4
    assert counterexample.half_max_indices() == (3,)

def test_translate_positive():
    inst, shift = translate_positive(new_instance([-2, 0, 1, 3]))
    assert shift == 3
    assert inst.elements == (1, 3, 4, 6)

    same = new_instance([3, 3, 4, 2])
    assert translate_positive(same) == (same, 0)

def test_oddify_up(counterexample):
    inst, added = oddify(counterexample)
    assert inst.elements == (4, 4, 5, 3)
    assert added == 1

def test_oddify_down(counterexample):
    inst, added = oddify(counterexample, step=-1)
    assert inst.elements == (2, 2, 3, 1)
    assert added == -1

def test_oddify_leaves_odd_max(control):
    assert oddify(control) == (control, 0)
    assert oddify(control, step=-1) == (control, 0)

def test_oddify_errors():
    with pytest.raises(FTError) as err:
        oddify(new_instance([1, 2]), step=-1)
    assert err.value.status is FTStatus.NotPositive
    with pytest.raises(FTError) as err:
        oddify(new_instance([0, 2]))
    assert err.value.status is FTStatus.NotPositive
    with pytest.raises(ValueError):
        oddify(new_instance([1, 2]), step=2)

@given(even_lists)
def test_oddify_makes_max_odd(elements):
    inst, added = oddify(new_instance(elements))
    assert inst.s_max % 2 == 1
    assert inst.elements == tuple(s + added for s in elements)
    assert not inst.half_max_indices()
    assert oddify(inst) == (inst, 0)

########################################################################################################################
# constants and constraints

def test_derived_constants(counterexample):
    c = derive_constants(counterexample)
    assert (c.S, c.s_max, c.M) == (12, 4, 13)
    assert c.epsilon == F(1, 26)
    assert c.d == (1, 1, 0, 2)
    assert c.d_sum == 4
    assert c.k1_rhs == F(833, 26)
    assert c.k2_rhs == F(729, 26)
    assert c.degenerate_coordinate == F(1, 390)

def test_derive_constants_needs_positive():
    with pytest.raises(FTError) as err:
        derive_constants(new_instance([0, 1]))
    assert err.value.status is FTStatus.NotPositive

def test_constraint_layout(counterexample_cs):
    cs = counterexample_cs
    assert len(cs.halfspaces) == 10
    assert cs.dimension == 4
    assert (cs.lower(2), cs.upper(0), cs.K1, cs.K2) == (2, 4, 8, 9)
    assert cs.halfspaces[cs.K1].coeffs == (16, 16, 17, 15)
    assert cs.halfspaces[cs.K2].coeffs == (14, 14, 13, 15)
    assert cs.halfspaces[cs.lower(1)].coeffs == (0, -1, 0, 0)
    assert cs.halfspaces[cs.lower(1)].rhs == 0
    assert cs.halfspaces[cs.upper(3)].kind is ConstraintKind.UpperBound
    assert [constraint_label(cs, j) for j in (0, 7, 8, 9)] == ['x_1>=0', 'x_4<=1', 'K1', 'K2']

def test_integer_knapsacks(counterexample_cs):
    a, R1, b, R2 = counterexample_cs.integer_knapsacks()
    assert a == (416, 416, 442, 390)
    assert R1 == 833
    assert b == (364, 364, 338, 390)
    assert R2 == 729

@given(even_lists)
def test_knapsacks_sum_to_constant_row(elements):
    inst = new_instance(elements)
    cs = build_constraints(inst)
    c = cs.constants
    k1, k2 = cs.halfspaces[cs.K1], cs.halfspaces[cs.K2]
    assert all(x + y == 2 * c.M + c.s_max for x, y in zip(k1.coeffs, k2.coeffs))
    # no 0/1 point is ever tight on a knapsack
    assert k1.rhs.denominator != 1 and k2.rhs.denominator != 1

########################################################################################################################
# points

def test_slack_and_active_set(counterexample_cs):
    cs = counterexample_cs
    active = active_set(cs, DEGENERATE)
    assert {constraint_label(cs, j) for j in active} == {'x_1<=1', 'x_2<=1', 'x_3>=0', 'K1', 'K2'}
    assert slack(cs, DEGENERATE, cs.K1) == 0
    assert slack(cs, (1, 1, 0, 0), cs.K1) == F(1, 26)
    assert slack(cs, (1, 1, 0, 0), cs.K2) == F(1, 26)
    assert slack(cs, (0, 0, F(1, 3), 0), cs.lower(2)) == F(1, 3)

def test_feasibility(counterexample_cs):
    assert is_feasible(counterexample_cs, Point.of([0, 0, 0, 0]))
    assert is_feasible(counterexample_cs, DEGENERATE)
    assert not is_feasible(counterexample_cs, (1, 1, 1, 0))
    assert not is_feasible(counterexample_cs, (0, 0, 0, 2))

def test_dimension_mismatch(counterexample_cs):
    with pytest.raises(FTError) as err:
        is_feasible(counterexample_cs, (0, 0))
    assert err.value.status is FTStatus.DimensionMismatch

def test_point_refuses_floats():
    assert Point.of([1, '1/390', F(1, 2)]).coords == (1, F(1, 390), F(1, 2))
    with pytest.raises(TypeError):
        Point.of([0.5, 1])

########################################################################################################################
# recovering an instance

def test_recover_instance_any_order(counterexample, counterexample_cs):
    rows = list(counterexample_cs.halfspaces)
    random.Random(3).shuffle(rows)
    assert recover_instance(rows) == counterexample

def test_recover_instance_rejects_tampering(counterexample_cs):
    rows = list(counterexample_cs.halfspaces)
    k1 = rows[counterexample_cs.K1]
    rows[counterexample_cs.K1] = type(k1)(k1.coeffs, k1.rhs + 1, k1.kind)
    with pytest.raises(FTError) as err:
        recover_instance(rows)
    assert err.value.status is FTStatus.NotFriezeTeng

def test_recover_instance_needs_two_knapsacks(counterexample_cs):
    with pytest.raises(FTError) as err:
        recover_instance(counterexample_cs.halfspaces[:-1])
    assert err.value.status is FTStatus.NotFriezeTeng

@given(even_lists)
def test_recover_instance_inverts_build(elements):
    inst = new_instance(elements)
    assert recover_instance(build_constraints(inst).halfspaces) == inst

########################################################################################################################
# parsing

@pytest.mark.parametrize('text', [
    '3,3,4,2', '3 3 4 2', ' 3, 3 ,4,2\n', '# the counterexample\n3 3 4 2\n', '{"elements": [3, 3, 4, 2]}',
])
def test_parse_instance_text(text, counterexample):
    assert parse_instance_text(text) == counterexample

def test_parse_negative_elements():
    assert parse_instance_text('-1, 2').elements == (-1, 2)

@pytest.mark.parametrize('text, status', [
    ('3,x,4,2', FTStatus.ParseError),
    ('3 3\n4 2', FTStatus.ParseError),
    ('{"elements": [3, 3', FTStatus.ParseError),
    ('{"values": [3, 3]}', FTStatus.ParseError),
    ('', FTStatus.Empty),
    ('1,2,3', FTStatus.OddCount),
    ('{"elements": [1, 2.5]}', FTStatus.NotAnInteger),
])
def test_parse_instance_text_errors(text, status):
    with pytest.raises(FTError) as err:
        parse_instance_text(text)
    assert err.value.status is status
