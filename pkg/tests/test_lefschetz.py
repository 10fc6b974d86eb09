from fractions import Fraction

import pytest

from latticespec.errors import DomainError, ReducednessError
from latticespec.lefschetz import (
    age_condition,
    hl_box_criterion,
    hl_necessary_condition,
    hl_weight_criterion,
    kkp_check,
)
from latticespec.weights import construct_simplex

F = Fraction


@pytest.mark.parametrize("a, s, ok", [
    (F(0), 0, True),
    (F(1), 2, True),
    (F(1), 1, False),
    (F(4, 3), 3, True),
    (F(5, 3), 3, True),
    (F(4, 3), 2, False),
    (F(2, 3), 2, False),
    (F(1, 2), 1, True),
    (F(3, 2), 1, False),
])
def test_age_condition(a, s, ok):
    assert age_condition(a, s)[0] is ok


def test_113_fails_at_second_sector(W, simplex_113):
    v = hl_weight_criterion(W(1, 1, 3))
    assert not v.holds
    assert [w.where for w in v.witnesses][0] == 2
    assert v.witnesses[0].age == F(4, 3) and v.witnesses[0].support_dim == 2
    assert not hl_box_criterion(simplex_113).holds


def test_1223_holds(W, simplex_1223):
    assert hl_weight_criterion(W(1, 2, 2, 3)).holds
    v = hl_box_criterion(simplex_1223)
    assert v.holds and v.method == "box-criterion" and not v.witnesses


def test_long_payne_fails(W):
    w = W(1, 1, 1, 1, 1, 1, 3)
    assert not hl_weight_criterion(w).holds
    assert not hl_box_criterion(construct_simplex(w)).holds


def test_all_ones_trivially_holds(W, triangle):
    assert hl_weight_criterion(W(1, 1, 1, 1)).holds
    assert hl_box_criterion(triangle).holds


def test_square_box_criterion(square):
    # every cone of the square is unimodular, so the box is just the origin
    assert hl_box_criterion(square).holds


def test_weight_criterion_needs_reduced(W):
    with pytest.raises(ReducednessError):
        hl_weight_criterion(W(2, 2, 4))


@pytest.mark.parametrize("q, expected", [
    ((1, 1, 1, 3), False),
    ((1, 1, 2, 2), True),
    ((1, 1, 1, 1, 2), True),
    ((1, 1, 2), True),
    ((1, 2, 3), True),
])
def test_necessary_condition(W, q, expected):
    assert hl_necessary_condition(W(*q)) is expected


def test_necessary_condition_domain(W):
    with pytest.raises(DomainError):
        hl_necessary_condition(W(1, 1, 1))
    with pytest.raises(DomainError):
        hl_necessary_condition(W(1, 2, 2, 3))


def test_kkp(W):
    assert kkp_check(W(1, 1, 2, 2))
    assert not kkp_check(W(1, 1, 1, 3))
    assert kkp_check(W(1, 1, 1))
    with pytest.raises(DomainError):
        kkp_check(W(1, 2, 2, 3))


def test_criteria_agree_on_reflexive(reflexive_systems, constructed):
    for n in (2, 3):
        for w in reflexive_systems[n]:
            a = hl_weight_criterion(w).holds
            assert a == hl_box_criterion(constructed[w]).holds == kkp_check(w)
            if a and w.q[-1] >= 2:
                assert hl_necessary_condition(w)


@pytest.mark.slow
def test_dim5_weight_route():
    from latticespec.report import classification_table

    rows = classification_table(5, "box")
    assert len(rows) == 3462
    assert all(r["unimodal"] and r["kkp"] == r["hl"] for r in rows)
    for r in rows:
        if r["hl"] and r["weights"][-1] >= 2:
            assert r["necessary_condition"]
