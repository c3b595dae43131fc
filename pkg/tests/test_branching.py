"""Branch classes and the four evaluations' value assignments."""
import pytest

from jfy.branching import (
    BranchEvaluation,
    FiniteEndingIn,
    FirstSignSwitch,
    InfiniteMixed,
    InfiniteNegativeTail,
    InfinitePositiveTail,
    SameSignFinite,
    SameSignInfinite,
    SecondElement,
    classify_finite,
    classify_lasso,
    value_of_class,
    value_of_finite,
    value_of_lasso,
)
from jfy.facts import FALSE, TRUE, UNKNOWN, Literal, Sign, SymbolTable

BE = BranchEvaluation

T = SymbolTable()
p = T.literal("p")
np = T.literal("p", negative=True)
q = T.literal("q")
nq = T.literal("q", negative=True)
e = T.literal("e")


def test_from_name():
    assert BE.from_name("wf") is BE.WELL_FOUNDED
    assert BE.from_name("stable") is BE.STABLE
    assert BE.from_name("kk") is BE.KRIPKE_KLEENE
    assert BE.from_name("sp") is BE.COMPLETION
    with pytest.raises(ValueError):
        BE.from_name("classical")


def test_well_founded_class_values():
    assert value_of_class(BE.WELL_FOUNDED, FiniteEndingIn(e)) == e
    assert value_of_class(BE.WELL_FOUNDED, InfinitePositiveTail()) == FALSE
    assert value_of_class(BE.WELL_FOUNDED, InfiniteNegativeTail()) == TRUE
    assert value_of_class(BE.WELL_FOUNDED, InfiniteMixed()) == UNKNOWN


def test_kripke_kleene_class_values():
    assert value_of_class(BE.KRIPKE_KLEENE, FiniteEndingIn(TRUE)) == TRUE
    for cls in (InfinitePositiveTail(), InfiniteNegativeTail(), InfiniteMixed()):
        assert value_of_class(BE.KRIPKE_KLEENE, cls) == UNKNOWN


def test_stable_class_values():
    assert value_of_class(BE.STABLE, FirstSignSwitch(nq)) == nq
    assert value_of_class(BE.STABLE, SameSignFinite(e)) == e
    assert value_of_class(BE.STABLE, SameSignInfinite(Sign.POSITIVE)) == FALSE
    assert value_of_class(BE.STABLE, SameSignInfinite(Sign.NEGATIVE)) == TRUE


def test_completion_class_values():
    assert value_of_class(BE.COMPLETION, SecondElement(q)) == q


@pytest.mark.parametrize(
    "be,cls",
    [
        (BE.WELL_FOUNDED, FirstSignSwitch(np)),
        (BE.WELL_FOUNDED, SecondElement(q)),
        (BE.STABLE, FiniteEndingIn(e)),
        (BE.STABLE, InfiniteMixed()),
        (BE.KRIPKE_KLEENE, SameSignFinite(e)),
        (BE.COMPLETION, InfinitePositiveTail()),
    ],
)
def test_foreign_classes_rejected(be, cls):
    with pytest.raises(ValueError):
        value_of_class(be, cls)


def test_classify_finite():
    assert classify_finite(BE.WELL_FOUNDED, (p, q, e)) == FiniteEndingIn(e)
    assert classify_finite(BE.KRIPKE_KLEENE, (p, TRUE)) == FiniteEndingIn(TRUE)
    assert classify_finite(BE.COMPLETION, (p, q, e)) == SecondElement(q)
    # stable scans for the first sign switch, skipping logicals
    assert classify_finite(BE.STABLE, (p, nq, TRUE)) == FirstSignSwitch(nq)
    assert classify_finite(BE.STABLE, (p, q, e)) == SameSignFinite(e)
    assert classify_finite(BE.STABLE, (np, nq, FALSE)) == SameSignFinite(FALSE)
    with pytest.raises(ValueError):
        classify_finite(BE.WELL_FOUNDED, (p,))


def test_classify_lasso_self_loop():
    # p -> p -> ... : positive tail
    assert classify_lasso(BE.WELL_FOUNDED, (p,), 0) == InfinitePositiveTail()
    assert classify_lasso(BE.KRIPKE_KLEENE, (p,), 0) == InfinitePositiveTail()
    assert classify_lasso(BE.STABLE, (p,), 0) == SameSignInfinite(Sign.POSITIVE)
    assert classify_lasso(BE.COMPLETION, (p,), 0) == SecondElement(p)
    assert value_of_lasso(BE.WELL_FOUNDED, (p,), 0) == FALSE
    assert value_of_lasso(BE.KRIPKE_KLEENE, (p,), 0) == UNKNOWN


def test_classify_lasso_alternating():
    # p -> ~p -> p -> ... : the self-negating atom
    assert classify_lasso(BE.WELL_FOUNDED, (p, np), 0) == InfiniteMixed()
    assert classify_lasso(BE.STABLE, (p, np), 0) == FirstSignSwitch(np)
    assert value_of_lasso(BE.WELL_FOUNDED, (p, np), 0) == UNKNOWN
    assert value_of_lasso(BE.STABLE, (p, np), 0) == np


def test_classify_lasso_negative_cycle_after_stem():
    # q -> ~p -> ~p ... : negative tail after a positive start
    assert classify_lasso(BE.WELL_FOUNDED, (q, np), 1) == InfiniteNegativeTail()
    assert value_of_lasso(BE.WELL_FOUNDED, (q, np), 1) == TRUE
    assert classify_lasso(BE.STABLE, (q, np), 1) == FirstSignSwitch(np)
    assert classify_lasso(BE.COMPLETION, (q, np), 1) == SecondElement(np)


def test_classify_lasso_sign_switch_only_inside_cycle():
    # ~p -> ~q -> ... -> q cycle containing both signs
    cls = classify_lasso(BE.STABLE, (np, nq, q), 1)
    assert cls == FirstSignSwitch(q)


def test_classify_lasso_range_check():
    with pytest.raises(ValueError):
        classify_lasso(BE.WELL_FOUNDED, (p, q), 2)


def test_value_of_finite_completion_is_second_element():
    assert value_of_finite(BE.COMPLETION, (p, e)) == e
    assert value_of_finite(BE.COMPLETION, (p, q, e)) == q
