import random

import pytest

from ncgb.completion import (
    CONVERGED,
    DEGREE_CAP,
    ITERATION_CAP,
    CompletionLimits,
    complete,
    completed_operator,
    normalisation,
)
from ncgb.linalg import Polynomial
from ncgb.presentation import (
    Presentation,
    critical_branchings,
    is_confluent_presentation,
    normal_form,
    s_polynomial,
)
from ncgb.reduction import identity, ker_inv, leq, meet, single_rule

from conftest import p, random_presentation, w


@pytest.fixture
def ab(xyz):
    return xyz


@pytest.fixture
def order(deglex_xyz):
    return deglex_xyz


def test_limits_validation():
    with pytest.raises(ValueError):
        CompletionLimits(max_iterations=0)
    with pytest.raises(ValueError):
        CompletionLimits(max_rule_degree=-1)


def test_normalisation_idle_cases(ab, order, braided):
    s1 = ker_inv(
        [p(ab, "y.z - x"), p(ab, "z.x - x.y"), p(ab, "y.x.y - x.x")], order
    )
    e1 = [
        p(ab, "y.x.y.z - x.x.z"),
        p(ab, "y.x.y.z - y.x.x"),
        p(ab, "y.x.y.x.y - x.x.x.y"),
        p(ab, "y.x.y.x.y - y.x.x.x"),
    ]
    assert normalisation(e1, s1) == [single_rule(f, order) for f in e1]

    e0 = [p(ab, "y.z.x - x.x"), p(ab, "y.z.x - y.x.y")]
    assert normalisation(e0, braided.operator) == [
        single_rule(f, order) for f in e0
    ]

    assert normalisation([p(ab, "y.z - x")], identity(order)) == [
        single_rule(p(ab, "y.z - x"), order)
    ]


def test_normalisation_expands_reducible_support(ab, order):
    # The seed's support word xx is reducible, so a second operator appears.
    U = ker_inv([p(ab, "x.x - x")], order)
    family = normalisation([p(ab, "y.z.x - x.x")], U)
    assert family == [
        single_rule(p(ab, "y.z.x - x.x"), order),
        single_rule(p(ab, "x.x - x"), order),
    ]


def test_normalisation_rejects_zero_seed(order):
    with pytest.raises(ValueError):
        normalisation([Polynomial.zero()], identity(order))


def test_complete_braided_example(ab, braided):
    result = complete(braided)
    assert result.status == CONVERGED
    assert result.completed.operator.rules == {
        w(ab, "yz"): p(ab, "x"),
        w(ab, "zx"): p(ab, "x.y"),
        w(ab, "yxy"): p(ab, "x.x"),
        w(ab, "yxx"): p(ab, "x.x.z"),
        w(ab, "yxxx"): p(ab, "x.x.x.y"),
    }
    assert completed_operator(result) is result.completed.operator


def test_complete_confluent_input_is_fixed_point(completed_braided):
    result = complete(completed_braided)
    assert result.status == CONVERGED
    assert result.completed.operator == completed_braided.operator
    assert len(result.steps) == 1
    step = result.steps[0]
    assert step.operator_after == step.operator_before
    assert set(step.branchings) == set(
        critical_branchings(completed_braided)
    )


def test_complete_no_branchings(ab, order):
    P = Presentation(ab, order, ker_inv([p(ab, "y.z - x")], order))
    result = complete(P)
    assert result.status == CONVERGED
    assert result.steps == ()
    assert result.completed.operator == P.operator


def test_iteration_cap(braided):
    result = complete(braided, CompletionLimits(max_iterations=1))
    assert result.status == ITERATION_CAP
    assert len(result.steps) == 1
    # The partial operator is still returned with its trace.
    assert w(braided.alphabet, "yxy") in result.completed.operator.rules


def test_degree_cap(braided):
    result = complete(braided, CompletionLimits(max_rule_degree=2))
    assert result.status == DEGREE_CAP
    assert len(result.steps) == 1
    assert w(braided.alphabet, "yxy") in result.completed.operator.rules


def test_step_records_match_loop_structure(braided):
    result = complete(braided)
    for step in result.steps:
        assert set(step.old_branchings) <= set(step.branchings)
        assert leq(step.operator_after, step.operator_before)
        assert (
            step.operator_before.reducible_words()
            <= step.operator_after.reducible_words()
        )
        # New S-polynomials are absorbed by the meet of the normalised family.
        lower = meet(list(step.normalised_family))
        pres = Presentation(
            braided.alphabet, braided.order, step.operator_before
        )
        new = set(step.branchings) - set(step.old_branchings)
        for b in new:
            assert lower.apply(s_polynomial(pres, b)).is_zero()


def test_completion_soundness_random():
    rng = random.Random(307)
    limits = CompletionLimits(max_iterations=12, max_rule_degree=6)
    converged = 0
    for _ in range(25):
        P = random_presentation(rng)
        result = complete(P, limits)
        for step in result.steps:
            assert leq(step.operator_after, step.operator_before)
            assert all(len(k) < 50 for k in step.operator_after.rules)
        if result.status != CONVERGED:
            continue
        converged += 1
        assert is_confluent_presentation(result.completed)
        # Input rules lie in the completed ideal.
        for key, image in P.operator.rules.items():
            vec = Polynomial.monomial(key) - image
            assert normal_form(result.completed, vec).is_zero()
    assert converged >= 10
