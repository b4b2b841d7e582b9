import random
from fractions import Fraction

import pytest

from fusscat.integrability import (
    BRANCHES,
    BoundaryParams,
    PoleError,
    build_K,
    build_R,
    check_branch,
    k_coefficients,
    r1,
    r2,
    sample_boundary,
    scalar_conditions,
    verify_conditions,
    verify_k_normalization,
    verify_left_re,
    verify_r_normalization,
    verify_re,
    verify_ybe,
)
from fusscat.rings import QuadExt

WORKING = [b for b in BRANCHES if b != "degenerate-o"]


def test_r_coefficients_vanish_at_one():
    assert r1(1, Fraction(3, 2)) == 0 and r2(1, Fraction(3, 2)) == 0


def test_poles_are_reported():
    # tau^2 - 1 - w = 0 at tau = 2, w = 3
    with pytest.raises(PoleError):
        r2(3, 2)


def test_r_at_one_is_identity():
    assert build_R(1, 1, Fraction(5, 3)).is_one()


def test_ybe():
    report = verify_ybe(100, seed=3)
    assert report["samples"] == 100 and report["failures"] == 0


def test_r_normalization():
    assert verify_r_normalization(30, seed=3)["failures"] == 0


def test_branch_validation():
    with pytest.raises(ValueError):
        check_branch(BoundaryParams(Fraction(2), Fraction(3), Fraction(5), "degenerate-e"))
    with pytest.raises(ValueError):
        check_branch(BoundaryParams(Fraction(2), Fraction(3), Fraction(5), "sideways"))
    check_branch(BoundaryParams(Fraction(2), Fraction(6), Fraction(3), "degenerate-e"))


def test_generic_samples_live_in_a_field():
    rng = random.Random(0)
    for _ in range(20):
        p = sample_boundary(rng, "generic+")
        d = p.discriminant()
        c1, _ = p.constants()
        assert c1 * c1 == QuadExt(d, 0, d)


def test_k_at_one_is_identity():
    p = sample_boundary(random.Random(1), "generic-")
    assert build_K(1, p.tau, p.tau_o, p.tau_e, "generic-").is_one()
    assert k_coefficients(1, p) == (0, 0)


@pytest.mark.parametrize("branch", WORKING)
def test_k_normalization(branch):
    assert verify_k_normalization(20, seed=5, branch=branch)["failures"] == 0


@pytest.mark.parametrize("branch", WORKING)
def test_reflection_equation(branch):
    report = verify_re(20, seed=5, branch=branch)
    assert report["failures"] == 0
    assert all(row["rational_part_zero"] and row["root_part_zero"] for row in report["rows"])


@pytest.mark.parametrize("branch", WORKING)
def test_scalar_conditions(branch):
    assert verify_conditions(20, seed=5, branch=branch)["failures"] == 0


def test_condition_keys():
    p = sample_boundary(random.Random(2), "degenerate-e")
    vals = scalar_conditions(Fraction(2), Fraction(3), p)
    assert set(vals) == {"mixed_one_two", "mixed_two_one", "top_pair", "triple",
                         "unitarity_first", "unitarity_second"}
    assert not any(vals.values())


def test_wz_argument_breaks_top_pair():
    report = verify_conditions(20, seed=5, branch="generic+", literal=True)
    assert report["failures"] > 0
    assert all(row["nonzero"] == ["top_pair"] for row in report["rows"] if not row["pass"])


def test_even_degenerate_formula_fails_when_odd_tied():
    # with tau * tau_o = tau_e the second coefficient must vanish
    assert verify_re(20, seed=5, branch="degenerate-o")["failures"] > 0
    assert verify_re(20, seed=5, branch="degenerate-o-reduced")["failures"] == 0


def test_left_verifier_accepts_trivial_and_rejects_constant():
    assert verify_left_re(lambda w, wts: (0, 0), samples=5)["failures"] == 0
    assert verify_left_re(lambda w, wts: (Fraction(1), 0), samples=5)["failures"] > 0
