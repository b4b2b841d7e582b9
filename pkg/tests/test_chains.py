import pytest
from hypothesis import given, strategies as st

from fusscat.chains import (
    RChain,
    build_tiling,
    enumerate_chains,
    extended_kreweras,
    generator_Fs,
    kappa,
    kappa_inv,
    phi,
    phi_prime,
    psi_r,
    psi_r_inv,
    tiling_diagram,
    tiling_top_path,
)
from fusscat.chords import check_condA, path_to_matching, rotate_sigma, rotate_sigma_r
from fusscat.diagram_algebra import DiagramAlgebra, act_on_chords
from fusscat.paths import fuss_catalan

C = RChain.parse
SIZES = [(n, r) for n in range(1, 5) for r in (1, 2, 3) if r * n <= 9]
chains = st.sampled_from([c for n, r in SIZES for c in enumerate_chains(n, r)])


@pytest.mark.parametrize("n,r", SIZES)
def test_chain_counts(n, r):
    assert len(enumerate_chains(n, r)) == fuss_catalan(n, r)


def test_parse_rejects_decreasing():
    with pytest.raises(ValueError):
        C("[12/3;1/2/3]")


def test_kappa_examples():
    assert str(kappa(C("1/2/3/4;14/23;1234"))) == "URUURRURRRRRRRRR"
    assert str(kappa_inv("URU^2R^8", 3)) == "[1/2/3;13/2;123]"


@given(chains)
def test_kappa_round_trip(c):
    p = kappa(c)
    assert p.r == c.r and p.n == c.n
    assert kappa_inv(p) == c


@given(chains)
def test_superposition_round_trip(c):
    d = psi_r(c)
    assert d.is_planar() and check_condA(rotate_sigma_r(d, c.r), c.r)
    assert psi_r_inv(d, c.r) == c


@given(st.sampled_from([c for n in range(1, 4) for r in (1, 2) for c in enumerate_chains(n, r)]))
def test_phi_descriptions_agree(c):
    assert phi(c) == rotate_sigma_r(psi_r(c), c.r)
    assert phi(c) == tiling_diagram(c)
    assert phi_prime(c).is_planar()


@given(st.sampled_from([c for n in range(1, 6) for c in enumerate_chains(n, 1)]))
def test_rotation_intertwines_kreweras(c):
    lhs = rotate_sigma(path_to_matching(kappa(c)))
    assert lhs == path_to_matching(kappa(extended_kreweras(c)))


@given(chains)
def test_extended_kreweras_period(c):
    assert extended_kreweras(c, 2 * c.n) == c
    assert extended_kreweras(extended_kreweras(c), -1) == c


def test_twelve_tilings():
    tops = {tiling_top_path(build_tiling(c)) for c in enumerate_chains(3, 2)}
    assert len(tops) == 12


@pytest.mark.parametrize("n,r", [(2, 2), (3, 2), (2, 3)])
def test_action_matches_diagram_algebra(n, r):
    alg = DiagramAlgebra(2 * n, r, "none")
    for c in enumerate_chains(n, r):
        for i in range(1, 2 * n):
            for s in range(1, r + 1):
                lhs = generator_Fs(i, s, c).map_keys(psi_r)
                assert lhs == act_on_chords(alg, alg.gen(i, s), psi_r(c)), (i, s, c)
