import pytest

from fusscat.boundary import count_B
from fusscat.chords import ChordDiagram, enumerate_matchings
from fusscat.diagram_algebra import (
    DiagramAlgebra,
    Weights,
    chord_from_state,
    compose,
    generator_E,
    parse_word,
    random_basis_triples,
    state_from_chord,
    verify_relations,
)
from fusscat.paths import fuss_catalan
from fusscat.rings import tau, tau_right_even


def test_parse_word():
    assert parse_word("E2^2,E3^1") == [(2, 2), (3, 1)]
    assert parse_word("E1") == [(1, 1)]


def test_generator_bounds():
    with pytest.raises(ValueError):
        generator_E(1, 3, 3, 2)
    with pytest.raises(ValueError):
        generator_E(3, 1, 3, 2, "none")
    with pytest.raises(ValueError):
        generator_E(0, 1, 3, 2, "right")
    assert generator_E(2, 0, 3, 2) == generator_E(1, 0, 3, 2)


def test_generators_are_planar():
    for i in range(0, 4):
        for s in (1, 2):
            assert generator_E(i, s, 3, 2, "both").is_planar()


@pytest.mark.parametrize("m,r", [(3, 1), (3, 2), (4, 2), (3, 3)])
def test_relations(m, r):
    report = verify_relations(m, r)
    assert report["checked"] > 0
    assert report["failures"] == []


def test_relations_with_numeric_weights():
    assert verify_relations(4, 2, Weights.numeric(3))["failures"] == []


def test_mixed_word_identity():
    alg = DiagramAlgebra(4, 2)
    assert alg.word("E2^2,E3^1,E1^2,E2^2") == alg.word("E2^2,E3^2,E1^1,E2^2")


def test_boundary_loops():
    alg = DiagramAlgebra(2, 1, "right")
    e = alg.gen(2, 1)
    assert alg.multiply(e, e) == e.scale(tau_right_even())
    alg2 = DiagramAlgebra(1, 2, "right")
    sq = alg2.multiply(alg2.gen(1, 2), alg2.gen(1, 2))
    assert sq == alg2.gen(1, 2).scale(tau_right_even() ** 2)
    bulk = DiagramAlgebra(2, 1)
    assert bulk.multiply(bulk.gen(1, 1), bulk.gen(1, 1)) == bulk.gen(1, 1).scale(tau())


@pytest.mark.parametrize("m,r", [(3, 2), (2, 2), (2, 1)])
def test_associativity(m, r):
    alg = DiagramAlgebra(m, r, "right")
    for a, b, c in random_basis_triples(alg, 60, seed=m * 10 + r):
        x, y, z = alg.element(a), alg.element(b), alg.element(c)
        assert alg.multiply(alg.multiply(x, y), z) == alg.multiply(x, alg.multiply(y, z))


def test_identity_is_unit():
    alg = DiagramAlgebra(3, 2, "right")
    for d in alg.enumerate_basis()[:30]:
        e = alg.element(d)
        assert alg.multiply(alg.one(), e) == e == alg.multiply(e, alg.one())


@pytest.mark.parametrize("m,r", [(m, r) for m in range(1, 5) for r in (1, 2) if m * r <= 8])
def test_bulk_dimension(m, r):
    assert DiagramAlgebra(m, r).dimension() == fuss_catalan(m, r)


@pytest.mark.parametrize("m,r", [(1, 1), (2, 1), (3, 1), (1, 2), (2, 2), (3, 2)])
def test_one_boundary_dimension(m, r):
    assert DiagramAlgebra(m, r, "right").dimension() == count_B(2 * m, r)


def test_two_boundary_needs_reduction():
    with pytest.raises(ValueError):
        DiagramAlgebra(1, 1, "both", theta_mode=False).enumerate_basis()


def test_flip_is_involution():
    for d in DiagramAlgebra(2, 2, "both").enumerate_basis():
        assert d.flip().flip() == d


def test_state_round_trip():
    for c in enumerate_matchings(8, 2):
        assert chord_from_state(state_from_chord(c, 2), 2) == c
    half = ChordDiagram(4, ((2, 3),), right_ends=(4,), left_ends=(1,))
    assert chord_from_state(state_from_chord(half)) == half


def test_compose_counts_loops():
    e = generator_E(1, 1, 2, 1)
    coef, d = compose(e, e)
    assert coef == tau() and d == e
