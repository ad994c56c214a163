import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weingarten.coeffring import TAU
from weingarten.groupalg import (
    AlgebraElement,
    average_projector,
    full_basis,
    hyperoctahedral_elements,
    hyperoctahedral_order,
    jm_element,
    jm_product_orthogonal,
    jm_product_unitary,
    regular_matrix,
)
from weingarten.symcore import Pairing, Permutation, enumerate_pairings, permutations_of
from weingarten.exactmat import mat_eq, mat_identity


def delta(images):
    return AlgebraElement.basis(Permutation.from_images(images))


def test_multiply_inverse_gives_unit():
    s = Permutation.from_images([3, 1, 2])
    prod = AlgebraElement.basis(s) * AlgebraElement.basis(s.inverse())
    assert prod == AlgebraElement.unit(3)


def test_multiply_by_unit_is_identity_map():
    a = delta([2, 1, 3]) + delta([3, 2, 1]).scale(Fraction(5, 7))
    assert a * AlgebraElement.unit(3) == a
    assert AlgebraElement.unit(3) * a == a


def test_square_of_two_transpositions():
    a = delta([2, 1, 3]) + delta([3, 2, 1])  # (1 2) + (1 3)
    sq = a * a
    expected = (
        AlgebraElement.unit(3, Fraction(2))
        + delta([2, 3, 1])  # (1 2 3)
        + delta([3, 1, 2])  # (1 3 2)
    )
    assert sq == expected


def test_size_mismatch_raises():
    with pytest.raises(ValueError):
        AlgebraElement.unit(2) * AlgebraElement.unit(3)


def test_jm_elements():
    assert not jm_element(1, 4)
    assert jm_element(2, 2) == delta([2, 1])
    m3 = jm_element(3, 3)
    assert m3 == delta([3, 2, 1]) + delta([1, 3, 2])
    with pytest.raises(ValueError):
        jm_element(5, 4)
    with pytest.raises(ValueError):
        jm_element(0, 4)


def test_jm_product_unitary_small():
    assert jm_product_unitary(1, TAU) == AlgebraElement.unit(1, TAU)
    n2 = jm_product_unitary(2, TAU)
    assert n2 == AlgebraElement(2, {
        Permutation.identity(2): TAU * TAU,
        Permutation.from_images([2, 1]): TAU,
    })
    n3 = jm_product_unitary(3, TAU)
    assert n3.coefficient(Permutation.from_images([2, 3, 1])) == TAU


def test_jucys_identity_term_exact_up_to_4():
    for n in range(1, 5):
        got = jm_product_unitary(n, TAU)
        expected = AlgebraElement(
            n, {s: TAU ** s.num_cycles() for s in permutations_of(n)}
        )
        assert got == expected


def test_jm_elements_commute_up_to_6():
    for n in range(2, 7):
        ms = [jm_element(k, n) for k in range(1, n + 1)]
        for i in range(n):
            for j in range(i + 1, n):
                assert ms[i] * ms[j] == ms[j] * ms[i]


def test_jm_commutes_with_smaller_group_algebra():
    rng = random.Random(7)
    for n in (3, 4, 5, 6):
        m = jm_element(n, n)
        for _ in range(5):
            perms = [
                Permutation.from_images(rng.sample(range(1, n), n - 1))
                for _ in range(3)
            ]
            a = AlgebraElement(n - 1, {
                p: Fraction(rng.randint(-4, 4)) for p in perms
            }).embed(n)
            assert a * m == m * a


def test_jm_product_orthogonal_small():
    assert jm_product_orthogonal(1, TAU) == AlgebraElement.unit(2, TAU)
    n2 = jm_product_orthogonal(2, TAU)
    assert n2 == AlgebraElement(4, {
        Permutation.identity(4): TAU * TAU,
        Permutation.from_images([3, 2, 1, 4]): TAU,  # (1 3)
        Permutation.from_images([1, 3, 2, 4]): TAU,  # (2 3)
    })


def test_jm_product_orthogonal_term_counts():
    for n, expected in ((1, 1), (2, 3), (3, 15), (4, 105)):
        element = jm_product_orthogonal(n, TAU)
        assert len(element) == expected
        # every coefficient a single tau power
        for coeff in element.terms.values():
            nonzero = [c for c in coeff.coeffs if c]
            assert len(nonzero) == 1 and nonzero[0] == 1


def test_antipode_examples():
    three_cycle = delta([2, 3, 1])
    assert three_cycle.antipode() == delta([3, 1, 2])
    proj = average_projector(2)
    assert proj.antipode() == proj


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6), st.integers(0, 10**6))
def test_antipode_reverses_products(seed_a, seed_b):
    rng_a, rng_b = random.Random(seed_a), random.Random(seed_b)

    def random_element(rng):
        n = 4
        terms = {}
        for _ in range(rng.randint(1, 5)):
            p = Permutation.from_images(rng.sample(range(1, n + 1), n))
            terms[p] = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        return AlgebraElement(n, terms)

    a, b = random_element(rng_a), random_element(rng_b)
    assert (a * b).antipode() == b.antipode() * a.antipode()


def test_hyperoctahedral_sizes():
    assert set(hyperoctahedral_elements(1)) == {
        Permutation.identity(2),
        Permutation.from_images([2, 1]),
    }
    for n in (1, 2, 3):
        assert len(hyperoctahedral_elements(n)) == hyperoctahedral_order(n) == 2**n * _fact(n)


def _fact(n):
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def test_hyperoctahedral_equals_conjugation_stabilizer():
    # orbit-stabilizer: |S_2n| / (2n-1)!!
    for n in (1, 2, 3):
        beta = Pairing.from_pairs([(2 * k - 1, 2 * k) for k in range(1, n + 1)])
        stabilizer = {
            s for s in permutations_of(2 * n) if beta.conjugate_by(s) == beta
        }
        assert stabilizer == set(hyperoctahedral_elements(n))
        assert len(stabilizer) * len(enumerate_pairings(n)) == _fact(2 * n)


def test_average_projector_idempotent_and_antipode_invariant():
    for n in (1, 2, 3, 4):
        proj = average_projector(n)
        assert proj * proj == proj
        assert proj.antipode() == proj


def test_projector_commutes_with_odd_jm_product():
    for n in (1, 2, 3):
        g = jm_product_orthogonal(n, TAU)
        proj = average_projector(n)
        assert g * proj == proj * g


def test_regular_matrix_of_unit_is_identity():
    basis = full_basis(3)
    assert mat_eq(regular_matrix(AlgebraElement.unit(3), basis), mat_identity(6))


def test_regular_matrix_of_delta_is_permutation_matrix():
    basis = full_basis(3)
    rho = Permutation.from_images([2, 3, 1])
    mat = regular_matrix(AlgebraElement.basis(rho), basis, side="left")
    for i, bi in enumerate(basis):
        for j, bj in enumerate(basis):
            assert mat[i][j] == (1 if bi == rho * bj else 0)
    assert sorted(sum(int(bool(x)) for x in row) for row in mat) == [1] * 6


def test_regular_matrix_of_jm_product_is_gram():
    from weingarten.unitary import gram_unitary

    for n in (1, 2, 3):
        g = jm_product_unitary(n, TAU)
        expected = gram_unitary(n, TAU)
        for side in ("left", "right"):
            assert mat_eq(regular_matrix(g, full_basis(n), side), expected)
    for n in (4, 5):
        g = jm_product_unitary(n, TAU)
        assert mat_eq(regular_matrix(g, full_basis(n), "left"), gram_unitary(n, TAU))


def test_regular_matrix_rejects_bad_side():
    with pytest.raises(ValueError):
        regular_matrix(AlgebraElement.unit(2), full_basis(2), side="diagonal")


def test_embed_and_json_round_trip():
    a = delta([2, 1]) + AlgebraElement.unit(2, Fraction(1, 3))
    b = a.embed(4)
    assert b.n == 4
    assert b.coefficient(Permutation.from_images([2, 1, 3, 4])) == 1
    payload = a.to_json_dict()
    assert payload == {"[1,2]": "1/3", "[2,1]": "1"}


def test_scalar_multiplication_and_zero_pruning():
    a = delta([2, 1])
    assert not (a - a)
    assert a.scale(Fraction(0)) == AlgebraElement.zero(2)
    assert Fraction(2) * a == a + a
