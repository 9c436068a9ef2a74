"""Cohomology quotients, codim/ord invariants, and the isomorphism search."""

import pytest

from galerig import fixtures
from galerig.cohomology import (
    LINEAR_FORMS,
    X,
    Y,
    Z,
    GradedQuotient,
    codim,
    codim_via_annihilator,
    find_graded_iso,
    gl3,
    ideal_equal,
    invariant_profile,
    order,
    order_via_quotient_maps,
    pairwise_iso_matrix,
    poincare_nondegenerate,
    quotient_presentation,
    substitution_images,
    substitution_maps_ideal,
)
from galerig.gale import GaleDiagram, face_counts, face_structure
from galerig.gf2 import parse_poly, substitute_linear
from galerig.charmat import enumerate_charmats

P = GaleDiagram((3, 1, 2, 1, 1))
Q = GaleDiagram((2, 2, 2, 1, 1))
FS_P = face_structure(P)
FS_Q = face_structure(Q)

BLOCKS_A = fixtures.label_blocks("A")
BLOCKS_B = fixtures.label_blocks("B")


def _quotient(label):
    if label.startswith("A"):
        return quotient_presentation(FS_P, BLOCKS_A[label])
    return quotient_presentation(FS_Q, BLOCKS_B[label])


QA1 = _quotient("A1")
QB1 = _quotient("B1")


# ---------------------------------------------------------------------------
# presentation


def test_a1_ideal_matches_published_row():
    gens = [parse_poly(s) for s in
            ("x^3y+yz^3", "y^3+yz^2", "y^2z+z^3", "xz", "x^4")]
    assert ideal_equal(gens, QA1)


def test_b1_ideal_matches_published_row():
    gens = [parse_poly(s) for s in
            ("x^2y^2+y^2z^2", "y^4+y^2z^2", "y^2z+z^3", "xz", "x^3")]
    assert ideal_equal(gens, QB1)


def test_hilbert_is_h_vector():
    assert QA1.hilbert == (1, 3, 5, 5, 3, 1)
    _, h = face_counts(P)
    assert QA1.hilbert == h


def test_ideal_equal_permutation_invariant():
    gens = [parse_poly(s) for s in
            ("xz", "x^4", "y^2z+z^3", "x^3y+yz^3", "y^3+yz^2")]
    assert ideal_equal(gens, QA1)


def test_ideal_equal_rejects_inhomogeneous():
    with pytest.raises(ValueError):
        ideal_equal([frozenset({(1, 0, 0), (2, 0, 0)})], QA1)


def test_ideal_equal_detects_difference():
    gens = [parse_poly(s) for s in
            ("x^3y+yz^3", "y^3+yz^2", "y^2z+z^3", "xz", "x^4+y^4")]
    assert not ideal_equal(gens, QA1)


def test_noncharacteristic_block_rejected():
    with pytest.raises(ValueError):
        quotient_presentation(FS_P, (0b00111, 0b11000, 0b00111))


def test_pentagon_quotients_have_dimension_five():
    fs = face_structure(GaleDiagram((1, 1, 1, 1, 1)))
    blocks = enumerate_charmats(fs)
    assert len(blocks) == 5
    for block in blocks:
        q = quotient_presentation(fs, block)
        assert q.hilbert == (1, 3, 1)
        assert sum(q.hilbert) == 5


def test_quotient_json_round_trip():
    data = QA1.to_json()
    restored = GradedQuotient.from_json(data)
    assert restored == QA1
    assert restored.hilbert == QA1.hilbert


# ---------------------------------------------------------------------------
# codim and order


def test_codim_examples():
    assert codim(X, QA1) == 1  # witness z: xz lies in the ideal
    assert codim(Y, QA1) == 2  # witness y^2 + z^2
    assert codim(Y, QB1) == 3


def test_order_examples():
    assert order(Y | Z, QA1) == 3  # (y+z)^3 = (y^3+yz^2) + (y^2z+z^3)
    assert order(Z, QA1) == 6
    # the published table prints 3 here; the definition gives 4 (x^3 is not
    # reachable from the degree-3 component, x^4 is a generator)
    assert order(X, QA1) == 4


def test_zero_form_rejected():
    with pytest.raises(ValueError):
        codim(frozenset(), QA1)
    with pytest.raises(ValueError):
        order(frozenset(), QA1)


def test_profile_examples():
    prof_a1 = invariant_profile(QA1)
    assert prof_a1.codims == (1, 2, 1, 3, 3, 2, 2)
    assert prof_a1.orders[6] == 4  # ord(x+y+z)
    prof_b1 = invariant_profile(QB1)
    assert prof_b1.codims == (1, 3, 1, 3, 2, 2, 2)


def test_dual_path_oracles_agree_everywhere():
    labels = [f"A{i}" for i in range(1, 22)] + [f"B{i}" for i in range(1, 22)]
    for label in labels:
        q = _quotient(label)
        for gamma in LINEAR_FORMS:
            assert order(gamma, q) == order_via_quotient_maps(gamma, q)
            assert codim(gamma, q) == codim_via_annihilator(gamma, q)


def test_profile_bounds():
    prof = invariant_profile(QA1)
    assert all(1 <= c <= QA1.n - 1 for c in prof.codims)
    assert all(2 <= o <= QA1.n + 1 for o in prof.orders)


# ---------------------------------------------------------------------------
# isomorphism search


def test_gl3_has_168_elements():
    assert len(gl3()) == 168
    assert (1, 2, 4) in gl3()  # identity


def test_iso_between_matrices_sharing_a_row():
    qa2, qa3, qa5 = _quotient("A2"), _quotient("A3"), _quotient("A5")
    assert find_graded_iso(qa2, qa3) is not None
    assert find_graded_iso(qa2, qa5) is not None


def test_identity_self_iso():
    assert substitution_maps_ideal((1, 2, 4), QA1, QA1)
    assert find_graded_iso(QA1, QA1) is not None


def test_no_iso_between_a1_and_b1():
    assert find_graded_iso(QA1, QB1) is None


def test_iso_hilbert_gate():
    fs = face_structure(GaleDiagram((1, 1, 1, 1, 1)))
    pentagon_q = quotient_presentation(fs, enumerate_charmats(fs)[0])
    assert find_graded_iso(QA1, pentagon_q) is None


def test_pairwise_matrix_examples():
    diag = pairwise_iso_matrix([QA1], [QA1])
    assert diag == [[True]]
    assert pairwise_iso_matrix([_quotient("A2")], [_quotient("A5")]) == [[True]]


def test_pairwise_matrix_self_diagonal():
    qas = [_quotient(f"A{i}") for i in range(1, 22)]
    matrix = pairwise_iso_matrix(qas, qas)
    assert all(matrix[i][i] for i in range(21))
    # symmetric relation: an iso one way has an inverse the other way
    assert all(matrix[i][j] == matrix[j][i] for i in range(21) for j in range(21))


def test_found_substitution_transports_profiles():
    qa2, qa5 = _quotient("A2"), _quotient("A5")
    rows = find_graded_iso(qa2, qa5)
    images = substitution_images(rows)
    for gamma in LINEAR_FORMS:
        image = substitute_linear(gamma, images)
        assert codim(gamma, qa2) == codim(image, qa5)
        assert order(gamma, qa2) == order(image, qa5)


# ---------------------------------------------------------------------------
# structural invariants


def test_poincare_pairing_nondegenerate():
    for label in ("A1", "A21", "B1", "B17"):
        assert poincare_nondegenerate(_quotient(label))


def test_top_degree_component_full():
    from galerig.gf2 import monomial_count

    assert QA1.ideal.dimension(6) == monomial_count(3, 6) == 28
