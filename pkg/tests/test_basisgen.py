from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schurpres.algebra import get_algebra
from schurpres.basisgen import (card_bijection, card_bijection_inverse, card_domain, content_condition,
                                enumerate_conjecture_sets, enumerate_piece, express_in_basis, get_basis,
                                piece_size, schur_dimension, verify_basis)
from schurpres.rootdata import enumerate_compositions, positive_roots

from reference_data import EXPECTED_HECKE, EXPECTED_PIECES, listing_order, word_text

GRID = [(2, 2), (2, 3), (3, 2), (3, 3)]


@pytest.mark.parametrize("lam", list(EXPECTED_PIECES))
def test_example_pieces(lam):
    n = len(lam)
    got = [word_text(b) for b in enumerate_piece(n, lam, "plus", listing_order(n))]
    want = EXPECTED_PIECES[lam].split(", ")
    assert len(got) == len(set(got))
    assert sorted(got) == sorted(want)


@pytest.mark.parametrize("d", [2, 3])
def test_example_hecke_elements(d):
    piece = enumerate_piece(d, (1,) * d, "plus", listing_order(d))
    hecke = {word_text(b) for b in piece if b.is_hecke((1,) * d)}
    assert hecke == EXPECTED_HECKE[d]


@pytest.mark.parametrize("n,d", GRID)
@pytest.mark.parametrize("side", ["plus", "minus"])
@pytest.mark.parametrize("ring", ["classical", "quantum"])
def test_dimensions(n, d, side, ring):
    rep = verify_basis(get_basis(n, d, side).elements, get_algebra(n, d, ring))
    assert rep["count"] == rep["rank"] == comb(n * n + d - 1, d) == schur_dimension(n, d)


@pytest.mark.parametrize("n,d", GRID + [(4, 2)])
def test_piece_sizes(n, d):
    for lam in enumerate_compositions(n, d):
        assert len(enumerate_piece(n, lam)) == piece_size(lam, n)


@pytest.mark.parametrize("n,d", GRID)
def test_content_condition_and_placements(n, d):
    alg = get_algebra(n, d, "classical")
    for b in get_basis(n, d):
        assert content_condition(b)
        ops = {alg.evaluate(b.monomial(p)) for p in ("left", "middle", "right")}
        assert len(ops) == 1


@pytest.mark.parametrize("n,d", GRID)
def test_card_bijection(n, d):
    dom = card_domain(n, d)
    k = len(positive_roots(n))
    assert len(dom) == comb(2 * k + n - 1 + d, d)
    images = {card_bijection(A, B, C, n, d) for A, B, C in dom}
    assert images == set(get_basis(n, d).elements)
    for A, B, C in dom:
        assert card_bijection_inverse(card_bijection(A, B, C, n, d)) == (A, B, C)


@pytest.mark.parametrize("ring", ["classical", "quantum"])
def test_express_in_basis_recovers_elements(ring):
    alg = get_algebra(3, 2, ring)
    basis = get_basis(3, 2)
    for k, b in enumerate(basis):
        cv = express_in_basis(alg.evaluate(b.monomial()), basis, alg)
        assert cv.coords == {k: alg.ring.one}


@given(st.sampled_from(GRID), st.data())
@settings(max_examples=30, deadline=None)
def test_placement_lemma(nd, data):
    # moving the idempotent across a word shifts it by the word's weight
    n, d = nd
    b = data.draw(st.sampled_from(get_basis(n, d).elements))
    left, mid, right = (b.lam_at(p) for p in ("left", "middle", "right"))
    assert all(x >= 0 for x in left + mid + right)
    assert sum(left) == sum(mid) == sum(right) == d


@pytest.mark.parametrize("n,d", GRID)
def test_conjecture_set_sizes(n, d):
    for kind in ("eHf", "fHe", "EKF", "FKE", "pbw"):
        assert len(enumerate_conjecture_sets(n, d, 1, kind)) == schur_dimension(n, d)
    k = len(positive_roots(n))
    assert len(enumerate_conjecture_sets(n, d, 1, "borel")) == comb(k + n - 1 + d, d)
