"""Tests for the level-k sl2 parafermion instance and its closed forms."""

from fractions import Fraction as Q
from itertools import combinations_with_replacement

import pytest

import fusion_positivity as fp
from fusion_positivity.parafermion_sl2 import all_labels


def lab(k, i, j):
    return fp.canonicalize(k, i, j)


def test_canonicalize_examples():
    assert fp.canonicalize(3, 0, 0) == fp.Sl2Label(3, 3, 0)
    assert fp.canonicalize(3, 1, 2) == fp.Sl2Label(3, 2, 1)
    assert fp.canonicalize(3, 2, 1) == fp.Sl2Label(3, 2, 1)


def test_canonicalize_idempotent_and_total():
    for k in range(1, 6):
        for i in range(k + 1):
            for j in range(-k, 2 * k):
                m = fp.canonicalize(k, i, j)
                assert fp.canonicalize(k, m.i, m.j) == m
                assert 0 <= m.j < m.i <= k


def test_canonicalize_domain_error():
    with pytest.raises(fp.DomainError):
        fp.canonicalize(3, 4, 0)
    with pytest.raises(fp.DomainError):
        fp.canonicalize(0, 0, 0)


def test_label_constructor_rejects_noncanonical():
    with pytest.raises(fp.LabelDomainError):
        fp.Sl2Label(3, 1, 1)


def test_dual_examples():
    assert fp.dual(lab(3, 2, 1)) == lab(3, 2, 1)
    assert fp.dual(lab(3, 3, 1)) == lab(3, 3, 2)
    assert fp.dual(lab(3, 1, 0)) == lab(3, 2, 0)


def test_dual_involutive_and_weight_preserving():
    for k in range(1, 7):
        for m in all_labels(k):
            assert fp.dual(fp.dual(m)) == m
            assert fp.conformal_weight(fp.dual(m)) == fp.conformal_weight(m)


def test_conformal_weight_examples():
    assert fp.conformal_weight(lab(3, 3, 0)) == 0
    assert fp.conformal_weight(lab(3, 2, 1)) == Q(2, 5)
    assert fp.conformal_weight(lab(3, 3, 1)) == Q(2, 3)


def test_conformal_weight_top_row_closed_form():
    for k in range(1, 8):
        for a in range(k):
            assert fp.conformal_weight(lab(k, k, a)) == Q(a * (k - a), k)


def test_conformal_weight_vanishes_only_at_vacuum():
    for k in range(1, 7):
        for m in all_labels(k):
            w = fp.conformal_weight(m)
            assert (w == 0) == (m == fp.vacuum(k))
            assert w >= 0


def test_fuse_examples():
    assert fp.fuse(fp.vacuum(3), lab(3, 2, 1)) == {lab(3, 2, 1): 1}
    assert fp.fuse(lab(3, 1, 0), lab(3, 1, 0)) == {lab(3, 3, 2): 1, lab(3, 2, 0): 1}
    assert fp.fuse(lab(2, 2, 1), lab(2, 2, 1)) == {fp.vacuum(2): 1}


def test_fuse_level_mismatch():
    with pytest.raises(fp.DomainError):
        fp.fuse(lab(2, 2, 1), lab(3, 2, 1))


def test_fuse_commutative():
    for k in range(1, 6):
        labels = all_labels(k)
        for a, b in combinations_with_replacement(labels, 2):
            assert fp.fuse(a, b) == fp.fuse(b, a)


def test_datum_label_counts_and_charge():
    for k in range(1, 11):
        assert len(all_labels(k)) == k * (k + 1) // 2
    assert fp.datum_sl2(2).central_charge == Q(1, 2)
    assert fp.datum_sl2(1).central_charge == 0


def test_datum_axioms():
    for k in range(1, 6):
        fp.datum_sl2(k).validate()


def test_rank4_closed_examples():
    assert fp.rank4_closed((lab(3, 1, 0), lab(3, 3, 1), lab(3, 3, 2), lab(3, 3, 2))) == 0
    assert fp.rank4_closed((lab(3, 2, 1),) * 4) == 2
    assert fp.rank4_closed((lab(2, 2, 1),) * 4) == 1
    assert fp.rank4_closed((lab(3, 2, 1), lab(3, 3, 2), lab(3, 3, 2), lab(3, 3, 2))) == 0


def test_degree04_closed_examples():
    assert fp.degree04_closed(lab(3, 2, 1), (lab(3, 2, 1),) * 3) == 2
    assert fp.degree04_closed(lab(3, 1, 0), (lab(3, 2, 0), lab(3, 2, 0), lab(3, 2, 1))) == -1
    # any tuple containing the vacuum, e.g. the vacuum as base
    assert fp.degree04_closed(lab(3, 1, 0), (lab(3, 2, 0), lab(3, 3, 0), lab(3, 3, 1))) == 0


def test_degree04_closed_precondition():
    with pytest.raises(fp.PreconditionError):
        fp.degree04_closed(lab(3, 2, 1), (lab(3, 1, 0), lab(3, 2, 0), lab(3, 2, 0)))


def test_closed_degree_T_examples():
    assert fp.closed_degree_T(3, (1, 1, 1, 1)) == (2, 2)
    assert fp.closed_degree_T(2, (1, 1, 1, 1)) == (1, 2)
    assert fp.closed_degree_T(4, (1, 1, 1, 1)) == (3, 0)


def test_closed_degree_T_preconditions():
    with pytest.raises(fp.PreconditionError, match="sum"):
        fp.closed_degree_T(5, (1, 1, 1, 1))
    with pytest.raises(fp.PreconditionError, match="t2"):
        fp.closed_degree_T(5, (1, 2, 2, 2))
    with pytest.raises(fp.DomainError):
        fp.closed_degree_T(3, (1, 1, 1, 2))


def test_nontrivial_T_examples():
    assert fp.nontrivial_T(4, (1, 1, 1, 1, 1)) is True
    assert fp.nontrivial_T(4, (1, 1, 1, 1)) is False
    assert fp.nontrivial_T(1, ()) is False
    with pytest.raises(fp.DomainError):
        fp.nontrivial_T(3, (2,))


def test_nontrivial_S1_examples():
    assert fp.nontrivial_S1(3, (1, 1, 2, 2)) is True
    assert fp.nontrivial_S1(3, (1, 1, 1)) is False
    assert fp.nontrivial_S1(5, (0, 0, 0, 0)) is False
    with pytest.raises(fp.DomainError):
        fp.nontrivial_S1(3, (3,))
    with pytest.raises(fp.ResourceLimitError):
        fp.nontrivial_S1(3, (1,) * 15)
    assert fp.nontrivial_S1(3, (1,) * 15, cap=20) is True


def test_symmetric_rank_support_examples():
    assert fp.symmetric_rank_support(8, 2, 2, 4) is True
    assert fp.symmetric_rank_support(8, 2, 2, 0) is True
    assert fp.symmetric_rank_support(4, 1, 1, 3) is False
    assert fp.symmetric_rank_support(4, 1, 1, 1) is True


def test_subring_examples():
    assert fp.subring_T(3) == (lab(3, 3, 0), lab(3, 2, 1))
    assert fp.subring_S1(3) == (lab(3, 3, 0), lab(3, 3, 1), lab(3, 3, 2))
    assert fp.subring_T(1) == (fp.vacuum(1),)


def test_subrings_closed():
    for k in range(1, 8):
        d = fp.datum_sl2(k)
        fp.validate_subring(d, fp.subring_T(k))
        fp.validate_subring(d, fp.subring_S1(k))


def test_abelian_facts():
    # the top-row subring is always abelian, the self-dual one only below level 3
    for k in range(1, 7):
        d = fp.datum_sl2(k)
        assert fp.positivity_certificate(d, fp.subring_S1(k)).abelian
        cert = fp.positivity_certificate(d, fp.subring_T(k))
        assert cert.abelian == (k < 3)


def test_parse_round_trip():
    for k in range(1, 7):
        for m in all_labels(k):
            assert fp.parse_sl2_label(str(m)) == m
    assert fp.parse_sl2_label("M[0,0]@3") == fp.vacuum(3)
    with pytest.raises(fp.LabelDomainError):
        fp.parse_sl2_label("M[1]@3")
    with pytest.raises(fp.LabelDomainError):
        fp.parse_sl2_label("N[1,0]@3")
