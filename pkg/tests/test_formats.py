import pytest

from resatlas.formats import (
    classify,
    classify_format,
    cyclic_exists,
    derive_ranks,
    format_exists,
    noetherian_generic_ring,
    symmetric_signature,
    tpqr_cartan_matrix,
)


def test_derive_ranks_d4():
    fmt = derive_ranks([1, 4, 4, 1])
    assert fmt.r == (1, 3, 1) and fmt.r0 == 0 and fmt.valid
    assert fmt.pqr == (2, 2, 2)


def test_derive_ranks_e6():
    fmt = derive_ranks([2, 6, 5, 1])
    assert fmt.r == (2, 4, 1) and fmt.r0 == 0 and fmt.valid
    assert fmt.pqr == (3, 3, 2)


def test_invalid_formats():
    fmt = derive_ranks([1, 1, 1, 1])
    assert not fmt.valid and "r_2" in fmt.diagnosis
    fmt2 = derive_ranks([1, 5, 3, 1])
    assert not fmt2.valid


def test_classification_anchors():
    assert classify(2, 2, 2).dynkin == "D4"
    assert classify(5, 2, 3).dynkin == "E8"
    assert classify(2, 3, 3).dynkin == "E6"
    assert classify(2, 3, 4).dynkin == "E7"
    assert classify(4, 1, 3).dynkin == "A6"
    affine = classify(3, 3, 3)
    assert affine.kind == "affine" and affine.signature == (6, 1, 0)
    indef = classify(2, 3, 7)
    assert indef.kind == "indefinite" and indef.signature == (9, 0, 1)


def test_classification_dual_paths_agree_small():
    for p in range(2, 7):
        for q in range(1, 7):
            for r in range(2, 7):
                classify(p, q, r)  # raises on any disagreement


def test_cartan_matrix_shape():
    A = tpqr_cartan_matrix(2, 2, 2)
    assert len(A) == 4
    assert A[0] == [2, -1, -1, -1]
    assert symmetric_signature(A) == (4, 0, 0)


def test_noetherian():
    assert noetherian_generic_ring(derive_ranks([1, 4, 4, 1]))
    assert not noetherian_generic_ring(derive_ranks([2, 6, 7, 3]))


def test_cyclic_exists_table():
    assert cyclic_exists(2, 3)
    assert cyclic_exists(1, 2) and cyclic_exists(1, 6)
    assert not cyclic_exists(1, 3)
    assert not cyclic_exists(2, 2)
    assert not cyclic_exists(5, 1)
    with pytest.raises(ValueError):
        cyclic_exists(0, 1)


def test_format_exists():
    assert format_exists([1, 4, 4, 1])
    assert format_exists([2, 6, 5, 1])
    assert not format_exists([1, 1, 1, 1])   # r_2 = 0
    assert not format_exists([1, 4, 5, 1])   # Euler != 0
    assert not format_exists([1, 2, 2, 1])   # r_2 = 1


def test_classify_format_matches_pqr():
    fmt = derive_ranks([2, 6, 5, 1])
    assert classify_format(fmt).dynkin == "E6"
