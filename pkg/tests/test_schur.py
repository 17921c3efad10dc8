from math import comb

import pytest

from frobamp.schur import (Partition, carter_lusztig_complex,
                           hook_family_bookkeeping, parse_partition,
                           partitions_of, schur_dimension, schur_weyl_sum,
                           standard_tableaux_count)


def test_partition_validation():
    assert Partition((3, 1)).weight == 4
    assert Partition(()).weight == 0
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))


def test_parse_partition():
    assert parse_partition("3,1") == Partition((3, 1))
    assert parse_partition("(2, 1, 1)") == Partition((2, 1, 1))
    assert parse_partition("") == Partition(())


def test_symmetric_powers_are_monomial_counts():
    for m in range(6):
        for r in range(1, 5):
            assert schur_dimension(Partition((m,)) if m else Partition(()), r) \
                == comb(m + r - 1, r - 1)


def test_exterior_powers_are_binomials():
    for i in range(1, 5):
        for r in range(1, 6):
            assert schur_dimension(Partition((1,) * i), r) == comb(r, i)


def test_hook_shape_dimension():
    # frozen: dim of the (2,1)-power of a rank-2 space is 3*2 - 4 = 2
    assert schur_dimension(Partition((2, 1)), 2) == 2


def test_dimension_zero_iff_too_many_rows():
    for r in range(1, 4):
        assert schur_dimension(Partition((1,) * (r + 1)), r) == 0
        assert schur_dimension(Partition((2, 1) + (1,) * r), r) == 0
        assert schur_dimension(Partition((1,) * r), r) == 1


def test_standard_tableaux_counts():
    assert standard_tableaux_count(Partition((2, 1))) == 2
    assert standard_tableaux_count(Partition((3, 2))) == 5
    assert standard_tableaux_count(Partition((5,))) == 1
    # total over partitions of m: involution count; frozen for m = 4: 10
    assert sum(standard_tableaux_count(q) for q in partitions_of(4)) == 10


def test_schur_weyl_dimension_count():
    for m in range(1, 6):
        for r in range(1, 5):
            assert schur_weyl_sum(m, r) == r ** m


def test_carter_lusztig_small_cases():
    cx = carter_lusztig_complex(2, 3)
    assert cx.partitions == (Partition((3,)), Partition((2, 1)))
    assert cx.dimensions == (4, 2)
    assert cx.alternating_sum == 0

    cx = carter_lusztig_complex(3, 2)
    assert cx.partitions == (Partition((2,)), Partition((1, 1)))
    assert cx.dimensions == (6, 3)
    assert cx.alternating_sum == 0


def test_carter_lusztig_rank_one_degenerates():
    for p in (2, 3, 5):
        cx = carter_lusztig_complex(1, p)
        assert cx.partitions == (Partition((p,)),)
        assert cx.dimensions == (1,)
        assert cx.alternating_sum == 0


def test_carter_lusztig_last_partition_shape():
    for r in (2, 3, 5):
        for p in (2, 3, 5, 7):
            cx = carter_lusztig_complex(r, p)
            k = min(p - 1, r - 1)
            assert cx.partitions[-1] == Partition((p - k,) + (1,) * k)


def test_carter_lusztig_rejects_nonprime():
    with pytest.raises(ValueError):
        carter_lusztig_complex(2, 4)
    with pytest.raises(ValueError):
        carter_lusztig_complex(0, 3)


def test_hook_family_report():
    rep = hook_family_bookkeeping(2, 5, 5)
    assert rep.partitions == (Partition((5,)), Partition((4, 1)))
    assert rep.dimensions == (6, 4)
    rep = hook_family_bookkeeping(1, 3, 7)
    assert rep.partitions == (Partition((7,)),)


def test_hook_family_dimensions_increase_in_n():
    for r in (2, 3):
        for k in range(r):
            previous = 0
            for n_value in range(r, 21):
                dims = hook_family_bookkeeping(r, 5, n_value).dimensions
                assert dims[k] >= previous
                previous = dims[k]
