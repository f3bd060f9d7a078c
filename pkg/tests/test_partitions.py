from qtpaths.partitions import (
    add_cell_set, cells, conjugate, dominates, make_partition, n_partitions, partitions, z_const,
)


def test_counts():
    assert [n_partitions(n) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert partitions(0) == ((),)


def test_conjugate_is_involution():
    for n in range(7):
        for lam in partitions(n):
            assert conjugate(conjugate(lam)) == lam


def test_z_const():
    assert z_const((2, 1, 1)) == 2 * 2
    assert z_const((3,)) == 3


def test_make_partition_sorts_and_drops_zeros():
    assert make_partition([1, 0, 3]) == (3, 1)


def test_cells_and_adding():
    assert sorted(cells((2, 1))) == [(1, 1), (1, 2), (2, 1)]
    assert set(add_cell_set((2, 1))) == {(3, 1), (2, 2), (2, 1, 1)}


def test_dominance():
    assert dominates((3,), (2, 1))
    assert not dominates((2, 1, 1), (2, 2))
