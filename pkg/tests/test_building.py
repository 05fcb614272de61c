import pytest

from arrideals.arrangement import Arrangement, braid
from arrideals.building import (
    building_set_obstruction,
    custom_building_set,
    decomposition_obstruction,
    full_building_set,
    irreducible_decomposition,
    is_building_set,
    is_decomposition,
    is_irreducible,
    minimal_building_set,
)
from arrideals.lattice import compute_lattice, flat_sort_key

import helpers


def test_braid3_negative_example(braid_lattices):
    lat = braid_lattices[3]
    top = lat.flat_with_closed((0, 1, 2))
    h01, h02, h12 = (lat.hyperplane_flat(i) for i in range(3))
    assert not is_decomposition(lat, top, [h01, h02])
    assert decomposition_obstruction(lat, top, [h01, h02]) == h12


def test_trivial_decomposition(braid_lattices, corpus_lattices):
    for lat in [braid_lattices[3], braid_lattices[4]] + list(corpus_lattices[:5]):
        for c in lat.proper:
            assert is_decomposition(lat, c, [c])


def test_braid5_block_decomposition():
    lat = compute_lattice(braid(5))
    c = lat.flat_with_closed((0, 1, 4, 9))  # x0=x1=x2 and x3=x4
    w012 = lat.flat_with_closed((0, 1, 4))
    w34 = lat.flat_with_closed((9,))
    assert is_decomposition(lat, c, [w012, w34])
    assert irreducible_decomposition(lat, c) == sorted([w012, w34], key=flat_sort_key)


def test_decomposition_errors(braid_lattices):
    lat = braid_lattices[3]
    top = lat.flat_with_closed((0, 1, 2))
    with pytest.raises(ValueError):
        is_decomposition(lat, lat.ambient, [top])
    with pytest.raises(ValueError):
        is_decomposition(lat, top, [])
    with pytest.raises(ValueError):
        is_decomposition(lat, top, [lat.ambient])
    with pytest.raises(ValueError):
        is_decomposition(lat, top, [top, top])
    other = compute_lattice(braid(4)).proper[0]
    with pytest.raises(ValueError):
        is_decomposition(lat, top, [other])


def test_irreducible_single_blocks(braid_lattices):
    for n in (3, 4, 5):
        lat = braid_lattices[n]
        pair_index = helpers.braid_pair_index(n)
        full_block = helpers.partition_closed_set(
            (tuple(range(n)),), pair_index
        )
        diag = lat.flat_with_closed(full_block)
        assert is_irreducible(lat, diag)
        assert irreducible_decomposition(lat, diag) == [diag]


def test_coordinate_axes_origin_decomposes():
    axes = Arrangement.from_normals(2, [(1, 0), (0, 1)])
    lat = compute_lattice(axes)
    origin = lat.flat_with_closed((0, 1))
    assert not is_irreducible(lat, origin)
    parts = irreducible_decomposition(lat, origin)
    assert [f.closed_set for f in parts] == [(0,), (1,)]


def test_hyperplanes_always_irreducible(corpus_lattices):
    for lat in corpus_lattices:
        gmin = minimal_building_set(lat)
        closed = {f.closed_set for f in gmin.flats}
        for i in range(len(lat.arrangement.hyperplanes)):
            assert (i,) in closed


def test_gmin_is_modular_partitions():
    for n in range(3, 8):
        lat = compute_lattice(braid(n))
        gmin = minimal_building_set(lat)
        pair_index = helpers.braid_pair_index(n)
        expected = {
            helpers.partition_closed_set(p, pair_index)
            for p in helpers.set_partitions(n)
            if helpers.is_modular_partition(p)
        }
        assert {f.closed_set for f in gmin.flats} == expected
        assert len(gmin) == 2 ** n - n - 1


def test_building_set_basics(braid_lattices):
    lat = braid_lattices[3]
    hps = [lat.hyperplane_flat(i) for i in range(3)]
    assert not is_building_set(lat, hps)
    assert building_set_obstruction(lat, hps) == lat.flat_with_closed((0, 1, 2))
    assert is_building_set(lat, minimal_building_set(lat).flats)
    assert is_building_set(lat, lat.proper)
    assert building_set_obstruction(lat, lat.proper) is None


def test_custom_building_set(braid_lattices):
    lat = braid_lattices[3]
    bs = custom_building_set(lat, lat.proper)
    assert bs.kind == "custom"
    with pytest.raises(ValueError, match="not a building set"):
        custom_building_set(lat, [lat.hyperplane_flat(i) for i in range(3)])


def test_kinds():
    lat = compute_lattice(braid(3))
    assert minimal_building_set(lat).kind == "minimal"
    assert full_building_set(lat).kind == "full"
    assert len(full_building_set(lat)) == len(lat.proper)


def test_brute_force_agreement_small():
    """The matroid route returns the unique finest passing decomposition."""
    cases = [
        braid(3),
        braid(4),
        Arrangement.from_normals(2, [(1, 0), (0, 1)]),
        Arrangement.from_normals(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)]),
        Arrangement.from_normals(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)]),
    ]
    for arr in cases:
        lat = compute_lattice(arr)
        for c in lat.proper:
            passing = helpers.brute_force_decompositions(lat, c)
            got = tuple(irreducible_decomposition(lat, c))
            assert (c,) in passing  # the trivial decomposition always passes
            assert tuple(sorted(got, key=flat_sort_key)) in [
                tuple(sorted(p, key=flat_sort_key)) for p in passing
            ]
            best = max(len(p) for p in passing)
            finest = [p for p in passing if len(p) == best]
            assert len(finest) == 1
            assert set(finest[0]) == set(got)
            assert is_irreducible(lat, c) == (passing == [(c,)])


def test_enumerated_building_sets_contain_gmin():
    small = [
        braid(3),
        Arrangement.from_normals(2, [(1, 0), (0, 1), (1, -1)]),
        Arrangement.from_normals(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)]),
    ]
    for arr in small:
        lat = compute_lattice(arr)
        assert len(lat.proper) <= 10
        gmin = set(minimal_building_set(lat).flats)
        sets = helpers.all_building_sets(lat)
        assert sets  # at least G_min and L' qualify
        for bs in sets:
            assert gmin <= set(bs)
        assert tuple(minimal_building_set(lat).flats) in sets
        assert tuple(lat.proper) in sets
