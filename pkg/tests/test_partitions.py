import pytest

from quasibps.bps import partition_count
from quasibps.errors import (
    AsymmetricQuiverError,
    CutoffExceededError,
    InputSchemaError,
)
from quasibps.partitions import (
    VectorPartition,
    _orderings,
    admissible_partitions,
    admissible_partitions_closed_form,
    enumerate_vector_partitions,
    find_central_weight,
    partition_indicator,
    partition_indicator_blockwise,
)
from quasibps.quiver import Quiver, loop_quiver, total_dim, triple
from quasibps.weights import CentralWeight

TORIC1 = Quiver(("0", "1"), ((1, 3), (3, 1)))
CROSS = Quiver(("a", "b"), ((1, 2), (2, 1)))


def test_vector_partition_canonical():
    a = VectorPartition(((1, 0), (1, 1), (1, 0)))
    b = VectorPartition(((1, 1), (1, 0), (1, 0)))
    assert a == b
    assert hash(a) == hash(b)
    assert a.parts == ((1, 1), (1, 0), (1, 0))
    assert a.length == 3
    assert a.vector_sum() == (3, 1)
    assert a.multiplicities() == {(1, 1): 1, (1, 0): 2}
    assert str(a) == "(1,1)+(1,0)+(1,0)"
    assert str(VectorPartition(((2,), (1,)))) == "2+1"
    with pytest.raises(InputSchemaError):
        VectorPartition(((1,), (0,)))
    with pytest.raises(InputSchemaError):
        VectorPartition(((1, -1),))


def test_enumerate_single_vertex_matches_partition_function():
    for n in range(1, 7):
        parts = enumerate_vector_partitions((n,))
        assert len(parts) == partition_count(n)
        assert all(a.vector_sum() == (n,) for a in parts)
        assert len(set(parts)) == len(parts)
    assert [str(a) for a in enumerate_vector_partitions((3,))] == ["3", "2+1", "1+1+1"]


def test_enumerate_two_vertex_counts():
    assert len(enumerate_vector_partitions((1, 1))) == 2
    assert len(enumerate_vector_partitions((2, 1))) == 4
    assert len(enumerate_vector_partitions((2, 2))) == 9
    for a in enumerate_vector_partitions((2, 2)):
        assert a.vector_sum() == (2, 2)


def test_enumerate_cutoff():
    with pytest.raises(CutoffExceededError):
        enumerate_vector_partitions((21,))
    assert len(enumerate_vector_partitions((21,), force=True)) == partition_count(21)


def test_orderings_of_a_multiset():
    parts = ((1, 0), (1, 0), (0, 1))
    seen = list(_orderings(parts))
    assert len(seen) == 3
    assert len(set(seen)) == 3
    assert all(tuple(sorted(o, reverse=True)) == parts for o in seen)


def test_full_partition_is_always_admissible():
    for q, d in [(loop_quiver(3), (4,)), (TORIC1, (1, 1)), (CROSS, (2, 2))]:
        for v in range(0, 4):
            delta = CentralWeight.spread(d, v)
            assert partition_indicator(q, d, [tuple(d)], delta) == 1


def test_indicator_three_loop_rank_two():
    q = loop_quiver(3)
    two = VectorPartition(((1,), (1,)))
    assert partition_indicator(q, (2,), two, CentralWeight.spread((2,), 0)) == 1
    assert partition_indicator(q, (2,), two, CentralWeight.spread((2,), 1)) == 0
    assert partition_indicator(q, (2,), two, CentralWeight.spread((2,), 2)) == 1


def test_indicator_toric_two_part_tracks_parity():
    two = VectorPartition(((1, 0), (0, 1)))
    for v in range(-2, 4):
        delta = CentralWeight.spread((1, 1), v)
        assert partition_indicator(TORIC1, (1, 1), two, delta) == v % 2


def test_indicator_one_loop_tracks_evenness():
    q = loop_quiver(1)
    two = VectorPartition(((1,), (1,)))
    for v in range(0, 4):
        delta = CentralWeight.spread((2,), v)
        assert partition_indicator(q, (2,), two, delta) == (1 if v % 2 == 0 else 0)


def test_blockwise_route_agrees():
    quivers = [loop_quiver(1), loop_quiver(2), loop_quiver(3), CROSS, TORIC1]
    for q in quivers:
        dims = [(d,) for d in (1, 2, 3)] if q.num_vertices == 1 else \
               [(1, 1), (2, 1), (1, 2)]
        for d in dims:
            for v in range(total_dim(d) + 1):
                delta = CentralWeight.spread(d, v)
                for a in enumerate_vector_partitions(d):
                    assert partition_indicator(q, d, a, delta) == \
                        partition_indicator_blockwise(q, d, a, delta)
    # and on a non-spread central weight
    delta = CentralWeight.parse("1/2,-1/2")
    for a in enumerate_vector_partitions((2, 2)):
        assert partition_indicator(CROSS, (2, 2), a, delta) == \
            partition_indicator_blockwise(CROSS, (2, 2), a, delta)


def test_admissible_sets_three_loop():
    q = loop_quiver(3)
    sets = {v: [str(a) for a in
                admissible_partitions(q, (3,), CentralWeight.spread((3,), v))]
            for v in range(4)}
    assert sets[0] == ["3", "2+1", "1+1+1"]
    assert sets[1] == ["3"]
    assert sets[2] == ["3"]
    assert sets[3] == ["3", "2+1", "1+1+1"]


def test_closed_form_matches_generic():
    cases = [(loop_quiver(3), (4,)), (loop_quiver(1), (4,)), (CROSS, (2, 2)),
             (loop_quiver(2), (4,)), (loop_quiver(4), (3,))]
    for q, d in cases:
        for v in range(total_dim(d) + 1):
            generic = admissible_partitions(q, d, CentralWeight.spread(d, v))
            assert admissible_partitions_closed_form(q, d, v) == generic


def test_closed_form_refuses_other_quivers():
    with pytest.raises(InputSchemaError):
        admissible_partitions_closed_form(TORIC1, (1, 1), 0)  # odd cross arrows
    with pytest.raises(InputSchemaError):
        admissible_partitions_closed_form(loop_quiver(0), (2,), 0)


def test_scaled_coprime_set_sizes():
    # odd loops: admissible sets at n-fold scalings of a coprime pair biject
    # with ordinary partitions of n
    q3 = loop_quiver(3)
    for n in range(1, 7):
        assert len(admissible_partitions(q3, (n,), CentralWeight.spread((n,), 0))) \
            == partition_count(n)
        assert len(admissible_partitions(q3, (n,), CentralWeight.spread((n,), n))) \
            == partition_count(n)


def test_indicator_accepts_raw_part_lists():
    q = loop_quiver(3)
    delta = CentralWeight.spread((3,), 0)
    assert partition_indicator(q, (3,), [(2,), (1,)], delta) == 1
    with pytest.raises(InputSchemaError):
        partition_indicator(q, (3,), [(2,), (2,)], delta)


def test_find_central_weight_odd_loops():
    q = loop_quiver(3)
    assert find_central_weight(q, (1,)) == CentralWeight.spread((1,), 0)
    for d in (2, 3, 5, 8):
        assert find_central_weight(q, (d,)) == CentralWeight.spread((d,), 1)


def test_find_central_weight_even_loops():
    q = loop_quiver(2)
    assert find_central_weight(q, (2,)) == CentralWeight.spread((2,), 0)
    assert find_central_weight(q, (4,)) == CentralWeight.spread((4,), 1)
    # rank 2 mod 4: the first working parameter shares a factor with the rank
    assert find_central_weight(q, (6,)) == CentralWeight.spread((6,), 2)


def test_find_central_weight_two_vertices():
    assert find_central_weight(TORIC1, (1, 1)) == CentralWeight.spread((1, 1), 0)
    assert find_central_weight(CROSS, (1, 1)) == CentralWeight.spread((1, 1), 1)


def test_find_central_weight_exhausted():
    assert find_central_weight(loop_quiver(3), (4,), max_v=0) is None


def test_tripled_quiver_reuses_arrow_data():
    # admissibility sees only arrow counts, so the tripled one-loop quiver
    # behaves exactly like the plain three-loop one
    tq = triple(loop_quiver(1))
    delta = CentralWeight.spread((3,), 0)
    assert admissible_partitions(tq, (3,), delta) == \
        admissible_partitions(loop_quiver(3), (3,), delta)


def test_partition_input_errors():
    asym = Quiver(("a", "b"), ((0, 2), (1, 0)))
    with pytest.raises(AsymmetricQuiverError):
        partition_indicator(asym, (1, 1), [(1, 1)], CentralWeight.zero(2))
    with pytest.raises(InputSchemaError):
        admissible_partitions(loop_quiver(3), (2, 2), CentralWeight.zero(1))
