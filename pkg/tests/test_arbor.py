import pytest

from arborlat.arbor import (
    Arbor,
    InvalidArborError,
    arbor_from_json,
    arbor_to_json,
    count_arbors,
    descendant_sets,
    enumerate_arbors,
    is_linear,
    linear,
    make_arbor,
    octopus,
    validate,
)


def test_validate_examples():
    ok, _ = validate(Arbor(2, ((1, 2),), (-1,)))
    assert ok
    ok, msg = validate(Arbor(2, ((1,), (1, 2)), (1, -1)))
    assert not ok and "overlap" in msg
    ok, msg = validate(Arbor(2, ((1,), (2,)), (0, 1)))
    assert not ok  # self-loop at index 1, no root
    ok, _ = validate(Arbor(2, ((1,), (2,)), (1, 1)))
    assert not ok  # no root at all
    ok, _ = validate(Arbor(3, ((1,), (2,)), (1, -1)))
    assert not ok  # 3 not covered


def test_make_arbor_rejects():
    with pytest.raises(InvalidArborError):
        make_arbor(2, [(1,), (1, 2)], [1, -1])
    with pytest.raises(InvalidArborError):
        make_arbor(2, [(1,), (2,)], [1, 0])  # 2-cycle


def test_octopus():
    a = octopus(3, 0)
    assert a.blocks == ((1, 2, 3),) and a.parent == (-1,)
    a = octopus(6, 3)
    assert a.blocks == ((4, 5, 6), (1,), (2,), (3,))
    assert a.parent == (-1, 0, 0, 0)
    a = octopus(2, 1)
    assert a.blocks == ((2,), (1,)) and a.parent == (-1, 0)
    for n, k in [(3, 3), (3, 4), (0, 0), (2, -1)]:
        with pytest.raises(InvalidArborError):
            octopus(n, k)


def test_linear():
    a = linear(3)
    assert a.blocks == ((1,), (2,), (3,)) and a.parent == (1, 2, -1)
    assert is_linear(a)
    assert is_linear(octopus(2, 1))
    assert not is_linear(octopus(3, 2))  # root with two leaf children


def test_descendant_sets():
    t = descendant_sets(octopus(6, 3))
    assert t.sets[0] == frozenset(range(1, 7))
    assert t.sets[1] == {1} and t.size(1) == 1
    t = descendant_sets(linear(3))
    assert t.sets == (frozenset({1}), frozenset({1, 2}), frozenset({1, 2, 3}))
    t = descendant_sets(make_arbor(3, [(1, 2, 3)], [-1]))
    assert t.sets == (frozenset({1, 2, 3}),)


def test_enumeration_counts():
    # Against the partition-times-rooted-trees formula.
    expected = {1: 1, 2: 3, 3: 16, 4: 133, 5: 1521, 6: 22184}
    for n in range(1, 6):
        assert count_arbors(n) == expected[n]
        assert sum(1 for _ in enumerate_arbors(n)) == expected[n]
    assert count_arbors(6) == expected[6]


def test_enumeration_valid_and_distinct():
    for n in range(1, 5):
        seen = set()
        for a in enumerate_arbors(n):
            ok, msg = validate(a)
            assert ok, msg
            assert descendant_sets(a).sets[a.root] == frozenset(range(1, n + 1))
            key = (a.blocks, a.parent)
            assert key not in seen
            seen.add(key)


def test_json_round_trip():
    a = octopus(6, 3)
    text = arbor_to_json(a)
    assert text == '{"n": 6, "blocks": [[4, 5, 6], [1], [2], [3]], "parent": [-1, 0, 0, 0]}'
    assert arbor_from_json(text) == a
    for b in enumerate_arbors(3):
        assert arbor_from_json(arbor_to_json(b)) == b
    with pytest.raises(InvalidArborError):
        arbor_from_json("not json")
    with pytest.raises(InvalidArborError):
        arbor_from_json('{"n": 1}')
    with pytest.raises(InvalidArborError):
        arbor_from_json('{"n": 2, "blocks": [[1], [1, 2]], "parent": [-1, 0]}')
