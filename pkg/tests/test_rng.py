from collections import Counter

import pytest

from tdom.rng import SplitMix64


def test_reference_vectors():
    assert SplitMix64(0).next_u64() == 0xE220A8397B1DCDAF
    rng = SplitMix64(1234567)
    assert [rng.next_u64() for _ in range(5)] == [
        6457827717110365317,
        3203168211198807973,
        9817491932198370423,
        4593380528125082431,
        16408922859458223821,
    ]


def test_streams_are_deterministic():
    a, b = SplitMix64(42), SplitMix64(42)
    assert [a.below(1000) for _ in range(50)] == [b.below(1000) for _ in range(50)]
    x, y = list(range(20)), list(range(20))
    SplitMix64(9).shuffle(x)
    SplitMix64(9).shuffle(y)
    assert x == y and sorted(x) == list(range(20))


def test_below_range_and_rough_uniformity():
    rng = SplitMix64(5)
    counts = Counter(rng.below(6) for _ in range(6000))
    assert set(counts) == set(range(6))
    assert all(800 < c < 1200 for c in counts.values())
    with pytest.raises(ValueError):
        rng.below(0)


def test_derived_streams_differ():
    parent = SplitMix64(1)
    a, b = parent.derive(1), parent.derive(2)
    assert a.next_u64() != b.next_u64()
