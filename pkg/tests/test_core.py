"""Codec, goodness and diameter checks against hand-verified fixtures."""

from __future__ import annotations

import random

import pytest

from diamforge.core import (
    Certificate,
    LabelsLayout,
    TriangleSeq,
    certify,
    covered_edges,
    dual_diameter,
    edge,
    edge_multiplicities,
    encode_triples,
    expand_pair,
    hs_max_diameter,
    is_good,
)

# All-zero layout strip on seven labels whose dual is a path of length 7;
# appending any triangle through its tail edge {1, 4} breaks goodness.
STRIP = LabelsLayout(7, (0, 1, 2, 3, 4, 0, 5, 6, 1, 4), (0,) * 7)

# Circular walk on 13 labels covering every edge of K_13 exactly once or
# twice; 39 triangles, dual cycle of diameter 19.
RING13 = LabelsLayout(
    13,
    (0, 1, 3, 7, 8, 10, 1, 2, 4, 8, 9, 11, 2, 3, 5, 9, 10, 12, 3, 4, 6,
     10, 11, 0, 4, 5, 7, 11, 12, 1, 5, 6, 8, 12, 0, 2, 6, 7, 9, 0, 1),
    (0,) * 38,
)


def test_edge_canonicalizes():
    assert edge(5, 2) == (2, 5)
    with pytest.raises(ValueError):
        edge(3, 3)


def test_pair_schema_validation():
    with pytest.raises(ValueError):
        LabelsLayout(5, (0, 1, 2, 3), (0, 0))
    with pytest.raises(ValueError):
        LabelsLayout(3, (0, 1, 5), ())
    with pytest.raises(ValueError):
        LabelsLayout(4, (0, 1, 2, 3), (2,))


def test_expand_single_triangle():
    seq = expand_pair(LabelsLayout(3, (0, 1, 2), ()))
    assert seq.triangles == [frozenset({0, 1, 2})]
    assert not seq.circular
    assert is_good(seq)
    assert dual_diameter(seq) == 0


def test_expand_both_bit_kinds():
    """Bit 0 drops the carried vertex, bit 1 keeps it."""
    seq = expand_pair(LabelsLayout(5, (0, 1, 2, 3, 4), (0, 1)))
    assert seq.triangles == [
        frozenset({0, 1, 2}),
        frozenset({1, 2, 3}),
        frozenset({1, 3, 4}),
    ]


def test_expand_rejects_degenerate_triangle():
    with pytest.raises(ValueError):
        expand_pair(LabelsLayout(4, (0, 1, 2, 1), (0,)))


def test_strip_shape():
    seq = expand_pair(STRIP)
    assert len(seq.triangles) == 8
    assert is_good(seq)
    assert not seq.circular
    assert dual_diameter(seq) == 7
    assert len(covered_edges(seq)) == 17


def test_strip_tail_edge_is_dead():
    """No triangle {1, 4, x} can extend the strip to diameter 8."""
    labels, layout = STRIP.labels, STRIP.layout
    last = expand_pair(STRIP).triangles[-1]
    assert {1, 4} < last
    attempts = 0
    for x in range(7):
        for bit in (0, 1):
            try:
                longer = expand_pair(
                    LabelsLayout(7, labels + (x,), layout + (bit,))
                )
            except ValueError:
                continue
            if {1, 4} < longer.triangles[-1]:
                attempts += 1
                assert not is_good(longer)
    assert attempts > 0


def test_ring13_closes_and_covers_everything():
    seq = expand_pair(RING13)
    assert seq.circular
    assert len(seq.triangles) == 39
    assert is_good(seq)
    assert dual_diameter(seq) == 19
    assert covered_edges(seq) == {(i, j) for i in range(13) for j in range(i + 1, 13)}


def test_ring13_multiplicity_split():
    counts = edge_multiplicities(expand_pair(RING13))
    per = sorted(counts.values())
    assert per.count(1) == 39 and per.count(2) == 39
    assert set(per) == {1, 2}


def test_goodness_rejections():
    triple_cover = TriangleSeq(
        [frozenset({0, 1, 2}), frozenset({0, 1, 3}), frozenset({0, 1, 4})]
    )
    assert not is_good(triple_cover)
    distant_share = TriangleSeq(
        [
            frozenset({0, 1, 2}),
            frozenset({1, 2, 3}),
            frozenset({2, 3, 4}),
            frozenset({0, 1, 4}),
        ]
    )
    assert not is_good(distant_share)
    gap = TriangleSeq([frozenset({0, 1, 2}), frozenset({2, 3, 4})])
    assert not is_good(gap)


def test_dual_diameter_shapes():
    path = expand_pair(LabelsLayout(6, (0, 1, 2, 3, 4, 5), (0, 0, 0)))
    assert dual_diameter(path) == 3
    clique = TriangleSeq(
        [frozenset({0, 1, 2}), frozenset({0, 1, 3}), frozenset({0, 1, 4})]
    )
    assert dual_diameter(clique) == 1
    with pytest.raises(ValueError):
        dual_diameter(TriangleSeq([frozenset({0, 1, 2}), frozenset({3, 4, 5})]))


def test_hs_values():
    assert [hs_max_diameter(n) for n in range(3, 14)] == [
        0, 1, 3, 5, 9, 12, 16, 21, 26, 31, 37,
    ]
    assert hs_max_diameter(6) == 5
    assert hs_max_diameter(34) == 279
    assert hs_max_diameter(105) == 2728
    with pytest.raises(ValueError):
        hs_max_diameter(2)


def test_encode_round_trip_linear():
    seq = expand_pair(STRIP)
    again = expand_pair(encode_triples(seq))
    assert again.triangles in (seq.triangles, list(reversed(seq.triangles)))


def test_encode_round_trip_circular():
    seq = expand_pair(RING13)
    pair = encode_triples(seq)
    assert pair == RING13
    assert expand_pair(pair).triangles == seq.triangles


def test_encode_rejects_broken_walks():
    with pytest.raises(ValueError):
        encode_triples(TriangleSeq([frozenset({0, 1, 2}), frozenset({2, 3, 4})]))


def test_certify_optimal_pair():
    cert = certify(expand_pair(LabelsLayout(4, (0, 1, 2, 3), (0,))), 4)
    assert cert == Certificate(
        good=True,
        circular=False,
        covered_edges=5,
        diameter=1,
        optimum=1,
        matches_optimum=True,
        uncovered_edges=[(0, 3)],
    )


def test_certify_circular_never_matches():
    cert = certify(expand_pair(RING13), 13)
    assert cert.good and cert.circular
    assert cert.covered_edges == 78 and cert.uncovered_edges == []
    assert not cert.matches_optimum


def test_certify_rejects_bad_walks():
    seq = TriangleSeq([frozenset({0, 1, 2}), frozenset({0, 1, 3}), frozenset({0, 1, 4})])
    cert = certify(seq, 5)
    assert not cert.good and not cert.matches_optimum


def test_random_walks_obey_the_edge_law():
    from conftest import random_good_pair

    rng = random.Random(4057)
    for _ in range(300):
        seq = expand_pair(random_good_pair(rng))
        assert is_good(seq)
        t = len(seq.triangles)
        assert len(covered_edges(seq)) == 2 * t + 1
        assert dual_diameter(seq) == t - 1


def test_corrupted_walks_fail_goodness():
    from conftest import corrupted_pair

    rng = random.Random(977)
    for _ in range(300):
        seq = expand_pair(corrupted_pair(rng))
        assert not is_good(seq)
        t = len(seq.triangles)
        assert len(covered_edges(seq)) < 2 * t + 1
