"""Generating-sequence families, expansion, and ring cutting."""

from __future__ import annotations

import pytest

from diamforge.core import (
    covered_edges,
    dual_diameter,
    edge_multiplicities,
    expand_pair,
    is_good,
)
from diamforge.genseq import (
    CutSpec,
    GeneratingSequence,
    blue_terms,
    canonical_residue,
    cut_circular,
    cut_exposing,
    expand_pair_of,
    expand_to_circular,
    gs_full,
    gs_missing_12,
    gs_missing_1248,
    verify_generating_sequence,
)


def test_sequence_normalization():
    gs = GeneratingSequence(13, [-1, 15, 4], frozenset())
    assert gs.terms == [12, 2, 4]
    assert gs.m == 3
    with pytest.raises(ValueError):
        GeneratingSequence(12, [1], frozenset())
    with pytest.raises(ValueError):
        GeneratingSequence(13, [13, 1, 2], frozenset())
    with pytest.raises(ValueError):
        GeneratingSequence(13, [1, 2, 4], frozenset({3}))


def test_canonical_residue():
    assert canonical_residue(5, 13) == 5
    assert canonical_residue(8, 13) == 5
    assert canonical_residue(30, 37) == 7
    assert canonical_residue(-3, 37) == 3


def test_blue_terms_with_turn():
    gs, _ = gs_missing_1248(7)
    assert gs.terms == [5, 14, 3, 6, 11]
    assert sorted(gs.turns) == [1]
    assert blue_terms(gs) == [19, 22, 9, 17, 16]


def test_hard_coded_rows():
    assert gs_full(3).terms == [1, 2, 4]
    assert gs_full(4).terms == [1, 2, 6, 4]
    assert gs_full(5).terms == [1, 2, 7, 6, 4]
    assert all(not gs_full(k).turns for k in (3, 4, 5))
    assert gs_missing_12(4)[0].terms == [3, 4, 8]
    assert gs_missing_12(7)[0].terms == [11, 8, 17, 7, 6, 3]


def test_generic_rows():
    g = gs_full(8)
    assert (g.terms, sorted(g.turns)) == ([3, 2, 7, 6, 11, 10, 15, 14], [7])
    g = gs_full(7)
    assert (g.terms, sorted(g.turns)) == ([23, 14, 25, 20, 2, 1, 11], [])
    g, _ = gs_missing_12(9)
    assert (g.terms, sorted(g.turns)) == ([8, 32, 15, 4, 21, 7, 6, 11], [2])
    g, _ = gs_missing_12(8)
    assert (g.terms, sorted(g.turns)) == ([4, 10, 9, 21, 7, 6, 11], [0])
    g, _ = gs_missing_1248(8)
    assert (g.terms, sorted(g.turns)) == ([3, 9, 5, 6, 11, 7], [2])


def test_family_ranges():
    with pytest.raises(ValueError):
        gs_full(2)
    with pytest.raises(ValueError):
        gs_missing_12(3)
    with pytest.raises(ValueError):
        gs_missing_1248(6)
    with pytest.raises(ValueError):
        gs_missing_12(4, end="seven")
    with pytest.raises(ValueError):
        gs_missing_12(5, end="short")


def test_family_verification_sample():
    for k in (3, 4, 5, 6, 7, 12, 25):
        rep = verify_generating_sequence(gs_full(k))
        assert rep.valid and rep.missing == frozenset()
    for k in (4, 5, 6, 7, 8, 9, 24, 25):
        rep = verify_generating_sequence(gs_missing_12(k)[0])
        assert rep.valid and rep.missing == frozenset({1, 2})
    for k in (7, 8, 9, 10, 24, 25):
        rep = verify_generating_sequence(gs_missing_1248(k)[0])
        assert rep.valid and rep.missing == frozenset({1, 2, 4, 8})


def test_verification_failures():
    bad_gcd = GeneratingSequence(13, [1, 3, 9], frozenset())
    rep = verify_generating_sequence(bad_gcd)
    assert not rep.valid and "factor" in rep.reason

    adjacent = GeneratingSequence(37, [8, 32, 15, 4, 21, 7, 6, 11], frozenset({2, 3}))
    rep = verify_generating_sequence(adjacent)
    assert not rep.valid and "adjacent" in rep.reason

    collide = GeneratingSequence(13, [1, 2, 3], frozenset())
    rep = verify_generating_sequence(collide)
    assert not rep.valid


def test_expansion_closes_into_ring():
    seq = expand_pair_of(gs_full(3))
    assert seq.circular and len(seq.triangles) == 39
    assert is_good(seq)
    assert dual_diameter(seq) == 19
    assert len(covered_edges(seq)) == 78


def test_expansion_with_turn_covers_predicted_residues():
    gs, _ = gs_missing_1248(9)
    seq = expand_pair_of(gs)
    n = gs.n
    assert len(seq.triangles) == gs.m * n
    predicted = {canonical_residue(a, n) for a in gs.terms}
    predicted |= {canonical_residue(c, n) for c in blue_terms(gs)}
    got = {canonical_residue(v - u, n) for u, v in covered_edges(seq)}
    assert got == predicted
    assert {1, 2, 4, 8}.isdisjoint(got)


def test_turn_on_seed_is_rotated_away():
    gs, _ = gs_missing_12(8)
    assert 0 in gs.turns
    seq = expand_pair_of(gs)
    assert seq.circular and is_good(seq)
    missing = {1, 2}
    residues = {canonical_residue(v - u, gs.n) for u, v in covered_edges(seq)}
    assert residues == set(range(1, (gs.n - 1) // 2 + 1)) - missing


def test_multiplicity_profile():
    """Each residue class sits at one uniform multiplicity across the ring."""
    gs, _ = gs_missing_1248(9)
    seq = expand_pair_of(gs)
    by_res: dict[int, set[int]] = {}
    for e, m in edge_multiplicities(seq).items():
        by_res.setdefault(canonical_residue(e[1] - e[0], gs.n), set()).add(m)
    singles = {r for r, ms in by_res.items() if ms == {1}}
    doubles = {r for r, ms in by_res.items() if ms == {2}}
    assert singles == {9, 12, 14, 15, 16, 17, 18}
    assert doubles == {3, 5, 6, 7, 10, 11, 13}
    assert singles | doubles == set(by_res)


def test_cut_specs_are_deterministic():
    _, spec = gs_missing_12(4)
    assert spec == CutSpec((0, 6), (0, 14))
    _, spec = gs_missing_12(9)
    assert spec == CutSpec((5, 23), (0, 34))
    _, spec = gs_missing_12(9, end="seven")
    assert spec == CutSpec((0, 13), (0, 7))
    _, spec = gs_missing_1248(7)
    assert spec == CutSpec((0, 17), (6, 17), (0, 6))


def test_cut_opens_ring():
    gs, spec = gs_missing_12(4)
    ring = expand_pair_of(gs)
    lin = cut_circular(ring, spec)
    assert not lin.circular and is_good(lin)
    assert len(lin.triangles) == len(ring.triangles) - 1
    assert dual_diameter(lin) == len(lin.triangles) - 1
    assert len(covered_edges(lin)) == len(covered_edges(ring)) - 1
    ends = (lin.triangles[0], lin.triangles[-1])
    assert any(set(spec.end_edge) <= t for t in ends)


def test_cut_exposes_both_ends_for_1248():
    for k in (7, 8, 9):
        gs, spec = gs_missing_1248(k)
        lin = cut_circular(expand_pair_of(gs), spec)
        assert set(spec.end_edge) <= lin.triangles[0]
        assert set(spec.second_end_edge) <= lin.triangles[-1]


def test_cut_exposing_scan_matches_returned_spec():
    gs, spec = gs_missing_12(5)
    ring = expand_pair_of(gs)
    assert cut_exposing(ring, spec.end_edge) == spec


def test_cut_exposing_on_full_ring():
    ring = expand_pair_of(gs_full(3))
    assert cut_exposing(ring, (0, 1)) == CutSpec((0, 3), (0, 1))


def test_cut_rejects_doubled_destroyed_edge():
    gs, _ = gs_missing_12(4)
    ring = expand_pair_of(gs)
    doubled = next(e for e, m in edge_multiplicities(ring).items() if m == 2)
    with pytest.raises(ValueError):
        cut_circular(ring, CutSpec(doubled, (0, 14)))


def test_expand_requires_valid_sequence():
    with pytest.raises(ValueError):
        expand_to_circular(GeneratingSequence(13, [1, 3, 9], frozenset()))
