"""Exhaustive search for the largest dual diameter reachable on few labels.

Any complex contains a good sequence of the same dual diameter: restrict it
to the triangles on a diametral shortest path of the dual, and shortest-ness
forbids two path triangles from sharing an edge out of order.  The search
therefore enumerates only good sequences, in codec form, which keeps the
move set tiny: from each triangle the walk may leave across either edge not
shared with its predecessor, and a move is legal exactly when the two edges
it would create are still unused.

Symmetry is removed by fixing the seed triangle to {0, 1, 2} and introducing
fresh labels in increasing order.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from multiprocessing import Pool

from .core import LabelsLayout, dual_diameter, expand_pair, is_good

__all__ = ["SearchResult", "search_max_diameter", "DEFAULT_BUDGET"]

DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class SearchResult:
    """Outcome of one search run.

    ``exhaustive`` is only set when every branch was explored within the
    node budget; non-exhaustive results are lower bounds, never ground
    truth.
    """

    n: int
    best_diameter: int
    witness: LabelsLayout
    exhaustive: bool
    nodes_explored: int


def _dfs(
    n: int,
    labels: list[int],
    layout: list[int],
    state: tuple[int, int, int],
    used: list[int],
    fresh: int,
    limit: int | None,
    prune: bool,
    best: list,
) -> bool:
    """Explore all good extensions; returns False once the node limit hits.

    ``best`` holds [diameter, labels, layout, nodes]; every node offers its
    partial walk under (larger diameter, then smaller (labels, layout))
    order, so the result does not depend on traversal order.
    """
    if limit is not None and best[3] >= limit:
        return False
    best[3] += 1
    diam = len(layout)
    if diam > best[0] or (
        diam == best[0] and (labels, layout) < (best[1], best[2])
    ):
        best[0] = diam
        best[1] = list(labels)
        best[2] = list(layout)

    # A walk of diameter d covers exactly 2d + 3 edges and each extension
    # consumes two fresh ones, which bounds every completion of this node.
    if prune and diam + (n * (n - 1) // 2 - 2 * diam - 3) // 2 < best[0]:
        return True

    c, u, v = state
    for w in range(min(fresh + 1, n)):
        uw = used[w]
        for bit, p, q in ((0, u, v), (1, c, v)):
            if w == p or w == q:
                continue
            if (uw >> p | uw >> q) & 1:
                continue
            used[p] |= 1 << w
            used[q] |= 1 << w
            used[w] |= (1 << p) | (1 << q)
            labels.append(w)
            layout.append(bit)
            ok = _dfs(
                n,
                labels,
                layout,
                (p, q, w) if bit == 0 else (c, q, w),
                used,
                fresh + (w == fresh),
                limit,
                prune,
                best,
            )
            labels.pop()
            layout.pop()
            used[p] &= ~(1 << w)
            used[q] &= ~(1 << w)
            used[w] &= ~((1 << p) | (1 << q))
            if not ok:
                return False
    return True


def _seed():
    used = [0, 0, 0]
    for a, b in ((0, 1), (0, 2), (1, 2)):
        used[a] |= 1 << b
        used[b] |= 1 << a
    return [0, 1, 2], [], (0, 1, 2), used


def _branch_moves(n: int) -> list[tuple[int, int]]:
    """Legal (label, bit) extensions of the bare seed triangle.

    Every edge among {0, 1, 2} is taken, so only the fresh label 3 can
    extend the seed, across either free edge.
    """
    return [(3, 0), (3, 1)] if n >= 4 else []


def _run_moves(args) -> tuple:
    n, moves, limit, prune = args
    best = [0, [0, 1, 2], [], 0]
    complete = True
    for w, bit in moves:
        labels, layout, state, used = _seed()
        used += [0] * (n - 3)
        c, u, v = state
        p, q = (u, v) if bit == 0 else (c, v)
        used[p] |= 1 << w
        used[q] |= 1 << w
        used[w] |= (1 << p) | (1 << q)
        labels.append(w)
        layout.append(bit)
        ok = _dfs(
            n,
            labels,
            layout,
            (p, q, w) if bit == 0 else (c, q, w),
            used,
            4,
            limit,
            prune,
            best,
        )
        if not ok:
            complete = False
            break
    return best[0], best[1], best[2], complete, best[3]


def search_max_diameter(
    n: int,
    budget: int | None = None,
    jobs: int = 1,
    prune: bool = True,
) -> SearchResult:
    """Depth-first search over all good sequences on at most n labels.

    Branches are cut when the unused-edge supply cannot pay for enough
    further triangles to beat the current best.  With ``jobs`` > 1 the
    top-level branches are split across processes, each given an equal
    share of the budget; the merged result does not depend on the worker
    count.

    Args:
        n: number of available labels, at least 3.
        budget: node limit; None reads DIAMFORGE_BUDGET (default 1e8) and
            0 means unlimited.
        jobs: worker processes.
        prune: disable only to cross-check the bound on tiny n.
    """
    if n < 3:
        raise ValueError("need at least three labels")
    if jobs < 1:
        raise ValueError("jobs must be positive")
    if budget is None:
        budget = int(os.environ.get("DIAMFORGE_BUDGET", DEFAULT_BUDGET))
    if budget < 0:
        raise ValueError("budget cannot be negative")
    limit = None if budget == 0 else budget

    moves = _branch_moves(n)
    if jobs == 1 or len(moves) < 2:
        parts = [_run_moves((n, moves, limit, prune))]
        root_nodes = 1
    else:
        chunks = [moves[i::jobs] for i in range(jobs)]
        chunks = [chunk for chunk in chunks if chunk]
        share = None if limit is None else limit // len(chunks)
        with Pool(len(chunks)) as pool:
            parts = pool.map(_run_moves, [(n, c, share, prune) for c in chunks])
        root_nodes = 1

    best_diam = max(p[0] for p in parts)
    pair = min((p[1], p[2]) for p in parts if p[0] == best_diam)
    result = SearchResult(
        n,
        best_diam,
        LabelsLayout(n, tuple(pair[0]), tuple(pair[1])),
        all(p[3] for p in parts),
        root_nodes + sum(p[4] for p in parts),
    )

    seq = expand_pair(result.witness)
    if not is_good(seq) or dual_diameter(seq) != result.best_diameter:
        raise AssertionError("search produced an unsound witness")
    return result
