"""Subdiagonal predicates and per-step diagonal comparisons, integer-exact.

A path is subdiagonal when it lies weakly below the straight line joining
its endpoints: y = x for a central path to (n, n), y = n/(n+1) * x for its
image ending at (n+1, n).  All comparisons cross-multiply so this module
contains no rational or floating-point arithmetic; in particular the fact
that an interior vertex never lands exactly on the image diagonal is a
divisibility statement and is tested exactly.

Checking vertices alone suffices: every step segment whose endpoints lie
weakly below a line through the origin stays weakly below it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .lattice_core import (
    BadEndpoint,
    DelannoyPath,
    KimberlingPath,
    LatticePoint,
    central_index,
    path_vertices,
)
from .bijection import step_labels

CASE_EQUAL = "equal"
CASE_MORE_BEFORE_EAST = "more_before_east"
CASE_MORE_BEFORE_NORTH = "more_before_north"
CASE_LABELS = (CASE_EQUAL, CASE_MORE_BEFORE_EAST, CASE_MORE_BEFORE_NORTH)


class EastEnd(NamedTuple):
    """Terminal vertex of the i-th East step (index is 1-based)."""

    index: int
    point: LatticePoint


@dataclass(frozen=True)
class DiagonalFlags:
    """Per-East-index diagonal comparisons for a central path and its image.

    ``east_weakly_above[i]``: the i-th East step's terminal vertex (X, Y)
    satisfies Y >= X.  ``vertex_strictly_above[i]``: the i-th interior
    vertex (x, y) of the image satisfies y * (n+1) > x * n.  Both tuples
    have one entry per East step.
    """

    east_weakly_above: tuple[bool, ...]
    vertex_strictly_above: tuple[bool, ...]


def is_subdiagonal_delannoy(path: DelannoyPath) -> bool:
    """True iff every vertex (X, Y) of a central path satisfies Y <= X."""
    central_index(path)
    x = y = 0
    for ch in path.word:
        if ch == "E":
            x += 1
        elif ch == "N":
            y += 1
        else:
            x += 1
            y += 1
        if y > x:
            return False
    return True


def is_subdiagonal_kimberling(kpath: KimberlingPath) -> bool:
    """True iff every vertex satisfies y * (n+1) <= x * n, for a path to (n+1, n)."""
    ex, ey = kpath.endpoint
    if ex != ey + 1 or ey < 0:
        raise BadEndpoint(ex, ey)
    n = ey
    return all(y * (n + 1) <= x * n for x, y in kpath.vertices)


def below_endpoint_chord(kpath: KimberlingPath) -> bool:
    """Generic vertex test against the chord to the path's own endpoint.

    For an endpoint (i, j) this checks y * i <= x * j at every vertex; for
    paths to (n+1, n) it coincides with ``is_subdiagonal_kimberling``.
    """
    i_end, j_end = kpath.endpoint
    return all(y * i_end <= x * j_end for x, y in kpath.vertices)


def east_ends(path: DelannoyPath) -> list[EastEnd]:
    """Terminal vertices of the East steps of a central path, in step order."""
    central_index(path)
    x = y = 0
    ends: list[EastEnd] = []
    for ch in path.word:
        if ch == "E":
            x += 1
            ends.append(EastEnd(len(ends) + 1, (x, y)))
        elif ch == "N":
            y += 1
        else:
            x += 1
            y += 1
    return ends


def diagonal_flags(path: DelannoyPath) -> DiagonalFlags:
    """Evaluate both diagonal comparisons for every East index of a central path."""
    n, _ = central_index(path)
    ends = east_ends(path)
    labels = step_labels(path)
    east_flags = tuple(py >= px for _, (px, py) in ends)
    vertex_flags = tuple(
        y * (n + 1) > x * n for x, y in zip(labels.a_labels, labels.b_labels)
    )
    return DiagonalFlags(east_flags, vertex_flags)


def preceding_d_counts(path: DelannoyPath) -> list[tuple[int, int]]:
    """For each index i: how many D steps precede the i-th N and the i-th E.

    The three possible orderings of the two counts partition the East
    indices; the pair is equal exactly when no D falls between the i-th N
    and the i-th E.
    """
    central_index(path)
    d_seen = 0
    before_north: list[int] = []
    before_east: list[int] = []
    for ch in path.word:
        if ch == "D":
            d_seen += 1
        elif ch == "N":
            before_north.append(d_seen)
        else:
            before_east.append(d_seen)
    return list(zip(before_north, before_east))


def classify_d_counts(before_north: int, before_east: int) -> str:
    """One of the three case labels for a (before_north, before_east) pair."""
    if before_north == before_east:
        return CASE_EQUAL
    if before_north < before_east:
        return CASE_MORE_BEFORE_EAST
    return CASE_MORE_BEFORE_NORTH


def sampled_subdiagonal_delannoy(path: DelannoyPath) -> bool:
    """Subdiagonality of a central path checked at sampled segment points.

    Each step segment is sampled at parameters m/(n+1), m = 0..n+1, and
    compared against y = x in integers.  Exists to corroborate that the
    vertex-only predicate loses nothing between vertices.
    """
    n, _ = central_index(path)
    den = n + 1
    verts = path_vertices(path)
    for (x0, y0), (x1, y1) in zip(verts, verts[1:]):
        dx, dy = x1 - x0, y1 - y0
        for m in range(den + 1):
            if (y0 * den + m * dy) > (x0 * den + m * dx):
                return False
    return True


def sampled_subdiagonal_kimberling(kpath: KimberlingPath) -> bool:
    """Image-side analogue of ``sampled_subdiagonal_delannoy``.

    Samples each segment at parameters m/(n+1) and compares against
    y = n/(n+1) * x by cross-multiplication.
    """
    ex, ey = kpath.endpoint
    if ex != ey + 1 or ey < 0:
        raise BadEndpoint(ex, ey)
    n = ey
    den = n + 1
    verts = kpath.vertices
    for (x0, y0), (x1, y1) in zip(verts, verts[1:]):
        dx, dy = x1 - x0, y1 - y0
        for m in range(den + 1):
            if (y0 * den + m * dy) * den > (x0 * den + m * dx) * n:
                return False
    return True
