"""The bijection between central E/N/D words and vertex paths to (n+1, n).

Forward direction: label every East and North step of a central path with
the y-coordinate of the step's terminal vertex.  The labels of the N steps
(in step order) are strictly increasing; the labels of the E steps are
weakly increasing.  Pairing the i-th N label with the i-th E label gives
the i-th interior vertex of the image path, which runs from (0, 0) to
(n+1, n).

Inverse direction: from a path ending at (n+1, n), read off

* ``A`` -- the set of interior x-coordinates,
* ``B`` -- the multiset of interior y-coordinates,
* ``C`` -- the complement {1, ..., n} \\ A.

Each height level 1..n is reached exactly once, by an N step (heights in
A) or by a D step (heights in C), which is why A and C partition {1..n}.
Merging A and B into weakly increasing order with the A element first on
ties, then inserting each C value as far left as the weak increase allows,
reconstructs the sequence of step heights in word order; substituting
A -> N, B -> E, C -> D yields the original word.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .lattice_core import (
    BadEndpoint,
    DelannoyPath,
    KimberlingPath,
    LatticeError,
    central_index,
)

TAG_TO_LETTER = {"A": "N", "B": "E", "C": "D"}


class OverlappingAC(LatticeError):
    """The A and C value sets intersect; they must partition disjoint heights."""

    def __init__(self, overlap: set[int]) -> None:
        super().__init__(f"A and C share values {sorted(overlap)}")
        self.overlap = overlap


@dataclass(frozen=True)
class StepLabels:
    """Terminal-y labels of a central path's steps, grouped by letter.

    ``a_labels`` (N steps) are strictly increasing, ``b_labels`` (E steps)
    weakly increasing, ``c_labels`` (D steps) strictly increasing; A and C
    are disjoint and together cover every height level 1..n.
    """

    a_labels: tuple[int, ...]
    b_labels: tuple[int, ...]
    c_labels: tuple[int, ...]


class TaggedValue(NamedTuple):
    """An integer carrying its source tag A, B, or C."""

    value: int
    tag: str

    def __str__(self) -> str:
        return f"{self.value}{self.tag}"


def _terminal_heights(word: str) -> tuple[list[int], list[int], list[int]]:
    y = 0
    a: list[int] = []
    b: list[int] = []
    c: list[int] = []
    for ch in word:
        if ch == "E":
            b.append(y)
        elif ch == "N":
            y += 1
            a.append(y)
        else:
            y += 1
            c.append(y)
    return a, b, c


def step_labels(path: DelannoyPath) -> StepLabels:
    """Label each step with its terminal y-coordinate, grouped by step letter.

    Only E and N labels feed the forward map; D labels are computed too
    because the inverse reads them back as the complement set C.  Raises
    ``NotCentral`` for non-central paths.
    """
    central_index(path)
    a, b, c = _terminal_heights(path.word)
    return StepLabels(tuple(a), tuple(b), tuple(c))


def phi(path: DelannoyPath) -> KimberlingPath:
    """Map a central path to its vertex path in K_{n+1, n}.

    The i-th interior vertex is (i-th N label, i-th E label); the image
    has exactly k interior vertices, one per East step.
    """
    n, _ = central_index(path)
    a, b, _ = _terminal_heights(path.word)
    vertices = ((0, 0),) + tuple(zip(a, b)) + ((n + 1, n),)
    return KimberlingPath(vertices)


def merge_tagged(
    a_set: Sequence[int],
    b_multiset: Sequence[int],
    c_set: Sequence[int],
) -> list[TaggedValue]:
    """Interleave A and B (A first on ties), then insert each C leftmost.

    ``a_set`` and ``c_set`` must be strictly increasing with values >= 1
    and disjoint from each other; ``b_multiset`` must be weakly increasing.
    Each C value lands immediately before the first element of value >= it
    (or at the end), which keeps the result weakly increasing and places C
    ahead of equal-valued B entries.
    """
    a = list(a_set)
    b = list(b_multiset)
    c = list(c_set)
    _require_increasing(a, "a_set", strict=True)
    _require_increasing(b, "b_multiset", strict=False)
    _require_increasing(c, "c_set", strict=True)
    if (a and a[0] < 1) or (c and c[0] < 1):
        raise LatticeError("A and C values must be >= 1")
    overlap = set(a) & set(c)
    if overlap:
        raise OverlappingAC(overlap)
    values, tags = _merge_core(a, b, c)
    return [TaggedValue(v, t) for v, t in zip(values, tags)]


def _merge_core(
    a: list[int], b: list[int], c: list[int]
) -> tuple[list[int], list[str]]:
    values: list[int] = []
    tags: list[str] = []
    ia = ib = 0
    while ia < len(a) and ib < len(b):
        if a[ia] <= b[ib]:
            values.append(a[ia])
            tags.append("A")
            ia += 1
        else:
            values.append(b[ib])
            tags.append("B")
            ib += 1
    values.extend(a[ia:])
    tags.extend("A" * (len(a) - ia))
    values.extend(b[ib:])
    tags.extend("B" * (len(b) - ib))

    for cv in c:
        pos = bisect_left(values, cv)
        values.insert(pos, cv)
        tags.insert(pos, "C")
    return values, tags


def tagged_to_word(tagged: Iterable[TaggedValue]) -> str:
    """Spell a tagged sequence as a step word via A -> N, B -> E, C -> D."""
    return "".join(TAG_TO_LETTER[t.tag] for t in tagged)


def inverse_parts(
    kpath: KimberlingPath,
) -> tuple[list[int], list[int], list[int], list[TaggedValue]]:
    """The A, B, C sequences and merged tagged sequence for a path to (n+1, n).

    A is the sorted list of interior x-coordinates, B the weakly increasing
    interior y-coordinates, C the ascending complement {1..n} \\ A.  Raises
    ``BadEndpoint`` when the terminal vertex has no (n+1, n) shape.
    """
    ex, ey = kpath.endpoint
    if ex != ey + 1 or ey < 0:
        raise BadEndpoint(ex, ey)
    n = ey
    interior = kpath.interior
    a = [x for x, _ in interior]
    b = [y for _, y in interior]
    present = set(a)
    c = [v for v in range(1, n + 1) if v not in present]
    return a, b, c, merge_tagged(a, b, c)


def phi_inverse(kpath: KimberlingPath) -> DelannoyPath:
    """Invert the map for a path ending at (n+1, n).

    Raises ``BadEndpoint`` when the terminal vertex has no such shape.
    The result is central with index (n, #interior vertices).
    """
    ex, ey = kpath.endpoint
    if ex != ey + 1 or ey < 0:
        raise BadEndpoint(ex, ey)
    n = ey
    interior = kpath.interior
    a = [x for x, _ in interior]
    b = [y for _, y in interior]
    present = set(a)
    c = [v for v in range(1, n + 1) if v not in present]
    # interior coordinates of a validated path already satisfy merge_tagged's
    # preconditions, so the shared core is used without revalidation
    _, tags = _merge_core(a, b, c)
    return DelannoyPath("".join(TAG_TO_LETTER[t] for t in tags))


def _require_increasing(seq: list[int], name: str, strict: bool) -> None:
    for i in range(1, len(seq)):
        if seq[i] < seq[i - 1] or (strict and seq[i] == seq[i - 1]):
            kind = "strictly" if strict else "weakly"
            raise LatticeError(f"{name} must be {kind} increasing")
