"""Exact counting, exhaustive enumeration, and uniform sampling.

Everything here is integer-exact: counts use arbitrary-precision integers
throughout (central Delannoy numbers outgrow 64 bits near n = 25), and the
sampler draws from exact counts rather than floating-point weights.

Enumeration orders are fixed so golden outputs stay stable:

* ``enumerate_delannoy(n)`` yields words in lexicographic order under
  D < E < N.
* ``enumerate_kimberling(i, j)`` is k-major: interior-vertex count
  ascending, then lexicographic by x-set, then by y-multiset.
"""

from __future__ import annotations

import math
import random
from itertools import combinations, combinations_with_replacement
from typing import Iterator

from .lattice_core import DelannoyPath, KimberlingPath


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k); 0 when k < 0 or k > n."""
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def count_delannoy_by_e(n: int, k: int) -> int:
    """Number of central paths to (n, n) with exactly k East steps.

    A path with k East steps is a linear arrangement of k Es, k Ns, and
    n-k Ds, so the count is the multinomial C(n+k; k, k, n-k), i.e.
    C(n, k) * C(n+k, k).
    """
    return binomial(n, k) * binomial(n + k, k)


def count_delannoy(n: int) -> int:
    """The central Delannoy number: total paths from (0,0) to (n,n)."""
    return sum(count_delannoy_by_e(n, k) for k in range(n + 1))


def count_kimberling_by_vertices(i: int, j: int, k: int) -> int:
    """Number of finite-nonnegative-slope paths to (i, j) with k interior vertices.

    Interior x-coordinates form a k-subset of {1, ..., i-1} and interior
    y-coordinates independently form a k-multiset over {0, ..., j}, giving
    C(i-1, k) * C(j+k, k).  The degenerate endpoint (0, 0) admits exactly
    the single-vertex path.
    """
    if i == 0:
        return 1 if (j == 0 and k == 0) else 0
    return binomial(i - 1, k) * binomial(j + k, k)


def count_kimberling(i: int, j: int) -> int:
    """Total finite-nonnegative-slope paths from (0,0) to (i, j)."""
    if i == 0:
        return 1 if j == 0 else 0
    return sum(count_kimberling_by_vertices(i, j, k) for k in range(i))


def schroder(n: int) -> int:
    """The n-th large Schroder number, by the three-term recurrence.

    r(0) = 1, r(1) = 2, (m+1) r(m) = 3(2m-1) r(m-1) - (m-2) r(m-2).
    Kept free of any path enumeration so it can serve as an independent
    oracle for subdiagonal counts.
    """
    if n < 0:
        raise ValueError(f"schroder requires n >= 0, got {n}")
    if n == 0:
        return 1
    prev, cur = 1, 2
    for m in range(2, n + 1):
        numerator = 3 * (2 * m - 1) * cur - (m - 2) * prev
        quotient, remainder = divmod(numerator, m + 1)
        assert remainder == 0, "Schroder recurrence must divide exactly"
        prev, cur = cur, quotient
    return cur


def enumerate_delannoy(n: int) -> Iterator[DelannoyPath]:
    """Yield every central path to (n, n) once, in word order under D < E < N.

    A prefix with counts (e, n', d) extends to some central word iff
    max(e, n') + d <= n; complete words are exactly the leaves of that
    prefix tree, so the DFS below visits each path once in lexicographic
    order with O(n) working memory.
    """
    if n < 0:
        raise ValueError(f"enumerate_delannoy requires n >= 0, got {n}")
    word: list[str] = []

    def rec(e: int, n_: int, d: int) -> Iterator[DelannoyPath]:
        if e == n_ and e + d == n:
            yield DelannoyPath("".join(word))
            return
        if max(e, n_) + d + 1 <= n:
            word.append("D")
            yield from rec(e, n_, d + 1)
            word.pop()
        if max(e + 1, n_) + d <= n:
            word.append("E")
            yield from rec(e + 1, n_, d)
            word.pop()
        if max(e, n_ + 1) + d <= n:
            word.append("N")
            yield from rec(e, n_ + 1, d)
            word.pop()

    return rec(0, 0, 0)


def enumerate_delannoy_by_e(n: int, k: int) -> Iterator[DelannoyPath]:
    """Yield the central paths to (n, n) with exactly k East steps, lexicographically.

    This is the k-slice of ``enumerate_delannoy(n)`` in the same relative
    order; the harness uses it to partition sweeps into independent units.
    """
    if not 0 <= k <= n:
        return
    word: list[str] = []

    def rec(d: int, e: int, n_: int) -> Iterator[DelannoyPath]:
        if d == 0 and e == 0 and n_ == 0:
            yield DelannoyPath("".join(word))
            return
        if d:
            word.append("D")
            yield from rec(d - 1, e, n_)
            word.pop()
        if e:
            word.append("E")
            yield from rec(d, e - 1, n_)
            word.pop()
        if n_:
            word.append("N")
            yield from rec(d, e, n_ - 1)
            word.pop()

    yield from rec(n - k, k, k)


def enumerate_kimberling_by_vertices(i: int, j: int, k: int) -> Iterator[KimberlingPath]:
    """Yield the paths to (i, j) with exactly k interior vertices.

    Order: lexicographic by the ascending x-set, then by the weakly
    increasing y-tuple.  The x-set and y-multiset choices are independent,
    which is exactly what makes the count C(i-1, k) * C(j+k, k).
    """
    if i == 0:
        if j == 0 and k == 0:
            yield KimberlingPath(((0, 0),))
        return
    if not 0 <= k <= i - 1:
        return
    end = (i, j)
    for xs in combinations(range(1, i), k):
        for ys in combinations_with_replacement(range(j + 1), k):
            yield KimberlingPath(((0, 0),) + tuple(zip(xs, ys)) + (end,))


def enumerate_kimberling(i: int, j: int) -> Iterator[KimberlingPath]:
    """Yield every path to (i, j) once: k ascending, then x-set, then y-multiset."""
    if i < 0 or j < 0:
        raise ValueError(f"enumerate_kimberling requires i, j >= 0, got ({i}, {j})")
    if i == 0:
        if j == 0:
            yield KimberlingPath(((0, 0),))
        return
    for k in range(i):
        yield from enumerate_kimberling_by_vertices(i, j, k)


def _multinomial(d: int, e: int, n_: int) -> int:
    """Arrangements of a multiset with d + e + n' letters of three kinds."""
    return math.comb(d + e + n_, d) * math.comb(e + n_, e)


def _sample_with_rng(n: int, rng: random.Random) -> DelannoyPath:
    # Draw k exactly: an integer below count_delannoy(n) falls in the k-th
    # block with probability count_delannoy_by_e(n, k) / count_delannoy(n).
    total = count_delannoy(n)
    draw = rng.randrange(total)
    k = 0
    acc = count_delannoy_by_e(n, 0)
    while draw >= acc:
        k += 1
        acc += count_delannoy_by_e(n, k)

    # Emit a uniform arrangement of {D^(n-k), E^k, N^k} one letter at a
    # time; each candidate letter is chosen with probability proportional
    # to the number of arrangements of the remaining letters.
    d, e, n_ = n - k, k, k
    letters: list[str] = []
    while d or e or n_:
        remaining = _multinomial(d, e, n_)
        r = rng.randrange(remaining)
        ways_d = _multinomial(d - 1, e, n_) if d else 0
        if r < ways_d:
            letters.append("D")
            d -= 1
            continue
        r -= ways_d
        ways_e = _multinomial(d, e - 1, n_) if e else 0
        if r < ways_e:
            letters.append("E")
            e -= 1
        else:
            letters.append("N")
            n_ -= 1
    return DelannoyPath("".join(letters))


def sample_delannoy(n: int, seed: int) -> DelannoyPath:
    """One exactly-uniform draw from the central paths to (n, n).

    Deterministic: the same seed always yields the same path.
    """
    return _sample_with_rng(n, random.Random(seed))


def sample_delannoy_stream(n: int, count: int, seed: int) -> Iterator[DelannoyPath]:
    """A reproducible stream of ``count`` independent uniform draws."""
    rng = random.Random(seed)
    for _ in range(count):
        yield _sample_with_rng(n, rng)
