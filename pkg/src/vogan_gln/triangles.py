"""Rank triangles: the orbit-side coordinate.

An orbit of ``H`` on ``V = Hom(E_k, E_{k-1}) x ... x Hom(E_1, E_0)`` is pinned
down by the ranks ``r[i, j]`` of the composites ``E_i -> E_j`` for ``j < i``.
Index ``i`` runs over the exponent chain ``e_0 > e_1 > ... > e_k`` so that the
segment covering indices ``j..i`` is ``[e_i, e_j]``.

Ranks are stored depth-major: ``ranks[depth - 1]`` lists ``r[i, i - depth]``
for ``i = k, k-1, ..., depth``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import InvalidTriangle, SegmentOutsideSupport, SupportMismatch
from .multisegments import HalfInt, Multisegment, Segment, mw_dual


@dataclass(frozen=True)
class Support:
    """Consecutive descending exponents with their multiplicities."""

    exponents: tuple[HalfInt, ...]
    mults: tuple[int, ...]

    def __post_init__(self) -> None:
        exps = tuple(HalfInt.of(x) for x in self.exponents)
        mults = tuple(int(m) for m in self.mults)
        if len(exps) != len(mults):
            raise ValueError("exponents and mults must have the same length")
        if any(m < 0 for m in mults):
            raise ValueError("multiplicities must be nonnegative")
        for x, y in zip(exps, exps[1:]):
            if x.twice_value - y.twice_value != 2:
                raise ValueError("exponents must descend in steps of 1")
        object.__setattr__(self, "exponents", exps)
        object.__setattr__(self, "mults", mults)

    @classmethod
    def from_top(cls, top: HalfInt | int | str, mults: Sequence[int]) -> Support:
        top = HalfInt.of(top)
        return cls(tuple(top - t for t in range(len(mults))), tuple(mults))

    @classmethod
    def of_multisegment(cls, a: Multisegment) -> Support:
        counts = a.support()
        if not counts:
            return cls((), ())
        hi, lo = max(counts), min(counts)
        twice = range(hi, lo - 1, -2)
        return cls(tuple(HalfInt(t) for t in twice), tuple(counts.get(t, 0) for t in twice))

    @property
    def n(self) -> int:
        return sum(self.mults)

    @property
    def k(self) -> int:
        """Index of the last exponent (``len - 1``)."""
        return len(self.exponents) - 1

    def index_of(self, x: HalfInt) -> int:
        if not self.exponents:
            raise SegmentOutsideSupport(f"{x} is not an exponent of the empty support")
        t2 = self.exponents[0].twice_value - x.twice_value
        if t2 % 2 or not 0 <= t2 // 2 <= self.k:
            raise SegmentOutsideSupport(f"{x} is not an exponent of this support")
        return t2 // 2

    def exponent_counts(self) -> dict[int, int]:
        return {x.twice_value: m for x, m in zip(self.exponents, self.mults) if m}

    def to_json(self) -> dict:
        return {"exponents2": [x.twice_value for x in self.exponents], "mults": list(self.mults)}

    @classmethod
    def from_json(cls, payload: dict) -> Support:
        return cls(tuple(HalfInt(int(t)) for t in payload["exponents2"]), tuple(payload["mults"]))

    def __str__(self) -> str:
        return "exponents (" + ", ".join(map(str, self.exponents)) + "), mults (" + ", ".join(map(str, self.mults)) + ")"


@dataclass(frozen=True)
class RankTriangle:
    """Exponents, multiplicities and depth-major ranks of an orbit."""

    support: Support
    ranks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        k = self.support.k
        ranks = tuple(tuple(int(r) for r in row) for row in self.ranks)
        expected = [k - depth + 1 for depth in range(1, k + 1)]
        if [len(row) for row in ranks] != expected:
            raise InvalidTriangle(f"rank rows must have lengths {expected}")
        object.__setattr__(self, "ranks", ranks)

    @classmethod
    def from_dict(cls, support: Support, r: dict[tuple[int, int], int]) -> RankTriangle:
        k = support.k
        rows = tuple(tuple(r.get((i, i - depth), 0) for i in range(k, depth - 1, -1)) for depth in range(1, k + 1))
        return cls(support, rows)

    @property
    def exponents(self) -> tuple[HalfInt, ...]:
        return self.support.exponents

    @property
    def mults(self) -> tuple[int, ...]:
        return self.support.mults

    def rank(self, i: int, j: int) -> int:
        """``r[i, j]``; the diagonal ``r[i, i]`` is the multiplicity ``m_i``."""
        if i == j:
            return self.support.mults[i]
        if not 0 <= j < i <= self.support.k:
            raise IndexError((i, j))
        return self.ranks[i - j - 1][self.support.k - i]

    def as_dict(self) -> dict[tuple[int, int], int]:
        k = self.support.k
        return {(i, i - d): v for d, row in enumerate(self.ranks, 1) for i, v in zip(range(k, d - 1, -1), row)}

    def flat(self) -> tuple[int, ...]:
        return tuple(v for row in self.ranks for v in row)

    def to_json(self) -> dict:
        return {
            "exponents2": [x.twice_value for x in self.exponents],
            "mults": list(self.mults),
            "ranks": [list(row) for row in self.ranks],
        }

    @classmethod
    def from_json(cls, payload: dict) -> RankTriangle:
        try:
            support = Support(tuple(HalfInt(int(t)) for t in payload["exponents2"]), tuple(payload["mults"]))
            return cls(support, tuple(tuple(row) for row in payload["ranks"]))
        except (KeyError, TypeError) as exc:
            raise ValueError('triangle JSON needs "exponents2", "mults" and "ranks"') from exc

    def __str__(self) -> str:
        """Rows in display order: lowest exponent on the left."""
        k = self.support.k
        lines = [
            " ".join(str(x) for x in reversed(self.exponents)),
            " ".join(str(m) for m in reversed(self.mults)),
        ]
        for depth in range(1, k + 1):
            lines.append(" " * depth + " ".join(str(self.rank(i, i - depth)) for i in range(k, depth - 1, -1)))
        return "\n".join(lines)


def _frobenius_ok(r, i: int, j: int) -> bool:
    # r(i, s) + r(l, j) <= r(i, j) + r(l, s) for j <= s <= l <= i; s == l brings in m_s
    for s in range(j + 1, i):
        for l in range(s, i):
            if r(i, s) + r(l, j) > r(i, j) + r(l, s):
                return False
    return True


def validate(t: RankTriangle) -> bool:
    """Check the multiplicity bound, monotonicity and the Frobenius inequalities."""
    k = t.support.k
    r = t.rank
    for i in range(1, k + 1):
        for j in range(i - 1, -1, -1):
            v = r(i, j)
            if v < 0:
                return False
            if v > r(i, j + 1) or v > r(i - 1, j):
                return False
            if not _frobenius_ok(r, i, j):
                return False
    return True


def require_valid(t: RankTriangle) -> None:
    if not validate(t):
        raise InvalidTriangle("rank triangle violates the rank constraints")


def _segment_indices(d: Segment, s: Support) -> tuple[int, int]:
    j = s.index_of(d.e)
    i = s.index_of(d.b)
    return j, i


def triangle_of_segment(d: Segment, s: Support) -> RankTriangle:
    """Indicator triangle of a single segment on the exponent chain of ``s``."""
    j, i = _segment_indices(d, s)
    mults = tuple(1 if j <= t <= i else 0 for t in range(len(s.mults)))
    r = {(l, q): 1 for l in range(j + 1, i + 1) for q in range(j, l)}
    return RankTriangle.from_dict(Support(s.exponents, mults), r)


def multiseg_to_triangle(a: Multisegment, support: Support | None = None) -> RankTriangle:
    """Sum of the segment indicator triangles.

    Args:
        a: the multisegment.
        support: exponent chain to use. Defaults to the tightest chain holding
            ``a``; if given, ``a`` must cover exactly these multiplicities.
    """
    tight = Support.of_multisegment(a)
    if support is None:
        support = tight
    elif support.exponent_counts() != tight.exponent_counts():
        raise SupportMismatch(f"{a} does not have support {support}")
    r: dict[tuple[int, int], int] = {}
    for seg in a:
        j, i = _segment_indices(seg, support)
        for l in range(j + 1, i + 1):
            for q in range(j, l):
                r[l, q] = r.get((l, q), 0) + 1
    return RankTriangle.from_dict(support, r)


def triangle_to_multiseg(t: RankTriangle) -> Multisegment:
    """Peel off segments starting from the deepest nonzero rank.

    Among entries of maximal depth the one with largest ``i`` (leftmost in the
    drawing) goes first. Leftover multiplicities become singletons.
    """
    require_valid(t)
    k = t.support.k
    r = t.as_dict()
    mults = list(t.mults)
    exps = t.exponents
    out = []
    for depth in range(k, 0, -1):
        for i in range(k, depth - 1, -1):
            j = i - depth
            while r[i, j] > 0:
                out.append(Segment(exps[i], exps[j]))
                for l in range(j + 1, i + 1):
                    for q in range(j, l):
                        r[l, q] -= 1
                for q in range(j, i + 1):
                    mults[q] -= 1
    if any(v < 0 for v in r.values()) or any(m < 0 for m in mults):
        raise InvalidTriangle("rank triangle is not a sum of segment triangles")
    for x, m in zip(exps, mults):
        out.extend(Segment(x, x) for _ in range(m))
    return Multisegment(tuple(out))


def leq_triangle(t1: RankTriangle, t2: RankTriangle) -> bool:
    """Closure order: pointwise comparison of ranks."""
    if t1.support != t2.support:
        raise SupportMismatch("rank triangles live on different supports")
    return all(x <= y for x, y in zip(t1.flat(), t2.flat()))


def triangle_dual(t: RankTriangle) -> RankTriangle:
    """Orbit involution computed through the multisegment side."""
    return multiseg_to_triangle(mw_dual(triangle_to_multiseg(t)), t.support)


def _entry_order(k: int) -> list[tuple[int, int]]:
    return [(i, i - depth) for depth in range(1, k + 1) for i in range(k, depth - 1, -1)]


def iter_orbits(s: Support, lower: RankTriangle | None = None) -> Iterator[RankTriangle]:
    """Backtracking enumeration of valid triangles, optionally only those above ``lower``."""
    if lower is not None and lower.support != s:
        raise SupportMismatch("lower bound lives on a different support")
    k = s.k
    if k < 0:
        yield RankTriangle(s, ())
        return
    order = _entry_order(k)
    r: dict[tuple[int, int], int] = {(t, t): m for t, m in enumerate(s.mults)}
    floor = lower.as_dict() if lower is not None else {}

    def bounds(i: int, j: int) -> tuple[int, int]:
        hi = min(r[i, j + 1], r[i - 1, j])
        lo = floor.get((i, j), 0)
        for q in range(j + 1, i):
            for l in range(q, i):
                lo = max(lo, r[i, q] + r[l, j] - r[l, q])
        return lo, hi

    def fill(pos: int) -> Iterator[RankTriangle]:
        if pos == len(order):
            yield RankTriangle.from_dict(s, r)
            return
        i, j = order[pos]
        lo, hi = bounds(i, j)
        for v in range(lo, hi + 1):
            r[i, j] = v
            yield from fill(pos + 1)
        r.pop((i, j), None)

    yield from fill(0)


def enumerate_orbits(s: Support, lower: RankTriangle | None = None) -> list[RankTriangle]:
    """All valid rank triangles on ``s``, lexicographic in the depth-major rank vector."""
    return list(iter_orbits(s, lower))


def enumerate_multisegments(s: Support) -> list[Multisegment]:
    """All multisegments with support ``s``, built independently of rank triangles.

    Segments ending at the top remaining exponent are chosen first (as a
    non-increasing list of lengths), then the rest is decomposed recursively.
    """
    exps = s.exponents
    out: list[Multisegment] = []

    def length_choices(mults: list[int], start: int, count: int, cap: int) -> Iterator[tuple[int, ...]]:
        # non-increasing lengths, each <= cap, such that position start+p is used at most mults[start+p] times
        if count == 0:
            yield ()
            return
        for length in range(cap, 0, -1):
            if all(mults[start + p] >= 1 for p in range(length)):
                for p in range(length):
                    mults[start + p] -= 1
                for rest in length_choices(mults, start, count - 1, length):
                    yield (length,) + rest
                for p in range(length):
                    mults[start + p] += 1

    def recurse(mults: list[int], start: int, acc: list[Segment]) -> None:
        while start < len(mults) and mults[start] == 0:
            start += 1
        if start == len(mults):
            out.append(Multisegment(tuple(acc)))
            return
        count = mults[start]
        cap = 0
        while start + cap < len(mults) and mults[start + cap] > 0:
            cap += 1
        for lengths in length_choices(mults, start, count, cap):
            # mults currently has the chosen lengths consumed
            rest = mults[:]
            segs = [Segment(exps[start + length - 1], exps[start]) for length in lengths]
            recurse(rest, start, acc + segs)

    recurse(list(s.mults), 0, [])
    return out
