"""Segments, multisegments and the Moeglin-Waldspurger involution.

Exponents are half-integers stored as doubled integers, so ``[-3/2, 3/2]``
is held as ``(-3, 3)``. Everything here is exact and immutable.

Examples:
    >>> alpha = Multisegment.of([(-1, 1), (0, 0)])
    >>> str(mw_dual(alpha))
    '{[1], [0], [0], [-1]}'
    >>> stats(alpha)
    MultisegmentStats(L=3, n=2, c=1)
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Union

from .errors import MultiCosetSupport, SupportMismatch

Number = Union[int, Fraction, str, "HalfInt"]


@dataclass(frozen=True, order=True, slots=True)
class HalfInt:
    """An exact half-integer ``twice_value / 2``."""

    twice_value: int

    @classmethod
    def of(cls, value: Number) -> HalfInt:
        """Coerce an int, a Fraction, a string like ``"3/2"`` or a HalfInt."""
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, bool):
            raise TypeError("booleans are not exponents")
        if isinstance(value, int):
            return cls(2 * value)
        frac = Fraction(value)
        doubled = 2 * frac
        if doubled.denominator != 1:
            raise ValueError(f"{value!r} is not a half-integer")
        return cls(int(doubled))

    def is_integer(self) -> bool:
        return self.twice_value % 2 == 0

    def to_fraction(self) -> Fraction:
        return Fraction(self.twice_value, 2)

    def __add__(self, other: int | HalfInt) -> HalfInt:
        if isinstance(other, HalfInt):
            return HalfInt(self.twice_value + other.twice_value)
        if isinstance(other, int):
            return HalfInt(self.twice_value + 2 * other)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other: int | HalfInt) -> HalfInt:
        if isinstance(other, HalfInt):
            return HalfInt(self.twice_value - other.twice_value)
        if isinstance(other, int):
            return HalfInt(self.twice_value - 2 * other)
        return NotImplemented

    def __neg__(self) -> HalfInt:
        return HalfInt(-self.twice_value)

    def __str__(self) -> str:
        if self.twice_value % 2 == 0:
            return str(self.twice_value // 2)
        return f"{self.twice_value}/2"

    def __repr__(self) -> str:
        return f"HalfInt({self})"


def format_twice(t: int) -> str:
    return str(HalfInt(t))


@dataclass(frozen=True, slots=True)
class Segment:
    """The segment ``[b, e]``, the string of exponents b, b+1, ..., e."""

    b: HalfInt
    e: HalfInt

    def __post_init__(self) -> None:
        b = HalfInt.of(self.b)
        e = HalfInt.of(self.e)
        diff = e.twice_value - b.twice_value
        if diff < 0 or diff % 2:
            raise ValueError(f"[{b}, {e}] is not a segment: e - b must be a nonnegative integer")
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "e", e)

    @classmethod
    def from_twice(cls, b2: int, e2: int) -> Segment:
        return cls(HalfInt(b2), HalfInt(e2))

    @property
    def length(self) -> int:
        return (self.e.twice_value - self.b.twice_value) // 2 + 1

    @property
    def twice(self) -> tuple[int, int]:
        return self.b.twice_value, self.e.twice_value

    def values(self) -> list[HalfInt]:
        """Exponents in the segment, ascending."""
        return [HalfInt(t) for t in range(self.b.twice_value, self.e.twice_value + 1, 2)]

    def sort_key(self) -> tuple[int, int]:
        # canonical order: descending base, then descending end
        return -self.b.twice_value, -self.e.twice_value

    def __str__(self) -> str:
        if self.b == self.e:
            return f"[{self.b}]"
        return f"[{self.b}, {self.e}]"

    def __repr__(self) -> str:
        return f"Segment{self}"


def _check_coset(segments: Iterable[Segment]) -> None:
    parity = None
    for seg in segments:
        p = seg.b.twice_value % 2
        if parity is None:
            parity = p
        elif p != parity:
            raise MultiCosetSupport("segment endpoints lie in more than one integer coset")


@dataclass(frozen=True, slots=True)
class Multisegment:
    """A multiset of segments, stored in canonical order."""

    segments: tuple[Segment, ...] = ()

    def __post_init__(self) -> None:
        segs = tuple(sorted(self.segments, key=Segment.sort_key))
        _check_coset(segs)
        object.__setattr__(self, "segments", segs)

    @classmethod
    def of(cls, pairs: Iterable[tuple[Number, Number] | Segment]) -> Multisegment:
        """Build from ``(b, e)`` pairs in ordinary (not doubled) units."""
        segs = [p if isinstance(p, Segment) else Segment(HalfInt.of(p[0]), HalfInt.of(p[1])) for p in pairs]
        return cls(tuple(segs))

    @classmethod
    def from_twice(cls, pairs: Iterable[tuple[int, int]]) -> Multisegment:
        return cls(tuple(Segment.from_twice(b2, e2) for b2, e2 in pairs))

    def twice(self) -> tuple[tuple[int, int], ...]:
        return tuple(s.twice for s in self.segments)

    def support(self) -> Counter:
        """Multiset of exponents (as doubled integers) covered by the segments."""
        counts: Counter = Counter()
        for seg in self.segments:
            b2, e2 = seg.twice
            for t in range(b2, e2 + 1, 2):
                counts[t] += 1
        return counts

    def to_json(self) -> dict:
        return {"segments": [list(s.twice) for s in self.segments]}

    @classmethod
    def from_json(cls, payload: dict) -> Multisegment:
        try:
            pairs = payload["segments"]
        except (KeyError, TypeError) as exc:
            raise ValueError('multisegment JSON must look like {"segments": [[2b, 2e], ...]}') from exc
        return cls.from_twice((int(b2), int(e2)) for b2, e2 in pairs)

    def __iter__(self) -> Iterator[Segment]:
        return iter(self.segments)

    def __len__(self) -> int:
        return len(self.segments)

    def __str__(self) -> str:
        return "{" + ", ".join(str(s) for s in self.segments) + "}"


@dataclass(frozen=True)
class MultisegmentStats:
    L: int
    n: int
    c: int


def precedes(d1: Segment, d2: Segment) -> bool:
    """True iff ``d1`` precedes ``d2``: b1 < b2, e1 < e2 and b2 <= e1 + 1."""
    b1, e1 = d1.twice
    b2, e2 = d2.twice
    return b1 < b2 and e1 < e2 and b2 <= e1 + 2


def stats(a: Multisegment) -> MultisegmentStats:
    """Longest length, segment count and number of connected pieces of the union."""
    if not a.segments:
        return MultisegmentStats(0, 0, 0)
    values = sorted(a.support())
    pieces = 1 + sum(1 for x, y in zip(values, values[1:]) if y - x > 2)
    return MultisegmentStats(max(s.length for s in a), len(a), pieces)


def _combine(s1: tuple[int, int], s2: tuple[int, int]) -> tuple[tuple[int, int], ...] | None:
    """Result of the elementary operation on a pair, or None if it changes nothing."""
    (b1, e1), (b2, e2) = s1, s2
    lo, hi = max(b1, b2), min(e1, e2)
    union = (min(b1, b2), max(e1, e2))
    if lo <= hi:
        if union == s1 or union == s2:
            return None
        return union, (lo, hi)
    if lo == hi + 2:
        return (union,)
    return None


def elementary_successors(a: Multisegment) -> set[Multisegment]:
    """All multisegments reachable from ``a`` by one elementary operation."""
    segs = a.twice()
    out = set()
    for i in range(len(segs)):
        for j in range(i + 1, len(segs)):
            replaced = _combine(segs[i], segs[j])
            if replaced is None:
                continue
            rest = segs[:i] + segs[i + 1 : j] + segs[j + 1 :]
            out.add(Multisegment.from_twice(rest + replaced))
    return out


@lru_cache(maxsize=4096)
def up_set(a: Multisegment) -> frozenset[Multisegment]:
    """Every multisegment ``b`` with ``a <= b`` (breadth-first closure)."""
    seen = {a}
    queue = deque([a])
    while queue:
        cur = queue.popleft()
        for nxt in elementary_successors(cur):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return frozenset(seen)


def leq_oracle(a: Multisegment, b: Multisegment) -> bool:
    """Brute-force order test: can ``b`` be formed from ``a`` by elementary operations?

    Raises:
        SupportMismatch: if ``a`` and ``b`` cover different exponent multisets.
    """
    if a.support() != b.support():
        raise SupportMismatch(f"{a} and {b} have different supports")
    if a == b:
        return True
    if len(b) > len(a):
        return False
    return b in up_set(a)


def _extract_top(segs: list[list[int]]) -> tuple[int, int]:
    """Find M(alpha), shorten the chosen segments in place, return M in doubled units."""
    top = max(e for _, e in segs)
    current = max((k for k, (_, e) in enumerate(segs) if e == top), key=lambda k: segs[k][0])
    chosen = [current]
    m = top
    while True:
        cb, ce = segs[current]
        best = None
        for k, (b, e) in enumerate(segs):
            # repetitions are interchangeable, any maximal one will do
            if e == m - 2 and b < cb and e < ce and cb <= e + 2:
                if best is None or b > segs[best][0]:
                    best = k
        if best is None:
            break
        chosen.append(best)
        current = best
        m -= 2
    for k in chosen:
        segs[k][1] -= 2
    return m, top


def mw_dual(a: Multisegment) -> Multisegment:
    """Zelevinsky involution of ``a`` via the Moeglin-Waldspurger algorithm."""
    segs = [list(s) for s in a.twice()]
    dual = []
    while segs:
        dual.append(_extract_top(segs))
        segs = [s for s in segs if s[0] <= s[1]]
    return Multisegment.from_twice(dual)


def is_simple(a: Multisegment) -> bool:
    """True for staircases ``{[b, e], [b+1, e+1], ..., [b+n-1, e+n-1]}``, n >= 1."""
    if not a.segments:
        return False
    segs = sorted(a.twice())
    b0, e0 = segs[0]
    return all(s == (b0 + 2 * k, e0 + 2 * k) for k, s in enumerate(segs))


def simple_parameters(a: Multisegment) -> tuple[HalfInt, HalfInt, int]:
    """``(b, e, n)`` of a simple multisegment."""
    if not is_simple(a):
        raise ValueError(f"{a} is not simple")
    low = a.segments[-1]
    return low.b, low.e, len(a)


def simple_dual_formula(b: Number, e: Number, n: int) -> Multisegment:
    """Closed-form dual of the staircase with lowest segment ``[b, e]`` and ``n`` steps."""
    b, e = HalfInt.of(b), HalfInt.of(e)
    if n < 1:
        raise ValueError("n must be at least 1")
    span = Segment(b, e).length - 1
    return Multisegment(tuple(Segment(e - k, e + (n - k - 1)) for k in range(span + 1)))
