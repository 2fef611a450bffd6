"""Geometric pre-packets and the verifiers built on them.

The pre-packet of a base orbit ``C0`` is the set of orbits ``C`` with
``C0 <= C`` and ``dual(C0) <= dual(C)``. For the orbit of an irreducible
Arthur parameter this set is exactly the ABV-packet; for other bases it only
bounds it from above.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NotSimple
from .multisegments import Multisegment, is_simple, mw_dual, up_set
from .parameters import ArthurParameter, hyper_unramify, simple_arthur_multisegment
from .triangles import (
    RankTriangle,
    enumerate_orbits,
    leq_triangle,
    multiseg_to_triangle,
    triangle_dual,
    triangle_to_multiseg,
    require_valid,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class PrePacket:
    base_orbit: RankTriangle
    members: tuple[RankTriangle, ...]

    @property
    def is_singleton(self) -> bool:
        return self.members == (self.base_orbit,)

    def to_json(self) -> dict:
        return {
            "base": self.base_orbit.to_json(),
            "members": [t.to_json() for t in self.members],
            "singleton": self.is_singleton,
            "multisegments": [triangle_to_multiseg(t).to_json() for t in self.members],
        }


def _dual_dominates(dual_base: RankTriangle, candidates: Sequence[RankTriangle]) -> list[bool]:
    return [leq_triangle(dual_base, triangle_dual(c)) for c in candidates]


def _chunks(items: Sequence, parts: int) -> list[Sequence]:
    size = max(1, -(-len(items) // parts))
    return [items[i : i + size] for i in range(0, len(items), size)]


def pre_packet(
    base: RankTriangle,
    orbits: Iterable[RankTriangle] | None = None,
    jobs: int = 1,
) -> PrePacket:
    """Orbits above ``base`` whose duals lie above the dual of ``base``.

    Args:
        base: a valid rank triangle.
        orbits: the orbit list to filter; by default only the orbits above
            ``base`` are enumerated, which yields the same members.
        jobs: worker processes for the dual filter. Output does not depend on it.
    """
    require_valid(base)
    if orbits is None:
        candidates = enumerate_orbits(base.support, lower=base)
    else:
        candidates = [c for c in orbits if leq_triangle(base, c)]
    dual_base = triangle_dual(base)
    if jobs > 1 and len(candidates) > 64:
        chunks = _chunks(candidates, jobs)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            flags = [f for part in pool.map(_dual_dominates, [dual_base] * len(chunks), chunks) for f in part]
    else:
        flags = _dual_dominates(dual_base, candidates)
    members = tuple(c for c, ok in zip(candidates, flags) if ok)
    log.debug("pre-packet: %d candidates above base, %d members", len(candidates), len(members))
    return PrePacket(base, members)


def main_lemma_counterexamples(a: Multisegment) -> list[Multisegment]:
    """Multisegments ``b != a`` with ``a <= b`` and ``dual(a) <= dual(b)``."""
    if not is_simple(a):
        raise NotSimple(f"{a} is not a simple multisegment")
    above_dual = up_set(mw_dual(a))
    return sorted(
        (b for b in up_set(a) if b != a and mw_dual(b) in above_dual),
        key=lambda m: m.twice(),
    )


def verify_main_lemma(a: Multisegment) -> bool:
    """A simple ``a`` is the only ``b`` with ``a <= b`` and ``dual(a) <= dual(b)``."""
    return not main_lemma_counterexamples(a)


def arthur_orbit(d: int, a: int) -> RankTriangle:
    """Rank triangle of the orbit attached to ``Sym^d (x) Sym^a``."""
    return multiseg_to_triangle(simple_arthur_multisegment(d, a))


def verify_theorem(d: int, a: int, jobs: int = 1) -> bool:
    """The pre-packet of the simple Arthur parameter ``(d, a)`` is a singleton."""
    return pre_packet(arthur_orbit(d, a), jobs=jobs).is_singleton


def irreducible_pre_packet(p: ArthurParameter, jobs: int = 1) -> PrePacket:
    """Pre-packet of an irreducible parameter, computed on its unramified reduction."""
    _, nr = hyper_unramify(p)
    return pre_packet(arthur_orbit(nr.d, nr.a), jobs=jobs)


def verify_theorem_irreducible(p: ArthurParameter, jobs: int = 1) -> bool:
    """Singleton check for ``rho (x) Sym^d (x) Sym^a``, plus independence from ``dim rho``."""
    packet = irreducible_pre_packet(p, jobs=jobs)
    if p.m != 1:
        reference = irreducible_pre_packet(ArthurParameter(1, p.d, p.a), jobs=jobs)
        if packet != reference:
            return False
    return packet.is_singleton


__all__ = [
    "PrePacket",
    "arthur_orbit",
    "irreducible_pre_packet",
    "main_lemma_counterexamples",
    "pre_packet",
    "verify_main_lemma",
    "verify_theorem",
    "verify_theorem_irreducible",
]
