"""Arthur parameters of GL_n and the shape of their Vogan varieties.

Only the combinatorial shadow of a parameter is kept: ``rho`` enters through
its dimension ``m`` and a display label.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Literal

from .multisegments import HalfInt, Multisegment, Segment
from .triangles import Support


@dataclass(frozen=True)
class ArthurParameter:
    """``psi(w, x, y) = rho(w) (x) Sym^d(x) (x) Sym^a(y)`` with ``dim rho = m``."""

    m: int = 1
    d: int = 0
    a: int = 0
    rho_label: str = "1"

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError("m must be a positive integer")
        if self.d < 0 or self.a < 0:
            raise ValueError("d and a must be nonnegative")

    @property
    def n(self) -> int:
        return self.m * (self.d + 1) * (self.a + 1)

    @property
    def is_simple(self) -> bool:
        return self.m == 1

    def to_json(self) -> dict:
        return {"m": self.m, "d": self.d, "a": self.a, "rho": self.rho_label}

    @classmethod
    def from_json(cls, payload: dict) -> ArthurParameter:
        return cls(int(payload.get("m", 1)), int(payload["d"]), int(payload["a"]), str(payload.get("rho", "1")))


@dataclass(frozen=True)
class VoganShape:
    support: Support
    hom_dims: tuple[int, ...]
    dim_V: int
    h_factors: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "support": self.support.to_json(),
            "hom_dims": list(self.hom_dims),
            "dim_V": self.dim_V,
            "h_factors": list(self.h_factors),
        }


def infinitesimal_support(d: int, a: int) -> Support:
    """Exponents ``(a+d)/2 - t`` with multiplicity ``min(t, a, d, a+d-t) + 1``."""
    if d < 0 or a < 0:
        raise ValueError("d and a must be nonnegative")
    k = a + d
    return Support.from_top(HalfInt(k), [min(t, a, d, k - t) + 1 for t in range(k + 1)])


def vogan_shape(s: Support) -> VoganShape:
    """Dimensions of ``Hom(E_i, E_{i-1})`` and the ``GL_{m_i}`` factors of ``H``."""
    hom = tuple(s.mults[i] * s.mults[i - 1] for i in range(1, len(s.mults)))
    return VoganShape(s, hom, sum(hom), s.mults)


def simple_arthur_multisegment(d: int, a: int) -> Multisegment:
    """Staircase of ``a + 1`` segments of length ``d + 1`` centred at 0."""
    if d < 0 or a < 0:
        raise ValueError("d and a must be nonnegative")
    low = HalfInt(-(d + a))
    return Multisegment(tuple(Segment(low + t, low + (d + t)) for t in range(a + 1)))


def arthur_hat(p: ArthurParameter) -> ArthurParameter:
    """Swap the Deligne and Arthur ``SL_2`` factors."""
    return replace(p, d=p.a, a=p.d)


def hyper_unramify(p: ArthurParameter) -> tuple[int, ArthurParameter]:
    """Reduce to the unramified parameter on ``GL_{n/m}``; Vogan variety and ``H`` are unchanged."""
    return (p.d + 1) * (p.a + 1), ArthurParameter(1, p.d, p.a, "1")


@dataclass(frozen=True)
class TwistedMultisegment:
    """A multisegment whose segments are strings ``pi_rho(b), ..., pi_rho(e)``."""

    rho_label: str
    plain: Multisegment

    def __str__(self) -> str:
        r = self.rho_label

        def fmt(seg: Segment) -> str:
            if seg.b == seg.e:
                return f"[π_{r}({seg.b})]"
            return f"[π_{r}({seg.b}), π_{r}({seg.e})]"

        return "{" + ", ".join(fmt(s) for s in self.plain) + "}"


def translate_segments(
    a: Multisegment | TwistedMultisegment,
    rho_label: str,
    direction: Literal["to_nr", "from_nr"],
) -> Multisegment | TwistedMultisegment:
    """Move between rho-twisted segments and their unramified counterparts.

    ``from_nr`` tags a plain multisegment with ``rho_label``; ``to_nr`` drops
    the tag. Endpoints never change.
    """
    if direction == "from_nr":
        plain = a.plain if isinstance(a, TwistedMultisegment) else a
        return TwistedMultisegment(rho_label, plain)
    if direction == "to_nr":
        if isinstance(a, TwistedMultisegment):
            if a.rho_label != rho_label:
                raise ValueError(f"segments are twisted by {a.rho_label!r}, not {rho_label!r}")
            return a.plain
        return a
    raise ValueError(f"unknown direction {direction!r}")
