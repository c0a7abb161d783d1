"""Unit-interval MV-algebras of Specker groups.

The algebra of a group is its unit interval [0, u] with truncated addition
x (+) y = (x + y) /\\ u and complement u - x.  Elements reuse group-element
storage; the full element set is only materialized inside verification
sweeps, whose cost grows as the product of (unit value + 1) over the points.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import SchemaError
from .sgroup import GroupElement, LHom, SpeckerGroup, apply_lhom, leq, meet

__all__ = [
    "SpeckerMV",
    "FiberComponent",
    "MVHom",
    "unit_interval_algebra",
    "unit_interval_hom",
    "mv_zero",
    "mv_top",
    "mv_plus",
    "mv_neg",
    "elements",
    "cardinality",
    "contains",
    "verify_mv_axioms",
    "fiber_decomposition",
]


@dataclass(frozen=True)
class SpeckerMV:
    """The MV-algebra carried by the unit interval of a Specker group."""

    group: SpeckerGroup


@dataclass(frozen=True)
class FiberComponent:
    """A maximal set of base points sharing one unit value."""

    points: tuple[str, ...]
    n: int


def unit_interval_algebra(group: SpeckerGroup) -> SpeckerMV:
    return SpeckerMV(group)


def contains(algebra: SpeckerMV, x: GroupElement) -> bool:
    return x.group == algebra.group and leq(algebra.group.zero(), x) and leq(x, algebra.group.unit())


def _require_member(x: GroupElement) -> SpeckerMV:
    algebra = SpeckerMV(x.group)
    if not contains(algebra, x):
        raise SchemaError(f"{x.values} is outside the unit interval {x.group.base.mults}")
    return algebra


def mv_zero(algebra: SpeckerMV) -> GroupElement:
    return algebra.group.zero()


def mv_top(algebra: SpeckerMV) -> GroupElement:
    return algebra.group.unit()


def mv_plus(x: GroupElement, y: GroupElement) -> GroupElement:
    """Truncated addition (x + y) /\\ u."""
    _require_member(x)
    _require_member(y)
    if x.group != y.group:
        raise SchemaError("operands belong to different algebras")
    return meet(x + y, x.group.unit())


def mv_neg(x: GroupElement) -> GroupElement:
    """Complement u - x."""
    _require_member(x)
    return x.group.unit() - x


def elements(algebra: SpeckerMV) -> Iterator[GroupElement]:
    """All unit-interval elements, in lexicographic value order."""
    ranges = [range(u + 1) for u in algebra.group.base.mults]
    for vals in itertools.product(*ranges):
        yield GroupElement(algebra.group, vals)


def cardinality(algebra: SpeckerMV) -> int:
    return math.prod(u + 1 for u in algebra.group.base.mults)


@dataclass(frozen=True)
class MVHom:
    """Restriction of a unital l-homomorphism to unit intervals.

    Well defined because such homomorphisms are order preserving and send
    unit to unit.
    """

    dom: SpeckerMV
    cod: SpeckerMV
    lhom: LHom

    def __call__(self, x: GroupElement) -> GroupElement:
        if not contains(self.dom, x):
            raise SchemaError("argument is outside the domain algebra")
        return apply_lhom(self.lhom, x)


def unit_interval_hom(h: LHom) -> MVHom:
    return MVHom(SpeckerMV(h.dom), SpeckerMV(h.cod), h)


def verify_mv_axioms(algebra: SpeckerMV) -> dict:
    """Exhaustively check the defining equations over all element tuples.

    Checks associativity of (+), the 0 unit law, absorption by the top,
    involution of negation, the characteristic exchange equation
    x (+) neg(x (+) neg y) = y (+) neg(y (+) neg x), and (derived)
    commutativity.  The cubic associativity sweep runs on integer index
    tables so that algebras of a few hundred elements stay fast.
    """
    elems = list(elements(algebra))
    n = len(elems)
    index = {e.values: i for i, e in enumerate(elems)}
    unit = algebra.group.unit()
    top = index[unit.values]
    zero = index[algebra.group.zero().values]

    plus = np.empty((n, n), dtype=np.int64)
    for i, x in enumerate(elems):
        for j, y in enumerate(elems):
            plus[i, j] = index[tuple(min(a + b, u) for a, b, u in zip(x.values, y.values, unit.values))]
    neg = np.array([index[tuple(u - a for a, u in zip(x.values, unit.values))] for x in elems])

    violations = []
    idx = np.arange(n)

    if not np.array_equal(plus[:, zero], idx):
        violations.append("x (+) 0 = x fails")
    if not np.all(plus[:, neg[zero]] == neg[zero]):
        violations.append("x (+) neg 0 = neg 0 fails")
    if not np.array_equal(neg[neg], idx):
        violations.append("neg neg x = x fails")
    if not np.array_equal(plus, plus.T):
        violations.append("commutativity fails")

    # exchange equation, over all pairs
    xy = plus[idx[:, None], neg[plus[idx[:, None], neg[None, :]]]]
    if not np.array_equal(xy, xy.T):
        bad = np.argwhere(xy != xy.T)
        i, j = map(int, bad[0])
        violations.append(
            f"exchange equation fails at x={elems[i].values} y={elems[j].values}"
        )

    # associativity, over all triples
    if n:
        left = plus[plus]                        # [x,y,z] -> (x+y)+z
        right = plus[idx[:, None, None], plus[None, :, :]]  # [x,y,z] -> x+(y+z)
        if not np.array_equal(left, right):
            bad = np.argwhere(left != right)
            i, j, k = map(int, bad[0])
            violations.append(
                "associativity fails at "
                f"x={elems[i].values} y={elems[j].values} z={elems[k].values}"
            )

    return {"cardinality": n, "violations": violations, "pass": not violations}


def fiber_decomposition(algebra: SpeckerMV) -> tuple[FiberComponent, ...]:
    """Group base points by unit value, components ordered by that value.

    The algebra is the product over its fibers of algebras of functions into
    a finite chain, so the component cardinalities (n+1)^|points| multiply
    to the total.
    """
    groups: dict[int, list[str]] = {}
    base = algebra.group.base
    for lab, u in zip(base.labels, base.mults):
        groups.setdefault(u, []).append(lab)
    return tuple(FiberComponent(tuple(pts), n) for n, pts in sorted(groups.items()))
