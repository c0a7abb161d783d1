"""Unital Specker l-groups in canonical function-group form.

A group is carried as the integer-vector group over a multispace, with the
multiplicity function as its distinguished unit.  Elements support pointwise
group and lattice operations; maximal ideals correspond to points, closed-set
ideals to subsets of points, and unital l-homomorphisms to nonnegative
integer matrices with a single positive entry per row.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

from .errors import DivisibilityError, SchemaError
from .ints import checked
from .mspace import (
    BmsMorphism,
    MultiSpace,
    space_from_dict,
    space_to_dict,
)

__all__ = [
    "SpeckerGroup",
    "GroupElement",
    "MaximalIdeal",
    "ClosedSetIdeal",
    "LHom",
    "meet",
    "join",
    "leq",
    "is_singular",
    "is_singular_definitional",
    "greatest_singular",
    "support",
    "maxspec",
    "residue",
    "residue_by_ideal_scan",
    "residues",
    "ideal_from_zeroset",
    "zeroset_from_ideal",
    "canonical_generator",
    "is_maximal",
    "is_maximal_by_criterion",
    "hyperarch_witness",
    "validate_lhom",
    "apply_lhom",
    "identity_lhom",
    "compose_lhom",
    "lhom_point_map",
    "is_isomorphism_lhom",
    "group_to_dict",
    "group_from_dict",
    "element_to_dict",
    "element_from_dict",
    "lhom_to_dict",
    "lhom_from_dict",
]


@dataclass(frozen=True)
class SpeckerGroup:
    """The group of integer vectors over a multispace, with unit = multiplicity."""

    base: MultiSpace

    def element(self, values: Iterable[int]) -> GroupElement:
        return GroupElement(self, tuple(values))

    def zero(self) -> GroupElement:
        return GroupElement(self, (0,) * len(self.base))

    def unit(self) -> GroupElement:
        return GroupElement(self, self.base.mults)

    def __repr__(self) -> str:
        return f"SpeckerGroup(unit={self.base.mults})"


@dataclass(frozen=True)
class GroupElement:
    """An integer vector indexed by the base points of its group."""

    group: SpeckerGroup
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.values) != len(self.group.base):
            raise SchemaError(
                f"element has {len(self.values)} values but the base has "
                f"{len(self.group.base)} points"
            )
        for v in self.values:
            checked(v, "element value")

    def value(self, label: str) -> int:
        return self.values[self.group.base.index(label)]

    def _same_group(self, other: GroupElement) -> None:
        if not isinstance(other, GroupElement):
            raise SchemaError(f"expected a group element, got {other!r}")
        if self.group != other.group:
            raise SchemaError("elements belong to different groups")

    def __add__(self, other: GroupElement) -> GroupElement:
        self._same_group(other)
        return GroupElement(
            self.group,
            tuple(checked(a + b, "sum") for a, b in zip(self.values, other.values)),
        )

    def __sub__(self, other: GroupElement) -> GroupElement:
        self._same_group(other)
        return GroupElement(
            self.group,
            tuple(checked(a - b, "difference") for a, b in zip(self.values, other.values)),
        )

    def __neg__(self) -> GroupElement:
        return GroupElement(self.group, tuple(-a for a in self.values))

    def __abs__(self) -> GroupElement:
        return GroupElement(self.group, tuple(abs(a) for a in self.values))

    def __mul__(self, k: int) -> GroupElement:
        checked(k, "scalar")
        return GroupElement(self.group, tuple(checked(k * a, "scalar product") for a in self.values))

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"GroupElement{self.values}"


def meet(a: GroupElement, b: GroupElement) -> GroupElement:
    a._same_group(b)
    return GroupElement(a.group, tuple(min(x, y) for x, y in zip(a.values, b.values)))


def join(a: GroupElement, b: GroupElement) -> GroupElement:
    a._same_group(b)
    return GroupElement(a.group, tuple(max(x, y) for x, y in zip(a.values, b.values)))


def leq(a: GroupElement, b: GroupElement) -> bool:
    """Pointwise order."""
    a._same_group(b)
    return all(x <= y for x, y in zip(a.values, b.values))


# -- singular elements --------------------------------------------------------

def is_singular(f: GroupElement) -> bool:
    """True iff every value is 0 or 1 (an indicator of a subset of points)."""
    return all(v in (0, 1) for v in f.values)


def is_singular_definitional(s: GroupElement) -> bool:
    """The order-theoretic singularity test, by exhaustive quantification.

    Checks s >= 0 and that a /\\ (s - a) = 0 for every element a with
    0 <= a <= s.  Exponential in the point count; intended for cross-checking
    ``is_singular`` on small groups.
    """
    if any(v < 0 for v in s.values):
        return False
    for combo in itertools.product(*(range(v + 1) for v in s.values)):
        if any(min(a, sv - a) != 0 for a, sv in zip(combo, s.values)):
            return False
    return True


def greatest_singular(group: SpeckerGroup) -> GroupElement:
    """The constant-1 vector, the top of the boolean algebra of singulars."""
    return GroupElement(group, (1,) * len(group.base))


def support(s: GroupElement) -> frozenset[str]:
    """The set of points where a singular element equals 1."""
    if not is_singular(s):
        raise SchemaError(f"support is only defined for singular elements, got {s.values}")
    return frozenset(l for l, v in zip(s.group.base.labels, s.values) if v == 1)


# -- ideals -------------------------------------------------------------------

@dataclass(frozen=True)
class MaximalIdeal:
    """The ideal of elements vanishing at one base point."""

    group: SpeckerGroup
    point: str

    def __post_init__(self) -> None:
        self.group.base.index(self.point)

    def contains(self, g: GroupElement) -> bool:
        if g.group != self.group:
            raise SchemaError("element belongs to a different group")
        return g.value(self.point) == 0

    def __repr__(self) -> str:
        return f"MaximalIdeal(at={self.point!r})"


@dataclass(frozen=True)
class ClosedSetIdeal:
    """The ideal of elements vanishing on a fixed set of base points.

    The empty zero set is the improper ideal (everything); the full point
    set is the zero ideal.
    """

    group: SpeckerGroup
    zeroset: frozenset[str]

    def __post_init__(self) -> None:
        for lab in self.zeroset:
            self.group.base.index(lab)

    def contains(self, g: GroupElement) -> bool:
        if g.group != self.group:
            raise SchemaError("element belongs to a different group")
        return all(g.value(l) == 0 for l in self.zeroset)


def maxspec(group: SpeckerGroup) -> tuple[MaximalIdeal, ...]:
    """All maximal ideals, in canonical base-point order."""
    return tuple(MaximalIdeal(group, l) for l in group.base.labels)


def residue(m: MaximalIdeal, g: GroupElement) -> int:
    """Image of g under the unique surjection onto the integers with kernel m.

    Computed by evaluation at the ideal's point; agrees with the membership
    scan of ``residue_by_ideal_scan``.
    """
    if g.group != m.group:
        raise SchemaError("element belongs to a different group")
    return g.value(m.point)


def residue_by_ideal_scan(m: MaximalIdeal, g: GroupElement) -> int:
    """The unique j with g - j * s in m, s the greatest singular element.

    Scans j over [-M, M] with M = max|g| * max(unit); a sound finite bound.
    """
    if g.group != m.group:
        raise SchemaError("element belongs to a different group")
    s = greatest_singular(g.group)
    gmax = max((abs(v) for v in g.values), default=0)
    umax = max(g.group.base.mults, default=1)
    bound = gmax * umax
    hits = [j for j in range(-bound, bound + 1) if m.contains(g - j * s)]
    if len(hits) != 1:
        raise SchemaError(f"expected a unique residue, found {hits}")
    return hits[0]


def residues(g: GroupElement) -> dict[MaximalIdeal, int]:
    """The residue of g at every maximal ideal (canonical order).

    The residue is 0 exactly at the ideals containing g.
    """
    return {m: residue(m, g) for m in maxspec(g.group)}


def ideal_from_zeroset(group: SpeckerGroup, zeroset: Iterable[str]) -> ClosedSetIdeal:
    return ClosedSetIdeal(group, frozenset(zeroset))


def zeroset_from_ideal(group: SpeckerGroup, generators: Sequence[GroupElement]) -> ClosedSetIdeal:
    """The ideal generated by the given elements, as its common zero set.

    With no generators this is the zero ideal (all points vanish).
    """
    zero = set(group.base.labels)
    for g in generators:
        if g.group != group:
            raise SchemaError("generator belongs to a different group")
        zero &= {l for l in group.base.labels if g.value(l) == 0}
    return ClosedSetIdeal(group, frozenset(zero))


def canonical_generator(ideal: ClosedSetIdeal) -> GroupElement:
    """The indicator of the complement of the zero set generates the ideal."""
    return GroupElement(
        ideal.group,
        tuple(0 if l in ideal.zeroset else 1 for l in ideal.group.base.labels),
    )


def is_maximal(ideal: ClosedSetIdeal) -> bool:
    """True iff the zero set is a singleton."""
    return len(ideal.zeroset) == 1


def is_maximal_by_criterion(
    ideal: ClosedSetIdeal, candidates: Optional[Iterable[GroupElement]] = None
) -> bool:
    """Elementary maximality test: the ideal is proper and every element
    outside it pushes the unit into the ideal after scaling.

    For each candidate a not in the ideal, searches n in [0, max(unit)] with
    (u - n*|a|) \\/ 0 in the ideal.  By default quantifies a over all
    elements with values in [-1, 1] together with the unit, which is enough
    to separate singletons from larger zero sets at desk scale.
    """
    group = ideal.group
    u = group.unit()
    if ideal.contains(u):
        return False
    if candidates is None:
        boxes = itertools.product(*([(-1, 0, 1)] * len(group.base)))
        candidates = [GroupElement(group, vals) for vals in boxes] + [u]
    zero = group.zero()
    nmax = max(group.base.mults, default=0)
    for a in candidates:
        if ideal.contains(a):
            continue
        ok = any(
            ideal.contains(join(u - n * abs(a), zero)) for n in range(nmax + 1)
        )
        if not ok:
            return False
    return True


# -- hyperarchimedean witness -------------------------------------------------

def hyperarch_witness(f: GroupElement, g: GroupElement) -> int:
    """Least n with n*f /\\ g = (n+1)*f /\\ g, for nonnegative f and g.

    Always exists and is at most the largest value of g.
    """
    f._same_group(g)
    if any(v < 0 for v in f.values) or any(v < 0 for v in g.values):
        raise SchemaError("hyperarch_witness requires nonnegative elements")
    n = 0
    while meet(n * f, g) != meet((n + 1) * f, g):
        n += 1
    return n


# -- unital l-homomorphisms ---------------------------------------------------

@dataclass(frozen=True)
class LHom:
    """A unital l-homomorphism as a nonnegative integer matrix.

    Rows are indexed by the codomain's base points, columns by the domain's.
    Every row carries exactly one positive entry k at some column v, with
    k * unit_dom(v) = unit_cod(row point); applying the matrix to the domain
    unit therefore yields the codomain unit.
    """

    dom: SpeckerGroup
    cod: SpeckerGroup
    matrix: tuple[tuple[int, ...], ...]
    point_map: tuple[tuple[str, int], ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        nrows, ncols = len(self.cod.base), len(self.dom.base)
        if len(self.matrix) != nrows:
            raise SchemaError(f"matrix has {len(self.matrix)} rows, expected {nrows}")
        pm = []
        for r, row in enumerate(self.matrix):
            if len(row) != ncols:
                raise SchemaError(f"row {r} has {len(row)} entries, expected {ncols}")
            positives = [(c, k) for c, k in enumerate(row) if k != 0]
            if any(k < 0 for _, k in positives):
                raise SchemaError(f"row {r} has a negative entry")
            if len(positives) != 1:
                raise SchemaError(
                    f"row {r} has {len(positives)} positive entries, expected exactly 1"
                )
            c, k = positives[0]
            uw = self.cod.base.mults[r]
            uv = self.dom.base.mults[c]
            if k * uv != uw:
                raise DivisibilityError(
                    f"row {r}: entry {k} at column {c} gives {k}*{uv} != {uw}, "
                    "so the unit is not preserved"
                )
            pm.append((self.dom.base.labels[c], k))
        object.__setattr__(self, "point_map", tuple(pm))

    def __repr__(self) -> str:
        return f"LHom({len(self.cod.base)}x{len(self.dom.base)})"


def validate_lhom(
    matrix: Sequence[Sequence[int]], dom: SpeckerGroup, cod: SpeckerGroup
) -> LHom:
    """Check the row-shape, positivity and unit-preservation invariants."""
    return LHom(dom, cod, tuple(tuple(checked(v, "matrix entry") for v in row) for row in matrix))


def apply_lhom(h: LHom, f: GroupElement) -> GroupElement:
    """Matrix action; equals zeta * (f o gamma) for the derived point map."""
    if f.group != h.dom:
        raise SchemaError("element does not live in the homomorphism's domain")
    vals = tuple(
        checked(sum(k * v for k, v in zip(row, f.values)), "image value")
        for row in h.matrix
    )
    return GroupElement(h.cod, vals)


def identity_lhom(group: SpeckerGroup) -> LHom:
    n = len(group.base)
    return LHom(group, group, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))


def compose_lhom(first: LHom, second: LHom) -> LHom:
    """Diagrammatic composition: apply ``first``, then ``second``."""
    if first.cod != second.dom:
        raise SchemaError("cannot compose: codomain of first != domain of second")
    a, b = second.matrix, first.matrix
    ncols = len(first.dom.base)
    rows = []
    for arow in a:
        rows.append(tuple(
            sum(arow[i] * b[i][j] for i in range(len(b))) for j in range(ncols)
        ))
    return LHom(first.dom, second.cod, tuple(rows))


def lhom_point_map(h: LHom) -> dict[str, tuple[str, int]]:
    """Decode each codomain point's source point and multiplier from the rows."""
    return dict(zip(h.cod.base.labels, h.point_map))


def is_isomorphism_lhom(h: LHom) -> bool:
    """True iff the matrix is a unit-compatible permutation (all entries 1)."""
    if len(h.dom.base) != len(h.cod.base):
        return False
    cols = [c for row in h.matrix for c, k in enumerate(row) if k != 0]
    return len(set(cols)) == len(h.matrix) and all(
        k == 1 for row in h.matrix for k in row if k != 0
    )


def dual_bms_morphism(h: LHom) -> BmsMorphism:
    """The point map between base spaces recovered from the row structure.

    Sends each codomain base point to the column carrying its positive
    entry; the entry itself is the morphism's zeta.
    """
    pm = lhom_point_map(h)
    return BmsMorphism(h.cod.base, h.dom.base, tuple(pm[l][0] for l in h.cod.base.labels))


# -- JSON forms ---------------------------------------------------------------

def group_to_dict(group: SpeckerGroup) -> dict:
    return {"space": space_to_dict(group.base)}


def group_from_dict(data: object) -> SpeckerGroup:
    if not isinstance(data, dict) or "space" not in data:
        raise SchemaError("group JSON must be an object with a 'space' field")
    return SpeckerGroup(space_from_dict(data["space"]))


def element_to_dict(g: GroupElement) -> dict:
    return {"group": group_to_dict(g.group), "values": list(g.values)}


def element_from_dict(data: object) -> GroupElement:
    if not isinstance(data, dict) or not {"group", "values"} <= set(data):
        raise SchemaError("element JSON needs 'group' and 'values' fields")
    if not isinstance(data["values"], list):
        raise SchemaError("'values' must be an array of integers")
    return GroupElement(group_from_dict(data["group"]), tuple(data["values"]))


def lhom_to_dict(h: LHom) -> dict:
    return {
        "dom": group_to_dict(h.dom),
        "cod": group_to_dict(h.cod),
        "matrix": [list(row) for row in h.matrix],
    }


def lhom_from_dict(data: object) -> LHom:
    if not isinstance(data, dict) or not {"dom", "cod", "matrix"} <= set(data):
        raise SchemaError("lhom JSON needs 'dom', 'cod' and 'matrix' fields")
    mat = data["matrix"]
    if not isinstance(mat, list) or not all(isinstance(r, list) for r in mat):
        raise SchemaError("'matrix' must be an array of integer rows")
    return validate_lhom(mat, group_from_dict(data["dom"]), group_from_dict(data["cod"]))
