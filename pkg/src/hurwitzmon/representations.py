"""Finite representations of braid groups.

A :class:`Representation` stores the images of ``sigma_1 .. sigma_{d-1}``
and is checked against both braid-relation families on construction.
:func:`hurwitz_rep` builds the permutation representation of ``B_r`` on the
Hurwitz orbit of a tuple.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .braids import BraidWord
from .groups import (DEFAULT_CAP, ElementSet, Matrix2ModM, Permutation,
                     ResourceCapExceeded, _check_ambient, closure)


class BraidRelationError(ValueError):
    pass


@dataclass(frozen=True)
class Representation:
    strands: int
    images: tuple
    ambient: tuple

    def __call__(self, b: BraidWord):
        return apply_rep(self, b)

    def identity(self):
        return self.images[0].one()

    def image_group(self, cap: int = DEFAULT_CAP) -> ElementSet:
        return closure(self.images, cap=cap)


def make_representation(d: int, images: Sequence) -> Representation:
    if d < 2:
        raise ValueError(f"need at least 2 strands, got {d}")
    images = tuple(images)
    if len(images) != d - 1:
        raise ValueError(f"B_{d} needs {d - 1} generator images, got {len(images)}")
    amb = _check_ambient(images)
    for i in range(d - 1):
        for j in range(i + 2, d - 1):
            a, b = images[i], images[j]
            if a * b != b * a:
                raise BraidRelationError(
                    f"sigma_{i + 1} and sigma_{j + 1} images do not commute")
        if i + 1 < d - 1:
            a, b = images[i], images[i + 1]
            if a * b * a != b * a * b:
                raise BraidRelationError(
                    f"braid relation fails for sigma_{i + 1}, sigma_{i + 2}")
    return Representation(d, images, amb)


def sl2_mod_rep(m: int) -> Representation:
    """``B_3 -> SL(2, Z/m)``: sigma_1 -> [[1,0],[-1,1]], sigma_2 -> [[1,1],[0,1]]."""
    A = Matrix2ModM(1, 0, m - 1, 1, m)
    B = Matrix2ModM(1, 1, 0, 1, m)
    return make_representation(3, (A, B))


def sym_rep(d: int) -> Representation:
    """Natural projection ``B_d -> S_d``, sigma_i -> (i, i+1)."""
    gens = []
    for i in range(1, d):
        img = list(range(1, d + 1))
        img[i - 1], img[i] = i + 1, i
        gens.append(Permutation(tuple(img)))
    return make_representation(d, gens)


def apply_rep(rep: Representation, b: BraidWord):
    if b.strands != rep.strands:
        raise ValueError(f"braid on {b.strands} strands, representation of B_{rep.strands}")
    out = rep.identity()
    invs = {}
    for l in b.letters:
        if l > 0:
            out = out * rep.images[l - 1]
        else:
            if l not in invs:
                invs[l] = rep.images[-l - 1].inverse()
            out = out * invs[l]
    return out


def _canonical_class(elements: tuple, group: ElementSet) -> tuple:
    """Smallest simultaneous conjugate of ``elements`` by members of ``group``."""
    best = None
    for g in group.elements():
        gi = g.inverse()
        cand = tuple(gi * x * g for x in elements)
        k = tuple(x.key for x in cand)
        if best is None or k < best[0]:
            best = (k, cand)
    return best[1]


def _move(t: tuple, i: int) -> tuple:
    # sigma_i (1-based) on a tuple of plain elements
    g, h = t[i - 1], t[i]
    return t[:i - 1] + (h, h * g * h.inverse()) + t[i + 1:]


@dataclass
class HurwitzRepResult:
    orbit_size: int
    group_order: int
    orbit: list
    generators: list  # permutations of range(orbit_size) induced by sigma_i


def hurwitz_rep(elements: Sequence, quotient: bool = False, group: ElementSet | None = None,
                cap: int = DEFAULT_CAP) -> HurwitzRepResult:
    """Orbit of a tuple under the Hurwitz action and the induced group.

    With ``quotient=True`` tuples are taken up to simultaneous conjugation
    by ``group`` (default: the group generated by the entries).
    """
    t0 = tuple(e[1] if isinstance(e, tuple) else e for e in elements)
    r = len(t0)
    if r < 2:
        raise ValueError("the Hurwitz action needs tuples of length >= 2")
    _check_ambient(t0)
    if quotient:
        if group is None:
            group = closure(t0, cap=cap)
        norm = lambda t: _canonical_class(t, group)
    else:
        norm = lambda t: t
    start = norm(t0)
    index = {start: 0}
    orbit = [start]
    pos = 0
    while pos < len(orbit):
        t = orbit[pos]
        pos += 1
        for i in range(1, r):
            u = norm(_move(t, i))
            if u not in index:
                index[u] = len(orbit)
                orbit.append(u)
                if len(orbit) > cap:
                    raise ResourceCapExceeded("Hurwitz orbit", cap)
    perms = []
    for i in range(1, r):
        perms.append(Permutation(tuple(index[norm(_move(t, i))] + 1 for t in orbit)))
    order = len(closure(perms, cap=cap))
    return HurwitzRepResult(len(orbit), order, orbit, perms)
