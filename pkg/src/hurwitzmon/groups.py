"""Finite groups by brute force: permutations, 2x2 matrices mod m, closure.

Products compose left to right, ``(p * q)(i) = q(p(i))`` for permutations;
matrices multiply as usual. Groups are materialised as hash sets, which is
plenty for the sizes involved here (tens of thousands of elements).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

DEFAULT_CAP = 10**7


class ResourceCapExceeded(RuntimeError):
    """An enumeration grew past its configured size limit."""

    def __init__(self, what: str, cap: int):
        super().__init__(f"{what} exceeded the cap of {cap} elements")
        self.cap = cap


@dataclass(frozen=True, slots=True)
class Permutation:
    """Bijection of ``{1..n}`` stored as the tuple of images."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.images)}: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, text: str, degree: int) -> "Permutation":
        """Parse cycle notation such as ``"(1,2)(3,4)"`` or ``"()"``."""
        images = list(range(1, degree + 1))
        text = text.replace(" ", "")
        if not re.fullmatch(r"(\((\d+(,\d+)*)?\))*", text):
            raise ValueError(f"bad cycle notation: {text!r}")
        for body in re.findall(r"\(([^()]*)\)", text):
            if not body:
                continue
            pts = [int(x) for x in body.split(",")]
            if len(set(pts)) != len(pts) or max(pts) > degree or min(pts) < 1:
                raise ValueError(f"bad cycle {body!r} for degree {degree}")
            step = list(range(1, degree + 1))
            for a, b in zip(pts, pts[1:] + pts[:1]):
                step[a - 1] = b
            # cycles written side by side are composed left to right
            images = [step[v - 1] for v in images]
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    @property
    def ambient(self) -> tuple:
        return ("perm", len(self.images))

    @property
    def key(self) -> tuple:
        return self.images

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if len(other.images) != len(self.images):
            raise ValueError("permutations of different degree")
        o = other.images
        return Permutation(tuple(o[v - 1] for v in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, v in enumerate(self.images, 1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def one(self) -> "Permutation":
        return Permutation.identity(len(self.images))

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images, 1))

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for i in range(1, len(self.images) + 1):
            if i in seen or self(i) == i:
                continue
            cyc = [i]
            seen.add(i)
            j = self(i)
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def __str__(self):
        cyc = self.cycles()
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cyc) or "()"


@dataclass(frozen=True, slots=True)
class Matrix2ModM:
    """``[[a, b], [c, d]]`` over Z/mZ, entries normalised into ``0..m-1``."""

    a: int
    b: int
    c: int
    d: int
    m: int

    def __post_init__(self):
        if self.m < 2:
            raise ValueError(f"modulus must be at least 2, got {self.m}")
        for name in "abcd":
            object.__setattr__(self, name, getattr(self, name) % self.m)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], m: int) -> "Matrix2ModM":
        (a, b), (c, d) = rows
        return cls(a, b, c, d, m)

    @classmethod
    def identity(cls, m: int) -> "Matrix2ModM":
        return cls(1, 0, 0, 1, m)

    @property
    def ambient(self) -> tuple:
        return ("sl2", self.m)

    @property
    def key(self) -> tuple:
        return (self.a, self.b, self.c, self.d)

    def rows(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    def det(self) -> int:
        return (self.a * self.d - self.b * self.c) % self.m

    def __mul__(self, o: "Matrix2ModM") -> "Matrix2ModM":
        if o.m != self.m:
            raise ValueError("matrices over different moduli")
        a, b, c, d, m = self.a, self.b, self.c, self.d, self.m
        return Matrix2ModM(a * o.a + b * o.c, a * o.b + b * o.d,
                           c * o.a + d * o.c, c * o.b + d * o.d, m)

    def __pow__(self, k: int) -> "Matrix2ModM":
        base = self if k >= 0 else self.inverse()
        out = self.one()
        for _ in range(abs(k)):
            out = out * base
        return out

    def inverse(self) -> "Matrix2ModM":
        det = self.det()
        try:
            dinv = pow(det, -1, self.m)
        except ValueError:
            raise ValueError(f"matrix not invertible mod {self.m}") from None
        return Matrix2ModM(self.d * dinv, -self.b * dinv, -self.c * dinv,
                           self.a * dinv, self.m)

    def one(self) -> "Matrix2ModM":
        return Matrix2ModM.identity(self.m)

    def is_identity(self) -> bool:
        return self.key == (1, 0, 0, 1)

    def __str__(self):
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]] mod {self.m}"


GroupElement = Union[Permutation, Matrix2ModM]


def conj(x, g):
    """``x^g = g^-1 x g``."""
    return g.inverse() * x * g


class ElementSet:
    """A finite set of group elements with hashed membership.

    Instances built by :func:`closure` are subgroups. The set is never
    mutated after construction.
    """

    def __init__(self, elements: Iterable, generators: Sequence = ()):
        self._elements = frozenset(elements)
        self.generators = tuple(generators)
        if not self._elements:
            raise ValueError("empty element set")
        self.ambient = next(iter(self._elements)).ambient

    def __contains__(self, x) -> bool:
        return x in self._elements

    def __iter__(self) -> Iterator:
        return iter(sorted(self._elements, key=lambda e: e.key))

    def __len__(self):
        return len(self._elements)

    def __eq__(self, other):
        return isinstance(other, ElementSet) and self._elements == other._elements

    def __hash__(self):
        return hash(self._elements)

    def __repr__(self):
        return f"ElementSet(order={len(self)}, ambient={self.ambient})"

    def identity(self):
        return next(iter(self._elements)).one()

    def elements(self) -> frozenset:
        return self._elements


def _check_ambient(elements: Sequence) -> tuple:
    if not elements:
        raise ValueError("need at least one element")
    amb = elements[0].ambient
    for e in elements:
        if e.ambient != amb:
            raise ValueError(f"mixed ambients: {amb} and {e.ambient}")
    return amb


def closure(generators: Sequence, cap: int = DEFAULT_CAP) -> ElementSet:
    """Subgroup generated by ``generators``, enumerated exhaustively."""
    generators = list(generators)
    _check_ambient(generators)
    one = generators[0].one()
    seen = {one}
    frontier = [one]
    while frontier:
        nxt = []
        for x in frontier:
            for g in generators:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    if len(seen) > cap:
                        raise ResourceCapExceeded("group closure", cap)
                    nxt.append(y)
        frontier = nxt
    # finite group: closure under right multiplication by generators is
    # closed under products and inverses as well
    return ElementSet(seen, generators)


def _require_member(G: ElementSet, x) -> None:
    if x not in G:
        raise ValueError(f"{x} is not an element of {G!r}")


def find_conjugator(G: ElementSet, x, y):
    """Some ``g`` in ``G`` with ``g^-1 x g == y``, or ``None``."""
    _require_member(G, x)
    _require_member(G, y)
    for g in G:
        if x * g == g * y:
            return g
    return None


def centralizer(G: ElementSet, h) -> ElementSet:
    _require_member(G, h)
    return ElementSet((x for x in G.elements() if x * h == h * x))


def sl2_order(m: int) -> int:
    """``|SL(2, Z/m)| = m^3 prod_{p | m} (1 - p^-2)``."""
    order = m**3
    n, p = m, 2
    while p * p <= n:
        if n % p == 0:
            order = order // (p * p) * (p * p - 1)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        order = order // (n * n) * (n * n - 1)
    return order
