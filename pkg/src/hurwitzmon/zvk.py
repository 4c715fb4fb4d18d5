"""Fundamental-group presentations from braid monodromies.

For a factorization ``(tau_1, .., tau_r)`` on ``d`` strands the affine
presentation has generators ``g_1 .. g_d`` and relations ``g_j^tau_i = g_j``.
The fibered variant adds one generator ``a_i`` per braid and uses
``g_j^tau_i = a_i^-1 g_j a_i``. A relation ``u = v`` is stored as the
reduced word ``u v^-1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .braids import FreeWord, artin_act, cyclic_reduce, free_inverse, free_reduce
from .hurwitz import MonodromyFactorization


@dataclass
class Presentation:
    generator_names: list[str]
    relators: list[FreeWord] = field(default_factory=list)

    def __post_init__(self):
        n = len(self.generator_names)
        kept, keys = [], set()
        for w in self.relators:
            if w.rank != n:
                raise ValueError(f"relator over F_{w.rank} in a presentation on {n} generators")
            w = free_reduce(w)
            k = relator_key(w)
            if w.letters and k not in keys:
                keys.add(k)
                kept.append(w)
        self.relators = kept

    @property
    def rank(self) -> int:
        return len(self.generator_names)

    def add(self, w: FreeWord) -> "Presentation":
        return Presentation(list(self.generator_names), self.relators + [w])


def relator_key(w: FreeWord) -> tuple:
    """Identical for relators equal up to cyclic rotation and inversion."""
    best = ()
    for cand in (cyclic_reduce(w).letters, cyclic_reduce(free_inverse(w)).letters):
        for k in range(max(1, len(cand))):
            rot = cand[k:] + cand[:k]
            if not best or rot < best:
                best = rot
    return best


def _gen_names(d: int) -> list[str]:
    return [f"g{j}" for j in range(1, d + 1)]


def presentation_affine(M: MonodromyFactorization) -> Presentation:
    d = M.strands
    rels = []
    for tau in M.braids:
        for j in range(1, d + 1):
            x = FreeWord((j,), d)
            rels.append(artin_act(tau, x) * FreeWord((-j,), d))
    return Presentation(_gen_names(d), rels)


def presentation_fibered(M: MonodromyFactorization) -> Presentation:
    d, r = M.strands, M.r
    n = d + r
    names = _gen_names(d) + [f"a{i}" for i in range(1, r + 1)]
    rels = []
    for i, tau in enumerate(M.braids, 1):
        a = d + i
        for j in range(1, d + 1):
            lhs = artin_act(tau, FreeWord((j,), d)).letters
            rhs = (-a, j, a)
            rels.append(FreeWord(lhs, n) * free_inverse(FreeWord(rhs, n)))
    return Presentation(names, rels)


def meridian_infinity_relator(d: int = 3) -> FreeWord:
    """Inverse of ``(e^-1 g3 e) g3 (e g3 e^-1) g3 g2 g1`` with ``e = (g3 g2 g1)^-1``."""
    if d != 3:
        raise NotImplementedError("the meridian at infinity is only available for d = 3")
    g1, g2, g3 = (FreeWord((k,), 3) for k in (1, 2, 3))
    e = free_inverse(g3 * g2 * g1)
    ei = free_inverse(e)
    w = (ei * g3 * e) * g3 * (e * g3 * ei) * g3 * g2 * g1
    return free_inverse(w)


def presentation_projective(M: MonodromyFactorization) -> Presentation:
    """Affine relators plus the meridian-at-infinity relator (``d = 3``)."""
    return presentation_affine(M).add(meridian_infinity_relator(M.strands))


PRESENTATIONS = {
    "affine": presentation_affine,
    "fibered": presentation_fibered,
    "projective": presentation_projective,
}


# -- abelianization --------------------------------------------------------

@dataclass
class SmithForm:
    D: list[list[int]]
    U: list[list[int]]
    V: list[list[int]]
    diagonal: list[int]


@dataclass
class AbelianizationResult:
    free_rank: int
    torsion: list[int]
    smith: SmithForm | None = None

    def __str__(self):
        parts = ["Z"] * self.free_rank + [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"


def _matmul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def _det(M) -> int:
    # Bareiss fraction-free elimination
    n = len(M)
    if n == 0:
        return 1
    A = [row[:] for row in M]
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k]:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def smith_normal_form(A: Sequence[Sequence[int]]) -> SmithForm:
    """``U A V = D`` with ``U``, ``V`` unimodular and ``D`` diagonal, each
    diagonal entry dividing the next. The certificate is checked before
    returning."""
    m = len(A)
    n = len(A[0]) if m else 0
    D = [list(map(int, row)) for row in A]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):  # row dst -= q * row src
        D[dst] = [a - q * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a - q * b for a, b in zip(U[dst], U[src])]

    def add_col(src, dst, q):  # col dst -= q * col src
        for row in D:
            row[dst] -= q * row[src]
        for row in V:
            row[dst] -= q * row[src]

    def neg_row(i):
        D[i] = [-a for a in D[i]]
        U[i] = [-a for a in U[i]]

    t = 0
    while t < min(m, n):
        nz = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            changed = False
            for i in range(t + 1, m):
                if D[i][t]:
                    q = D[i][t] // D[t][t]
                    add_row(t, i, q)
                    if D[i][t]:
                        swap_rows(t, i)
                        changed = True
            for j in range(t + 1, n):
                if D[t][j]:
                    q = D[t][j] // D[t][t]
                    add_col(t, j, q)
                    if D[t][j]:
                        swap_cols(t, j)
                        changed = True
            if changed:
                continue
            # pivot must divide the rest of the block
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if D[i][j] % D[t][t]), None)
            if bad is None:
                break
            add_row(bad[0], t, -1)
        if D[t][t] < 0:
            neg_row(t)
        t += 1

    diagonal = [D[k][k] for k in range(min(m, n))]
    sf = SmithForm(D, U, V, diagonal)
    check_smith(A, sf)
    return sf


def check_smith(A, sf: SmithForm) -> None:
    m = len(A)
    n = len(A[0]) if m else 0
    if m and n and _matmul(_matmul(sf.U, [list(r) for r in A]), sf.V) != sf.D:
        raise AssertionError("U A V != D")
    if abs(_det(sf.U)) != 1 or abs(_det(sf.V)) != 1:
        raise AssertionError("transformation is not unimodular")
    for i in range(m):
        for j in range(n):
            if i != j and sf.D[i][j]:
                raise AssertionError("D is not diagonal")
    diag = sf.diagonal
    for a, b in zip(diag, diag[1:]):
        if (a == 0 and b != 0) or (a != 0 and b % a):
            raise AssertionError("diagonal is not a divisibility chain")


def exponent_matrix(P: Presentation) -> list[list[int]]:
    rows = []
    for w in P.relators:
        row = [0] * P.rank
        for l in w.letters:
            row[abs(l) - 1] += 1 if l > 0 else -1
        rows.append(row)
    return rows


def abelianization(P: Presentation) -> AbelianizationResult:
    A = exponent_matrix(P)
    if not A:
        return AbelianizationResult(P.rank, [])
    sf = smith_normal_form(A)
    nonzero = [abs(x) for x in sf.diagonal if x]
    return AbelianizationResult(P.rank - len(nonzero), [x for x in nonzero if x > 1], sf)


# -- export ----------------------------------------------------------------

def _letter_text(names, l, power_sep="^") -> str:
    name = names[abs(l) - 1]
    return name if l > 0 else f"{name}{power_sep}-1"


def export_presentation(P: Presentation, format: str = "plain") -> str:
    """Render as ``plain`` text or as a GAP free-group quotient.

    ``plain``::

        generators: g1 g2 g3
        g2 g1^-1
        ...

    ``gap``::

        F := FreeGroup("g1", "g2", "g3");;
        g1 := F.1;; g2 := F.2;; g3 := F.3;;
        rels := [
          g2*g1^-1,
          ...
        ];;
        G := F / rels;;
    """
    names = P.generator_names
    if format == "plain":
        lines = ["generators: " + " ".join(names)]
        lines += [" ".join(_letter_text(names, l) for l in w.letters) for w in P.relators]
        return "\n".join(lines) + "\n"
    if format == "gap":
        quoted = ", ".join(f'"{n}"' for n in names)
        lines = [f"F := FreeGroup({quoted});;"]
        lines.append(" ".join(f"{n} := F.{k};;" for k, n in enumerate(names, 1)))
        body = ["  " + "*".join(_letter_text(names, l) for l in w.letters) for w in P.relators]
        if body:
            lines.append("rels := [")
            lines.append(",\n".join(body))
            lines.append("];;")
        else:
            lines.append("rels := [];;")
        lines.append("G := F / rels;;")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown presentation format {format!r}; use plain or gap")
