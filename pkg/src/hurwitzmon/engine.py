"""Vectorised orbit enumeration over an indexed finite group.

Group elements are replaced by their index in a fixed enumeration of the
ambient group, so a labeled tuple becomes a row of small integers. The orbit
under Hurwitz moves and conjugation by a subgroup ``H`` is walked one
``H``-conjugacy class at a time: every class is stored through its
lexicographically smallest member, and the number of plain tuples in it is
``|H| / |Stab_H|``. Since Hurwitz moves commute with conjugation, q1 and q2
are well defined on classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .groups import DEFAULT_CAP, ElementSet, Matrix2ModM, Permutation, ResourceCapExceeded

# conjugation tables larger than this many entries are not precomputed
CONJ_TABLE_LIMIT = 60_000_000
_BATCH_CELLS = 4_000_000
DENSE_LOOKUP_LIMIT = 1 << 24


class IndexedGroup:
    """A finite group with elements numbered ``0..N-1`` and vectorised products."""

    def __init__(self, G: ElementSet):
        self.group = G
        self.elements = list(G)
        self.order = len(self.elements)
        first = self.elements[0]
        if isinstance(first, Matrix2ModM):
            self.kind = "sl2"
            self.m = first.m
            self.keys = np.array([e.key for e in self.elements], dtype=np.int64)
        elif isinstance(first, Permutation):
            self.kind = "perm"
            self.keys = np.array([e.images for e in self.elements], dtype=np.int64) - 1
        else:
            raise TypeError(f"unsupported element type {type(first).__name__}")
        codes = self._codes(self.keys)
        self._order_by_code = np.argsort(codes, kind="stable")
        self._sorted_codes = codes[self._order_by_code]
        if len(np.unique(self._sorted_codes)) != self.order:
            raise AssertionError("element encoding is not injective")
        self._dense = None
        if codes.dtype.kind == "i" and 0 <= codes.min() and codes.max() < DENSE_LOOKUP_LIMIT:
            self._dense = np.full(int(codes.max()) + 1, -1, dtype=np.int64)
            self._dense[codes] = np.arange(self.order)
        self.index = {e: i for i, e in enumerate(self.elements)}
        self.inv = np.array([self.index[e.inverse()] for e in self.elements], dtype=np.int64)
        self.identity = self.index[first.one()]

    def _codes(self, keys: np.ndarray) -> np.ndarray:
        if self.kind == "sl2":
            m = self.m
            return ((keys[..., 0] * m + keys[..., 1]) * m + keys[..., 2]) * m + keys[..., 3]
        n = keys.shape[-1]
        if n ** n < 2**62:
            weights = n ** np.arange(n - 1, -1, -1, dtype=np.int64)
            return keys @ weights
        flat = np.ascontiguousarray(keys.reshape(-1, n).astype(np.int16))
        return flat.view(np.dtype((np.void, 2 * n))).reshape(keys.shape[:-1])

    def _mul_keys(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        if self.kind == "sl2":
            m = self.m
            a, b, c, d = (x[..., i] for i in range(4))
            e, f, g, h = (y[..., i] for i in range(4))
            return np.stack([a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h],
                            axis=-1) % m
        # (p * q)(i) = q(p(i))
        return np.take_along_axis(y, x, axis=-1)

    def lookup(self, keys: np.ndarray) -> np.ndarray:
        codes = self._codes(keys)
        if self._dense is not None:
            if codes.size and codes.max() >= len(self._dense):
                raise ValueError("product left the enumerated group")
            out = self._dense[codes]
            if codes.size and out.min() < 0:
                raise ValueError("product left the enumerated group")
            return out
        pos = np.searchsorted(self._sorted_codes, codes)
        pos = np.minimum(pos, self.order - 1)
        if not np.all(self._sorted_codes[pos] == codes):
            raise ValueError("product left the enumerated group")
        return self._order_by_code[pos]

    def mul(self, i: np.ndarray, j: np.ndarray) -> np.ndarray:
        i, j = np.broadcast_arrays(np.asarray(i), np.asarray(j))
        shape = i.shape
        x = self.keys[i.ravel()]
        y = self.keys[j.ravel()]
        return self.lookup(self._mul_keys(x, y)).reshape(shape)

    def conj_perm(self, h: int) -> np.ndarray:
        """``p[e] = h^-1 * e * h`` for every element index ``e``."""
        everything = np.arange(self.order)
        return self.mul(self.mul(self.inv[h], everything), h)

    def conj_table(self, H: Sequence[int]) -> np.ndarray:
        """``T[k, e] = H[k]^-1 * e * H[k]``; ``H`` must be a subgroup.

        Rows are built from a few generators: conjugating by ``h g`` is
        conjugating by ``h`` and then by ``g``.
        """
        H = [int(h) for h in H]
        pos = {h: k for k, h in enumerate(H)}
        table = np.empty((len(H), self.order), dtype=np.int32)
        done = {self.identity}
        table[pos[self.identity]] = np.arange(self.order)
        gens: list[tuple[int, np.ndarray]] = []
        frontier = [self.identity]
        for h in H:
            if h in done:
                continue
            gens.append((h, self.conj_perm(h)))
            # grow the covered set to the closure under all generators so far
            frontier = list(done)
            while frontier:
                nxt = []
                for x in frontier:
                    for g, p in gens:
                        y = int(self.mul(x, g))
                        if y not in done:
                            if y not in pos:
                                raise ValueError("conjugators do not form a subgroup")
                            done.add(y)
                            table[pos[y]] = p[table[pos[x]]]
                            nxt.append(y)
                frontier = nxt
        return table


@dataclass
class ClassOrbitResult:
    classes: int          # number of H-conjugacy classes in the orbit
    tuples: int           # number of plain labeled tuples in the orbit
    hit: np.ndarray | None  # canonical row of the first target class reached
    levels: int
    exhausted: bool


class ClassOrbit:
    """Orbit of a labeled tuple under q1, q2 and conjugation by ``H``."""

    def __init__(self, IG: IndexedGroup, H: Sequence[int]):
        self.IG = IG
        self.H = np.asarray(sorted(set(int(h) for h in H)), dtype=np.int64)
        self.nH = len(self.H)
        if self.nH * IG.order <= CONJ_TABLE_LIMIT:
            self._table = IG.conj_table(self.H)
        else:
            self._table = None
            self._Hinv = IG.inv[self.H]

    def _conjugates(self, E: np.ndarray) -> np.ndarray:
        """All conjugates, shape ``(|H|, F, r)``."""
        if self._table is not None:
            return self._table[:, E]
        F, r = E.shape
        hi = np.broadcast_to(self._Hinv[:, None, None], (self.nH, F, r))
        h = np.broadcast_to(self.H[:, None, None], (self.nH, F, r))
        ee = np.broadcast_to(E[None], (self.nH, F, r))
        return self.IG.mul(self.IG.mul(hi, ee), h)

    def canonical(self, E: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Smallest conjugate of each row and the size of its class."""
        F, r = E.shape
        out = np.empty_like(E)
        sizes = np.empty(F, dtype=np.int64)
        step = max(1, _BATCH_CELLS // max(1, self.nH * r))
        for lo in range(0, F, step):
            blk = E[lo:lo + step]
            C = self._conjugates(blk)
            alive = np.ones(C.shape[:2], dtype=bool)
            big = np.iinfo(C.dtype).max
            for j in range(r):
                col = np.where(alive, C[:, :, j], big)
                mn = col.min(axis=0)
                out[lo:lo + step, j] = mn
                alive &= col == mn[None, :]
            stab = np.all(C == blk[None], axis=2).sum(axis=0)
            sizes[lo:lo + step] = self.nH // stab
        return out, sizes

    def q1(self, E, L):
        g, h = E[:, 0], E[:, 1]
        E2 = E.copy()
        E2[:, 0] = h
        E2[:, 1] = self.IG.mul(self.IG.mul(h, g), self.IG.inv[h])
        L2 = L.copy()
        L2[:, 0], L2[:, 1] = L[:, 1], L[:, 0]
        return E2, L2

    def q2(self, E, L):
        gn = E[:, -1:]
        gi = self.IG.inv[gn]
        E2 = np.empty_like(E)
        E2[:, 0] = E[:, -1]
        E2[:, 1:] = self.IG.mul(self.IG.mul(gn, E[:, :-1]), gi)
        L2 = np.concatenate([L[:, -1:], L[:, :-1]], axis=1)
        return E2, L2

    @staticmethod
    def _keys(E, L) -> list[bytes]:
        rows = np.ascontiguousarray(np.concatenate([E, L], axis=1).astype(np.int32))
        return [bytes(x) for x in rows.view(np.dtype((np.void, rows.shape[1] * 4))).ravel()]

    def run(self, E0: Sequence[int], L0: Sequence[int], target: tuple | None = None,
            cap: int = DEFAULT_CAP, early_exit: bool = True) -> ClassOrbitResult:
        """Walk the orbit of ``(E0, L0)``, watching for the class of ``target``.

        ``target`` is an ``(elements, labels)`` pair. With ``early_exit`` the
        walk stops at the first class equal to the target's. ``cap`` bounds
        the number of plain tuples.
        """
        E = np.asarray([E0], dtype=np.int64)
        L = np.asarray([L0], dtype=np.int64)
        E, sizes = self.canonical(E)
        target_key = hit = None
        if target is not None:
            TE, _ = self.canonical(np.asarray([target[0]], dtype=np.int64))
            target_key = self._keys(TE, np.asarray([target[1]], dtype=np.int64))[0]
        seen = set(self._keys(E, L))
        tuples = int(sizes.sum())
        if target_key is not None and target_key in seen:
            hit = E[0]
            if early_exit:
                return ClassOrbitResult(1, tuples, hit, 0, False)
        levels = 0
        if E.shape[1] < 2:
            E = E[:0]
        while len(E):
            levels += 1
            E1, L1 = self.q1(E, L)
            E2, L2 = self.q2(E, L)
            NE, sz = self.canonical(np.concatenate([E1, E2]))
            NL = np.concatenate([L1, L2])
            keys = self._keys(NE, NL)
            keep = []
            for k, key in enumerate(keys):
                if key in seen:
                    continue
                seen.add(key)
                keep.append(k)
                tuples += int(sz[k])
                if tuples > cap:
                    raise ResourceCapExceeded("orbit", cap)
                if key == target_key:
                    hit = NE[k]
                    if early_exit:
                        return ClassOrbitResult(len(seen), tuples, hit, levels, False)
            E, L = NE[keep], NL[keep]
        return ClassOrbitResult(len(seen), tuples, hit, levels, True)
