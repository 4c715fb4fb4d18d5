"""Braid words, free-group words and the right Artin action.

Conventions (used by every module in the package):

* A word is a tuple of nonzero integers. In a free word ``k`` stands for
  ``x_k`` and ``-k`` for its inverse; in a braid word ``i`` stands for
  ``sigma_i`` and ``-i`` for its inverse.
* Words are read left to right and the leftmost letter acts first. The Artin
  action is a right action, ``w^(b1 b2) = (w^b1)^b2``, and permutations
  compose the same way: ``(p * q)(i) = q(p(i))``.
* ``sigma_i`` acts on free generators by

      x_i     -> x_{i+1}
      x_{i+1} -> x_{i+1} x_i x_{i+1}^-1
      x_j     -> x_j          (j != i, i+1)
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .groups import Permutation

__all__ = [
    "FreeWord",
    "BraidWord",
    "free_reduce",
    "cyclic_reduce",
    "free_inverse",
    "substitute",
    "artin_act",
    "generator_images",
    "braid_eq",
    "braid_key",
    "braid_permutation",
    "check_braid_candidate",
    "braid_compose",
    "braid_inverse",
    "conjugate",
    "boundary_word",
]


def _reduce_letters(letters: Iterable[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for l in letters:
        if stack and stack[-1] == -l:
            stack.pop()
        else:
            stack.append(l)
    return tuple(stack)


@dataclass(frozen=True)
class FreeWord:
    letters: tuple[int, ...]
    rank: int

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(l) for l in self.letters))
        if self.rank < 1:
            raise ValueError(f"rank must be positive, got {self.rank}")
        for l in self.letters:
            if l == 0 or abs(l) > self.rank:
                raise ValueError(f"letter {l} out of range for rank {self.rank}")

    @classmethod
    def generator(cls, k: int, rank: int) -> "FreeWord":
        return cls((k,), rank)

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        if other.rank != self.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")
        return FreeWord(_reduce_letters(self.letters + other.letters), self.rank)

    def __len__(self):
        return len(self.letters)

    def is_reduced(self) -> bool:
        return _reduce_letters(self.letters) == self.letters


@dataclass(frozen=True)
class BraidWord:
    letters: tuple[int, ...]
    strands: int

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(l) for l in self.letters))
        if self.strands < 1:
            raise ValueError(f"strands must be positive, got {self.strands}")
        for l in self.letters:
            if l == 0 or abs(l) > self.strands - 1:
                raise ValueError(
                    f"braid letter {l} out of range for {self.strands} strands")

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return braid_compose(self, other)

    def __len__(self):
        return len(self.letters)


def free_reduce(w: FreeWord) -> FreeWord:
    return FreeWord(_reduce_letters(w.letters), w.rank)


def free_inverse(w: FreeWord) -> FreeWord:
    return FreeWord(tuple(-l for l in reversed(w.letters)), w.rank)


def cyclic_reduce(w: FreeWord) -> FreeWord:
    """Free reduction followed by stripping mutually inverse end letters."""
    letters = _reduce_letters(w.letters)
    lo, hi = 0, len(letters)
    while hi - lo >= 2 and letters[lo] == -letters[hi - 1]:
        lo += 1
        hi -= 1
    return FreeWord(letters[lo:hi], w.rank)


def substitute(w: FreeWord, images: Sequence[FreeWord]) -> FreeWord:
    """Image of ``w`` under the endomorphism ``x_k -> images[k-1]``."""
    out: list[int] = []
    for l in w.letters:
        img = images[abs(l) - 1].letters
        if l < 0:
            img = tuple(-m for m in reversed(img))
        for m in img:
            if out and out[-1] == -m:
                out.pop()
            else:
                out.append(m)
    rank = images[0].rank if images else w.rank
    return FreeWord(tuple(out), rank)


@lru_cache(maxsize=None)
def _letter_images(letter: int, n: int) -> tuple[tuple[int, ...], ...]:
    i = abs(letter)
    imgs = [(j,) for j in range(1, n + 1)]
    if letter > 0:
        imgs[i - 1] = (i + 1,)
        imgs[i] = (i + 1, i, -(i + 1))
    else:
        imgs[i - 1] = (-i, i + 1, i)
        imgs[i] = (i,)
    return tuple(imgs)


def _act_letters(letters: tuple[int, ...], braid: tuple[int, ...], n: int) -> tuple[int, ...]:
    for b in braid:
        imgs = _letter_images(b, n)
        out: list[int] = []
        for l in letters:
            img = imgs[abs(l) - 1]
            if l < 0:
                img = tuple(-m for m in reversed(img))
            for m in img:
                if out and out[-1] == -m:
                    out.pop()
                else:
                    out.append(m)
        letters = tuple(out)
    return letters


def artin_act(b: BraidWord, w: FreeWord) -> FreeWord:
    """Right Artin action ``w^b``, freely reduced."""
    if b.strands != w.rank:
        raise ValueError(f"braid on {b.strands} strands cannot act on F_{w.rank}")
    return FreeWord(_act_letters(_reduce_letters(w.letters), b.letters, w.rank), w.rank)


@lru_cache(maxsize=4096)
def _generator_images(letters: tuple[int, ...], n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(_act_letters((j,), letters, n) for j in range(1, n + 1))


def generator_images(b: BraidWord) -> tuple[FreeWord, ...]:
    """``(x_1^b, ..., x_n^b)``; equal braids give equal tuples."""
    n = b.strands
    return tuple(FreeWord(img, n) for img in _generator_images(b.letters, n))


def braid_key(b: BraidWord) -> tuple:
    """Hashable key compatible with :func:`braid_eq`."""
    return (b.strands, _generator_images(b.letters, b.strands))


def braid_eq(b1: BraidWord, b2: BraidWord) -> bool:
    # B_n -> Aut(F_n) is injective, so comparing generator images decides equality.
    if b1.strands != b2.strands:
        raise ValueError(f"strand mismatch: {b1.strands} vs {b2.strands}")
    return braid_key(b1) == braid_key(b2)


def braid_permutation(b: BraidWord) -> Permutation:
    """Permutation ``p`` with ``x_i^b`` conjugate to ``x_{p(i)}``."""
    images = list(range(1, b.strands + 1))
    for l in b.letters:
        i = abs(l)
        # track where each point currently sits, composing left to right
        images = [i + 1 if v == i else i if v == i + 1 else v for v in images]
    return Permutation(tuple(images))


def boundary_word(n: int) -> FreeWord:
    """``x_n ... x_1``, fixed by every braid."""
    return FreeWord(tuple(range(n, 0, -1)), n)


def check_braid_candidate(images: Sequence[FreeWord]) -> tuple[bool, Permutation | None]:
    """Check the two braid-automorphism conditions on generator images.

    Returns ``(True, p)`` when ``x_n ... x_1`` is preserved and each image is
    a conjugate of a generator ``x_{p(i)}`` with ``p`` a permutation. This is
    a certificate check; it does not test that the map is an automorphism.
    """
    n = len(images)
    if n == 0:
        raise ValueError("need at least one image")
    for w in images:
        if not isinstance(w, FreeWord) or w.rank != n:
            raise ValueError(f"every image must be a FreeWord of rank {n}")
    if substitute(boundary_word(n), images).letters != boundary_word(n).letters:
        return False, None
    targets = []
    for w in images:
        core = cyclic_reduce(w).letters
        if len(core) != 1 or core[0] < 0:
            return False, None
        targets.append(core[0])
    if sorted(targets) != list(range(1, n + 1)):
        return False, None
    return True, Permutation(tuple(targets))


def braid_compose(b1: BraidWord, b2: BraidWord) -> BraidWord:
    if b1.strands != b2.strands:
        raise ValueError(f"strand mismatch: {b1.strands} vs {b2.strands}")
    return BraidWord(b1.letters + b2.letters, b1.strands)


def braid_inverse(b: BraidWord) -> BraidWord:
    return BraidWord(tuple(-l for l in reversed(b.letters)), b.strands)


def conjugate(u: BraidWord, v: BraidWord) -> BraidWord:
    """``u * v := u v u^-1`` as a plain concatenated word."""
    return braid_compose(braid_compose(u, v), braid_inverse(u))
