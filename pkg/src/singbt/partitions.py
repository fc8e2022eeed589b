"""Set partitions of {1..n} and permutations acting on them.

A partition is stored as a restricted-growth string: ``code[i]`` is the block
of point ``i + 1``, blocks numbered in order of first appearance.  The join
(least common coarsening) is the monoid product of P_n.

Permutations compose with the right factor acting first:
``(w * v)(i) == w(v(i))``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations as _iter_perms
from typing import Iterable, List, Sequence, Tuple


def _canonical(labels: Sequence[int]) -> Tuple[int, ...]:
    seen = {}
    out = []
    for lab in labels:
        if lab not in seen:
            seen[lab] = len(seen)
        out.append(seen[lab])
    return tuple(out)


class SetPartition:
    __slots__ = ("n", "code", "_hash")

    def __init__(self, n: int, code: Sequence[int] | None = None):
        if n < 0:
            raise ValueError("negative partition size")
        if code is None:
            code = range(n)
        code = tuple(code)
        if len(code) != n:
            raise ValueError(f"code of length {len(code)} for {n} points")
        top = -1
        for c in code:
            if c < 0 or c > top + 1:
                raise ValueError(f"{code!r} is not a restricted-growth string")
            top = max(top, c)
        self.n = n
        self.code = code
        self._hash = hash((n, code))

    @classmethod
    def _trusted(cls, n: int, code: Tuple[int, ...]) -> "SetPartition":
        p = cls.__new__(cls)
        p.n, p.code, p._hash = n, code, hash((n, code))
        return p

    # -- constructors -----------------------------------------------------
    @classmethod
    def discrete(cls, n: int) -> "SetPartition":
        """The least element: all singletons."""
        return cls._trusted(n, tuple(range(n)))

    @classmethod
    def full(cls, n: int) -> "SetPartition":
        return cls._trusted(n, (0,) * n)

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "SetPartition":
        """Points with equal labels share a block."""
        return cls._trusted(len(labels), _canonical(labels))

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]]) -> "SetPartition":
        """Blocks are 1-based; points not mentioned are singletons."""
        labels = list(range(n))
        seen = set()
        for k, block in enumerate(blocks):
            block = list(block)
            for p in block:
                if not 1 <= p <= n:
                    raise ValueError(f"point {p} out of range 1..{n}")
                if p in seen:
                    raise ValueError(f"point {p} appears in two blocks")
                seen.add(p)
                labels[p - 1] = n + k
        return cls.from_labels(labels)

    @classmethod
    def pair(cls, n: int, i: int, j: int) -> "SetPartition":
        """mu_{i,j}: the only non-singleton block is {i, j}."""
        if i == j:
            return cls.discrete(n)
        return cls.from_blocks(n, [(i, j)])

    @classmethod
    def parse(cls, text: str, n: int) -> "SetPartition":
        """Read ``1,2|4,6``; empty text is the discrete partition."""
        text = text.strip()
        if not text:
            return cls.discrete(n)
        blocks = []
        for chunk in text.split("|"):
            chunk = chunk.strip()
            if not chunk:
                continue
            try:
                blocks.append([int(t) for t in chunk.split(",")])
            except ValueError:
                raise ValueError(f"bad block {chunk!r}") from None
        return cls.from_blocks(n, blocks)

    # -- queries ----------------------------------------------------------
    def blocks(self) -> List[Tuple[int, ...]]:
        """All blocks, 1-based, ordered by smallest element."""
        out: List[List[int]] = []
        for i, c in enumerate(self.code):
            if c == len(out):
                out.append([])
            out[c].append(i + 1)
        return [tuple(b) for b in out]

    def block_of(self, i: int) -> Tuple[int, ...]:
        c = self.code[i - 1]
        return tuple(k + 1 for k, d in enumerate(self.code) if d == c)

    def same_block(self, i: int, j: int) -> bool:
        return self.code[i - 1] == self.code[j - 1]

    def is_discrete(self) -> bool:
        return len(set(self.code)) == self.n

    def num_blocks(self) -> int:
        return max(self.code) + 1 if self.code else 0

    def refines(self, other: "SetPartition") -> bool:
        """True if every block of self lies inside a block of other."""
        _check_size(self, other)
        return join(self, other) == other

    # -- protocol ---------------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, SetPartition):
            return NotImplemented
        return self.n == other.n and self.code == other.code

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "SetPartition") -> bool:
        return (self.n, self.code) < (other.n, other.code)

    def __or__(self, other: "SetPartition") -> "SetPartition":
        return join(self, other)

    def __str__(self) -> str:
        parts = [",".join(map(str, b)) for b in self.blocks() if len(b) > 1]
        return "|".join(parts)

    def __repr__(self) -> str:
        return f"SetPartition({self.n}, {str(self) or '1'})"


def _check_size(p, q):
    if p.n != q.n:
        raise ValueError(f"size mismatch: {p.n} vs {q.n}")


@lru_cache(maxsize=1 << 16)
def _join_codes(c1: Tuple[int, ...], c2: Tuple[int, ...]) -> Tuple[int, ...]:
    n = len(c1)
    parent = list(range(n))

    def find(k):
        while parent[k] != k:
            parent[k] = parent[parent[k]]
            k = parent[k]
        return k

    for code in (c1, c2):
        first = {}
        for i, c in enumerate(code):
            if c in first:
                ra, rb = find(first[c]), find(i)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
            else:
                first[c] = i
    return _canonical([find(i) for i in range(n)])


def join(p: SetPartition, q: SetPartition) -> SetPartition:
    """Least common coarsening of two partitions of the same set."""
    _check_size(p, q)
    if p.code == q.code:
        return p
    return SetPartition._trusted(p.n, _join_codes(p.code, q.code))


# ---------------------------------------------------------------------------
# Permutations
# ---------------------------------------------------------------------------


class Permutation:
    """Bijection of {1..n}; ``images`` is stored 0-based internally."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Sequence[int], one_based: bool = True):
        imgs = tuple(i - 1 for i in images) if one_based else tuple(images)
        if sorted(imgs) != list(range(len(imgs))):
            raise ValueError(f"{tuple(images)!r} is not a permutation")
        self.images = imgs
        self._hash = hash(imgs)

    @classmethod
    def _trusted(cls, imgs: Tuple[int, ...]) -> "Permutation":
        p = cls.__new__(cls)
        p.images, p._hash = imgs, hash(imgs)
        return p

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls._trusted(tuple(range(n)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int | None = None) -> "Permutation":
        """The transposition (i j); with one index, s_i = (i i+1)."""
        if j is None:
            j = i + 1
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValueError(f"transposition ({i} {j}) out of range for n={n}")
        imgs = list(range(n))
        imgs[i - 1], imgs[j - 1] = imgs[j - 1], imgs[i - 1]
        return cls._trusted(tuple(imgs))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1] + 1

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition; the right factor acts first."""
        if self.n != other.n:
            raise ValueError(f"size mismatch: {self.n} vs {other.n}")
        mine = self.images
        return Permutation._trusted(tuple(mine[k] for k in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, k in enumerate(self.images):
            inv[k] = i
        return Permutation._trusted(tuple(inv))

    def length(self) -> int:
        """Number of inversions."""
        imgs = self.images
        return sum(1 for i in range(len(imgs)) for j in range(i + 1, len(imgs)) if imgs[i] > imgs[j])

    def is_identity(self) -> bool:
        return all(i == k for i, k in enumerate(self.images))

    def reduced_word(self) -> List[int]:
        """Indices i_1..i_k (1-based) with self = s_{i_1} * ... * s_{i_k}, k minimal."""
        imgs = list(self.images)
        word = []
        while True:
            for j in range(len(imgs) - 1):
                if imgs[j] > imgs[j + 1]:
                    imgs[j], imgs[j + 1] = imgs[j + 1], imgs[j]
                    word.append(j + 1)
                    break
            else:
                break
        word.reverse()
        return word

    def cycles(self) -> List[Tuple[int, ...]]:
        """Cycles (1-based), each listed from its smallest point, ordered by that point."""
        seen = [False] * self.n
        out = []
        for start in range(self.n):
            if seen[start]:
                continue
            cyc = []
            k = start
            while not seen[k]:
                seen[k] = True
                cyc.append(k + 1)
                k = self.images[k]
            out.append(tuple(cyc))
        return out

    def extend(self, n: int) -> "Permutation":
        """Same permutation on more points, fixing the new ones."""
        if n < self.n:
            raise ValueError("cannot shrink a permutation")
        return Permutation._trusted(self.images + tuple(range(self.n, n)))

    def restrict(self) -> "Permutation":
        """Drop the last point; it must be fixed."""
        if self.images and self.images[-1] != self.n - 1:
            raise ValueError("last point is not fixed")
        return Permutation._trusted(self.images[:-1])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __repr__(self) -> str:
        return f"Permutation({[i + 1 for i in self.images]})"


@lru_cache(maxsize=1 << 18)
def _apply_codes(imgs: Tuple[int, ...], code: Tuple[int, ...]) -> Tuple[int, ...]:
    labels = [0] * len(code)
    for i, c in enumerate(code):
        labels[imgs[i]] = c
    return _canonical(labels)


def apply_permutation(w: Permutation, p: SetPartition) -> SetPartition:
    """w(I): every block is replaced by its pointwise image."""
    if w.n != p.n:
        raise ValueError(f"size mismatch: {w.n} vs {p.n}")
    return SetPartition._trusted(p.n, _apply_codes(w.images, p.code))


def all_permutations(n: int) -> List[Permutation]:
    return [Permutation._trusted(t) for t in _iter_perms(range(n))]


# ---------------------------------------------------------------------------
# Partitions derived in the skein rules
# ---------------------------------------------------------------------------


def plus(p: SetPartition) -> SetPartition:
    """I+: add the new point n+1 as a singleton."""
    return SetPartition._trusted(p.n + 1, p.code + (p.num_blocks(),))


def merge(p: SetPartition, i: int, j: int) -> SetPartition:
    """I_{i,j}: join the blocks of i and j."""
    _check_points(p, i, j)
    return join(p, SetPartition.pair(p.n, i, j))


def drop(p: SetPartition, i: int, j: int) -> SetPartition:
    """Ĩ_{i,j} for i < j: merge i and j, then delete point j and renumber."""
    if not i < j:
        raise ValueError("drop needs i < j")
    merged = merge(p, i, j)
    code = merged.code[: j - 1] + merged.code[j:]
    return SetPartition.from_labels(code)


def attach(p: SetPartition, i: int) -> SetPartition:
    """Ĩ_{i,i}: add the point n+1 to the block of i."""
    _check_points(p, i, i)
    return SetPartition._trusted(p.n + 1, p.code + (p.code[i - 1],))


def star(p: SetPartition, i: int, j: int) -> SetPartition:
    """I*_{i,j}: drop(i, j) when i < j, the new singleton when i == j."""
    if i == j:
        _check_points(p, i, i)
        return plus(p)
    return drop(p, min(i, j), max(i, j))


def skein(p: SetPartition, kind: str, i: int | None = None, j: int | None = None) -> SetPartition:
    if kind == "plus":
        return plus(p)
    if kind == "merge":
        return merge(p, i, j)
    if kind == "drop":
        return drop(p, i, j)
    if kind == "attach":
        return attach(p, i)
    if kind == "star":
        return star(p, i, j)
    raise ValueError(f"unknown skein partition kind {kind!r}")


def _check_points(p: SetPartition, *points: int) -> None:
    for k in points:
        if not 1 <= k <= p.n:
            raise ValueError(f"point {k} out of range 1..{p.n}")


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _rgs(n: int) -> Tuple[Tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for code in _rgs(n - 1):
        top = max(code) if code else -1
        for c in range(top + 2):
            out.append(code + (c,))
    return tuple(sorted(out))


def enumerate_partitions(n: int) -> List[SetPartition]:
    """All partitions of {1..n} in lexicographic order of their codes."""
    if n < 0:
        raise ValueError("negative size")
    return [SetPartition._trusted(n, c) for c in _rgs(n)]


def bell(n: int) -> int:
    """Bell number via the Bell triangle."""
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]
