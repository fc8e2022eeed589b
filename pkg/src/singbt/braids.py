"""Words in the braid, singular braid and tied singular braid monoids."""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from .partitions import Permutation

KINDS = ("sigma", "sigma_inv", "tau", "tie")

_TOKEN = re.compile(r"^(s|t|e)(\d+)(\^-1)?$")


@dataclass(frozen=True)
class GenTok:
    kind: str
    index: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.index < 1:
            raise ValueError(f"generator index {self.index} must be at least 1")

    def __str__(self) -> str:
        if self.kind == "sigma":
            return f"s{self.index}"
        if self.kind == "sigma_inv":
            return f"s{self.index}^-1"
        if self.kind == "tau":
            return f"t{self.index}"
        return f"e{self.index}"

    def inverse(self) -> "GenTok":
        if self.kind == "sigma":
            return GenTok("sigma_inv", self.index)
        if self.kind == "sigma_inv":
            return GenTok("sigma", self.index)
        raise ValueError(f"{self} has no inverse in the monoid")


def parse_token(text: str) -> GenTok:
    m = _TOKEN.match(text)
    if not m:
        raise ValueError(f"bad token {text!r}")
    letter, idx, inv = m.group(1), int(m.group(2)), m.group(3)
    if inv and letter != "s":
        raise ValueError(f"only s<i> can be inverted, got {text!r}")
    if idx < 1:
        raise ValueError(f"bad index in {text!r}")
    kind = {"s": "sigma_inv" if inv else "sigma", "t": "tau", "e": "tie"}[letter]
    return GenTok(kind, idx)


class Word:
    """A generator sequence on ``n`` strands.  Words are never reduced."""

    __slots__ = ("n", "toks")

    def __init__(self, n: int, toks: Iterable[GenTok] = ()):
        toks = tuple(toks)
        if n < 1:
            raise ValueError("a word needs at least one strand")
        for t in toks:
            if t.index > n - 1:
                raise ValueError(f"token {t} out of range for {n} strands")
        self.n = n
        self.toks = toks

    @classmethod
    def parse(cls, text: str | Sequence[str], n: int | None = None) -> "Word":
        parts = text.split() if isinstance(text, str) else list(text)
        toks = [parse_token(p) for p in parts]
        if n is None:
            n = 1 + max((t.index for t in toks), default=0)
        return cls(n, toks)

    def __str__(self) -> str:
        return " ".join(str(t) for t in self.toks)

    def __repr__(self) -> str:
        return f"Word({self.n}, {str(self)!r})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self.n == other.n and self.toks == other.toks

    def __hash__(self) -> int:
        return hash((self.n, self.toks))

    def __len__(self) -> int:
        return len(self.toks)

    def __add__(self, other: "Word") -> "Word":
        n = max(self.n, other.n)
        return Word(n, self.toks + other.toks)

    def with_strands(self, n: int) -> "Word":
        """Same tokens on ``n`` strands (natural inclusion)."""
        return Word(n, self.toks)

    def kinds(self) -> set:
        return {t.kind for t in self.toks}

    def is_classical(self) -> bool:
        return self.kinds() <= {"sigma", "sigma_inv"}

    def has_ties(self) -> bool:
        return "tie" in self.kinds()

    def singular_degree(self) -> int:
        return sum(1 for t in self.toks if t.kind == "tau")


def underlying_permutation(word: Word) -> Permutation:
    """s_{i_1} * ... * s_{i_k}; tau maps like sigma, ties map to the identity."""
    imgs = list(range(word.n))
    # right-multiplying by s_i swaps positions i, i+1 of the image list
    for t in word.toks:
        if t.kind == "tie":
            continue
        i = t.index - 1
        imgs[i], imgs[i + 1] = imgs[i + 1], imgs[i]
    return Permutation(imgs, one_based=False)


def closure_components(word: Word) -> Tuple[int, List[int]]:
    """Number of closure components and the 1-based component of each strand.

    Components are numbered by their smallest strand.
    """
    cycles = underlying_permutation(word).cycles()
    comp = [0] * word.n
    for k, cyc in enumerate(cycles, start=1):
        for strand in cyc:
            comp[strand - 1] = k
    return len(cycles), comp


def random_word(n: int, length: int, alphabet: Iterable[str], seed: int) -> Word:
    if n < 1:
        raise ValueError("need at least one strand")
    kinds = sorted(set(alphabet))
    for k in kinds:
        if k not in KINDS:
            raise ValueError(f"unknown generator kind {k!r}")
    rng = random.Random(seed)
    if n == 1 or not kinds:
        return Word(n)
    toks = [GenTok(rng.choice(kinds), rng.randint(1, n - 1)) for _ in range(length)]
    return Word(n, toks)


def random_singular_word(rng: random.Random, n: int, length: int, max_tau: int) -> Word:
    """Word over sigma, sigma_inv, tau with at most ``max_tau`` singular tokens."""
    if n == 1:
        return Word(1)
    toks = []
    taus = 0
    for _ in range(length):
        kinds = ["sigma", "sigma_inv"] + (["tau"] if taus < max_tau else [])
        kind = rng.choice(kinds)
        taus += kind == "tau"
        toks.append(GenTok(kind, rng.randint(1, n - 1)))
    return Word(n, toks)


# -- Markov moves ----------------------------------------------------------


def conjugate(word: Word, k: int) -> Word:
    """Cyclic rotation: move the first ``k`` tokens to the end."""
    k %= max(len(word.toks), 1)
    return Word(word.n, word.toks[k:] + word.toks[:k])


def conjugate_by(word: Word, tok: GenTok) -> Word:
    """tok^-1 * word * tok, for an invertible token."""
    return Word(word.n, (tok.inverse(),) + word.toks + (tok,))


def stabilize(word: Word, positive: bool = True) -> Word:
    """word * sigma_n^{+-1} on n + 1 strands."""
    kind = "sigma" if positive else "sigma_inv"
    return Word(word.n + 1, word.toks + (GenTok(kind, word.n),))
