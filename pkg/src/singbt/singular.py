"""The singular bt-algebra through its graded trace.

A degree-d element is a word in R_i, R_i^{-1}, E_i and d singular generators
S_i, optionally preceded by a tie partition E_J.  It has no normal form here;
the graded trace consumes it by resolving one S at a time:

    tr^(d)(alpha) = tr^(d-1)(x theta_0(alpha) + y w theta_1(alpha) + z w^-1 theta_-1(alpha))

down to the bt-algebra trace at degree 0.

Braid words enter with sigma_i -> R_i, so a braid word carries an extra
w^(exponent sum) relative to its image under rho; :func:`upsilon_hat` and
:func:`verify_equivalence` put that factor back.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .braids import GenTok, Word
from .btalgebra import (
    A,
    AlgebraElement,
    W,
    W_INV,
    X,
    Y,
    Z,
    gen_E,
    gen_R,
    gen_Rinv,
    normalization,
    repr_rho,
    strand_ties,
    TraceOptions,
)
from .partitions import SetPartition
from .scalars import Laurent, Scalar

TOKEN_KINDS = ("R", "Rinv", "E", "S")
RESOLUTIONS = (0, 1, -1)

Tok = Tuple[str, int]


class GradedWord:
    """Word over R_i, Rinv_i, E_i, S_i on ``n`` strands, with optional leading ties."""

    __slots__ = ("n", "toks", "ties")

    def __init__(self, n: int, toks: Iterable[Tok] = (), ties: Optional[SetPartition] = None):
        toks = tuple((str(k), int(i)) for k, i in toks)
        for kind, i in toks:
            if kind not in TOKEN_KINDS:
                raise ValueError(f"unknown token kind {kind!r}")
            if not 1 <= i <= n - 1:
                raise ValueError(f"token index {i} out of range for {n} strands")
        if ties is not None and ties.n != n:
            raise ValueError("tie partition lives on the wrong number of strands")
        if ties is not None and ties.is_discrete():
            ties = None
        self.n = n
        self.toks = toks
        self.ties = ties

    @classmethod
    def parse(cls, text: str, n: Optional[int] = None) -> "GradedWord":
        """Tokens ``R1``, ``R1^-1``, ``E2``, ``S3``."""
        toks = []
        for part in text.split():
            if part.endswith("^-1"):
                if part[0] != "R":
                    raise ValueError(f"only R can be inverted: {part!r}")
                toks.append(("Rinv", int(part[1:-3])))
            elif part[0] in "RES" and part[1:].isdigit():
                toks.append((part[0], int(part[1:])))
            else:
                raise ValueError(f"bad graded token {part!r}")
        if n is None:
            n = 1 + max((i for _, i in toks), default=0)
        return cls(n, toks)

    @classmethod
    def from_word(cls, word: Word, ties: Optional[SetPartition] = None) -> "GradedWord":
        """pi: sigma -> R, sigma^-1 -> R^-1, tau -> S, e -> E."""
        table = {"sigma": "R", "sigma_inv": "Rinv", "tau": "S", "tie": "E"}
        return cls(word.n, [(table[t.kind], t.index) for t in word.toks], ties)

    def to_word(self) -> Word:
        table = {"R": "sigma", "Rinv": "sigma_inv", "S": "tau", "E": "tie"}
        return Word(self.n, [GenTok(table[k], i) for k, i in self.toks])

    @property
    def d(self) -> int:
        return sum(1 for k, _ in self.toks if k == "S")

    def exponent_sum(self) -> int:
        return sum(1 if k == "R" else -1 for k, _ in self.toks if k in ("R", "Rinv"))

    def _key(self):
        return (self.n, self.toks, self.ties.code if self.ties is not None else None)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedWord):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __add__(self, other: "GradedWord") -> "GradedWord":
        if self.n != other.n or other.ties is not None:
            raise ValueError("can only append a tie-free word on the same strands")
        return GradedWord(self.n, self.toks + other.toks, self.ties)

    def __str__(self) -> str:
        body = " ".join(f"R{i}^-1" if k == "Rinv" else f"{k}{i}" for k, i in self.toks)
        if self.ties is not None:
            return f"[{self.ties}] {body}".rstrip()
        return body

    def __repr__(self) -> str:
        return f"GradedWord({self.n}, {str(self)!r})"


def _replace(toks: Tuple[Tok, ...], pos: int, r: int) -> Tuple[Tok, ...]:
    i = toks[pos][1]
    if r == 0:
        return toks[:pos] + toks[pos + 1:]
    return toks[:pos] + (("R" if r == 1 else "Rinv", i),) + toks[pos + 1:]


def _s_positions(toks: Sequence[Tok]) -> List[int]:
    return [p for p, (k, _) in enumerate(toks) if k == "S"]


def theta_r(alpha: GradedWord, r: int) -> List[GradedWord]:
    """The d words alpha_{r,k}: the k-th S replaced by R^r (deleted for r = 0)."""
    if r not in RESOLUTIONS:
        raise ValueError("r must be 0, 1 or -1")
    positions = _s_positions(alpha.toks)
    if not positions:
        raise ValueError("theta_r needs at least one singular generator")
    return [GradedWord(alpha.n, _replace(alpha.toks, p, r), alpha.ties) for p in positions]


def content_laurent(uvec: Sequence[int]) -> Laurent:
    e0 = sum(1 for r in uvec if r == 0)
    e1 = sum(1 for r in uvec if r == 1)
    em = sum(1 for r in uvec if r == -1)
    return Laurent.monomial(1, x=e0, y=e1, z=em, w=e1 - em)


def u_substitute(alpha: GradedWord, uvec: Sequence[int]) -> Tuple[GradedWord, Scalar]:
    """u(alpha) and its content lambda_u."""
    positions = _s_positions(alpha.toks)
    if len(uvec) != len(positions):
        raise ValueError(f"resolution vector has length {len(uvec)}, word has degree {len(positions)}")
    for r in uvec:
        if r not in RESOLUTIONS:
            raise ValueError("resolution entries must be 0, 1 or -1")
    toks = alpha.toks
    # right to left so earlier positions stay valid after deletions
    for p, r in sorted(zip(positions, uvec), reverse=True):
        toks = _replace(toks, p, r)
    return GradedWord(alpha.n, toks, alpha.ties), content_laurent(uvec).to_scalar()


def evaluate_degree0(alpha: GradedWord) -> AlgebraElement:
    """The element of E_n(u, v) denoted by a word without S."""
    n = alpha.n
    out = AlgebraElement.ties(alpha.ties) if alpha.ties is not None else AlgebraElement.unit(n)
    gens = {"R": gen_R, "Rinv": gen_Rinv, "E": gen_E}
    for kind, i in alpha.toks:
        if kind == "S":
            raise ValueError("word still contains a singular generator")
        out = out * gens[kind](n, i)
    return out


def evaluate_singular(alpha: GradedWord) -> AlgebraElement:
    """Image in E_n(u, v) under S_i -> x + y w R_i + z w^-1 R_i^-1."""
    n = alpha.n
    out = AlgebraElement.ties(alpha.ties) if alpha.ties is not None else AlgebraElement.unit(n)
    for kind, i in alpha.toks:
        if kind == "R":
            out = out * gen_R(n, i)
        elif kind == "Rinv":
            out = out * gen_Rinv(n, i)
        elif kind == "E":
            out = out * gen_E(n, i)
        else:
            out = out * (AlgebraElement.scalar(n, X) + gen_R(n, i).scale(Y * W)
                         + gen_Rinv(n, i).scale(Z * W_INV))
    return out


_WEIGHTS = ((0, X), (1, Y * W), (-1, Z * W_INV))


@lru_cache(maxsize=1 << 16)
def _graded(n: int, toks: Tuple[Tok, ...], ties_code, opts: TraceOptions) -> Laurent:
    positions = _s_positions(toks)
    if not positions:
        ties = SetPartition._trusted(n, ties_code) if ties_code is not None else None
        return evaluate_degree0(GradedWord(n, toks, ties)).trace_laurent(
            pick=opts.pick, conjugator=opts.conjugator, coset=opts.coset)
    total = Laurent()
    for p in positions:
        for r, weight in _WEIGHTS:
            total.iadd(weight * _graded(n, _replace(toks, p, r), ties_code, opts))
    return total


MAX_DEGREE = 4


def graded_trace_laurent(alpha: GradedWord, big: bool = False, **options) -> Laurent:
    if alpha.d > MAX_DEGREE and not big:
        raise ValueError(f"graded trace is limited to degree <= {MAX_DEGREE}")
    ties_code = alpha.ties.code if alpha.ties is not None else None
    return _graded(alpha.n, alpha.toks, ties_code, TraceOptions(**options))


def graded_trace(alpha: GradedWord, big: bool = False, **options) -> Scalar:
    """tr^(d)(alpha)."""
    return graded_trace_laurent(alpha, big, **options).to_scalar()


def upsilon_hat(word: Word, components_partition: Optional[SetPartition] = None,
                big: bool = False) -> Scalar:
    """(1/(a w))^(n-1) tr^(d)(pi(alpha)) / d!, with pi(alpha) carrying w^(exponent sum)."""
    ties = strand_ties(word, components_partition) if components_partition is not None else None
    alpha = GradedWord.from_word(word, ties)
    value = graded_trace_laurent(alpha, big) * Laurent.var("w", alpha.exponent_sum())
    value = value * normalization(word.n)
    return value.scale(Fraction(1, factorial(alpha.d))).to_scalar()


def rho_route_laurent(alpha: GradedWord) -> Laurent:
    """Tr(rho~(alpha)) with the w per braid generator divided back out."""
    elem = repr_rho(alpha.to_word(), "rho")
    if alpha.ties is not None:
        elem = AlgebraElement.ties(alpha.ties) * elem
    return elem.trace_laurent() * Laurent.var("w", -alpha.exponent_sum())


def verify_equivalence(alpha: GradedWord) -> bool:
    """tr^(d)(alpha) == d! Tr(rho~(alpha)), computed along both routes."""
    lhs = graded_trace_laurent(alpha)
    rhs = rho_route_laurent(alpha).scale(factorial(alpha.d))
    return (lhs - rhs).to_scalar().is_zero()


def resolution_sum(alpha: GradedWord) -> Laurent:
    """sum over u in X^d of lambda_u Tr(u(alpha))."""
    total = Laurent()
    for uvec in product(RESOLUTIONS, repeat=alpha.d):
        word, _ = u_substitute(alpha, uvec)
        total.iadd(content_laurent(uvec) * evaluate_degree0(word).trace_laurent())
    return total


def sign_weight(r: int) -> Laurent:
    """sg(r): x, y w or z w^-1."""
    return dict(_WEIGHTS)[r]


def singular_relations(n: int) -> List[Tuple[str, Tuple[int, ...], GradedWord, GradedWord]]:
    """Instances of the extra relations of the singular bt-algebra at n strands."""
    rels = []
    P = lambda text: GradedWord.parse(text, n)  # noqa: E731
    idx = range(1, n)
    for i in idx:
        for j in idx:
            d = abs(i - j)
            if d != 1:
                rels.append(("Sbt1", (i, j), P(f"E{i} S{j}"), P(f"S{j} E{i}")))
                rels.append(("Sbt6", (i, j), P(f"S{i} S{j}"), P(f"S{j} S{i}")))
                rels.append(("Sbt7", (i, j), P(f"S{i} R{j}"), P(f"R{j} S{i}")))
            if d == 1:
                rels.append(("Sbt2", (i, j), P(f"E{i} S{j} S{i}"), P(f"S{j} S{i} E{j}")))
                rels.append(("Sbt3", (i, j), P(f"E{i} E{j} S{i}"), P(f"E{j} S{i} E{j}")))
                rels.append(("Sbt3", (i, j), P(f"E{j} S{i} E{j}"), P(f"S{i} E{i} E{j}")))
                rels.append(("Sbt4", (i, j), P(f"E{i} S{j} R{i}"), P(f"S{j} R{i} E{j}")))
                rels.append(("Sbt5", (i, j), P(f"E{i} R{j} S{i}"), P(f"R{j} S{i} E{j}")))
                rels.append(("Sbt8", (i, j), P(f"R{i} R{j} S{i}"), P(f"S{j} R{i} R{j}")))
    return rels
