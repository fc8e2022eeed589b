"""Verification suites shared by the command line and the test-suite.

Each suite returns a list of :class:`Outcome` rows; nothing is raised on a
failed identity.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from . import btalgebra as bt
from .braids import (
    GenTok,
    Word,
    closure_components,
    conjugate,
    conjugate_by,
    random_singular_word,
    stabilize,
    underlying_permutation,
)
from .partitions import (
    SetPartition,
    all_permutations,
    attach,
    drop,
    enumerate_partitions,
    merge,
    plus,
)
from .scalars import Laurent, Scalar
from .singular import GradedWord, graded_trace, upsilon_hat, verify_equivalence


@dataclass(frozen=True)
class Outcome:
    suite: str
    label: str
    passed: bool

    def __str__(self) -> str:
        return f"{'pass' if self.passed else 'FAIL'}  {self.suite}: {self.label}"


def _random_element(rng: random.Random, n: int, terms: int = 3) -> bt.AlgebraElement:
    parts = enumerate_partitions(n)
    perms = all_permutations(n)
    out = bt.AlgebraElement.zero(n)
    for _ in range(terms):
        c = rng.choice([-3, -2, -1, 1, 2, 3])
        out = out + bt.AlgebraElement.basis(n, rng.choice(parts), rng.choice(perms), c)
    return out


# ---------------------------------------------------------------------------
# Suites
# ---------------------------------------------------------------------------


def relations_suite(n: int = 4) -> List[Outcome]:
    return [Outcome("relations", f"{r.relation}{r.indices} [{r.route}]", r.passed)
            for r in bt.check_defining_relations(n)]


def trace_axioms_suite(count: int = 200, max_level: int = 4, seed: int = 11) -> List[Outcome]:
    """Markov rules on ``count`` random elements and cyclicity on ``count`` pairs."""
    rng = random.Random(seed)
    out = []
    a, b = bt.A.to_scalar(), bt.B.to_scalar()
    for k in range(count):
        n = rng.randint(1, max_level - 1)
        x = _random_element(rng, n)
        t = x.trace()
        up = x.extend(n + 1)
        r_n, e_n = bt.gen_R(n + 1, n), bt.gen_E(n + 1, n)
        ok = ((up * r_n).trace() == a * t
              and (up * e_n * r_n).trace() == a * t
              and (up * e_n).trace() == b * t
              and up.trace() == t)
        out.append(Outcome("trace", f"markov rules #{k} (level {n})", ok))
    out.append(Outcome("trace", "Tr(1) = 1", all(bt.AlgebraElement.unit(n).trace() == 1
                                               for n in range(1, max_level + 1))))
    for k in range(count):
        n = rng.randint(1, max_level)
        x, y = _random_element(rng, n), _random_element(rng, n)
        ok = (x * y).trace_laurent() - (y * x).trace_laurent()
        out.append(Outcome("trace", f"cyclicity #{k} (level {n})", ok.to_scalar().is_zero()))
    return out


def trace_choices_suite(count: int = 100, max_level: int = 4, seed: int = 13) -> List[Outcome]:
    """All reduction choices give the same trace on random basis elements."""
    rng = random.Random(seed)
    out = []
    variants = [dict(pick=p, conjugator=c, coset=s)
                for p in ("max", "min") for c in ("cycle", "transposition") for s in ("right", "left")]
    for k in range(count):
        n = rng.randint(2, max_level)
        ties = rng.choice(enumerate_partitions(n))
        perm = rng.choice(all_permutations(n))
        vals = [bt.trace_basis(ties, perm, **v) for v in variants]
        out.append(Outcome("trace-choices", f"#{k} ({ties!r}, {perm!r})", all(v == vals[0] for v in vals)))
    return out


def _stabilized_partition(word: Word, part: SetPartition, stab: Word) -> SetPartition:
    """Carry a component partition across stabilization (new strand joins strand n)."""
    _, comp = closure_components(word)
    _, comp2 = closure_components(stab)
    labels = [0] * max(comp2)
    for s in range(stab.n):
        labels[comp2[s] - 1] = part.code[comp[min(s, word.n - 1)] - 1]
    return SetPartition.from_labels(labels)


def _strand_partition(word: Word, part: Optional[SetPartition]) -> Optional[SetPartition]:
    return None if part is None else bt.strand_ties(word, part)


def _carry(word: Word, part: SetPartition, other: Word, strand_map: List[int]) -> SetPartition:
    """Partition on the components of ``other``; strand s of other sits on strand strand_map[s] of word."""
    _, comp = closure_components(word)
    _, comp2 = closure_components(other)
    labels = [0] * max(comp2)
    for s in range(other.n):
        labels[comp2[s] - 1] = part.code[comp[strand_map[s]] - 1]
    return SetPartition.from_labels(labels)


def markov_suite(count: int = 100, max_level: int = 4, max_len: int = 8, max_degree: int = 2,
                 seed: int = 17, tied: bool = False,
                 modes: Tuple[str, ...] = ("upsilon", "upsilon_prime")) -> List[Outcome]:
    """Conjugation and stabilization leave Upsilon and Upsilon' unchanged."""
    rng = random.Random(seed)
    out = []
    for k in range(count):
        n = rng.randint(1, max_level)
        word = random_singular_word(rng, n, rng.randint(0, max_len), max_degree)
        part = None
        if tied:
            cnt, _ = closure_components(word)
            part = rng.choice(enumerate_partitions(cnt))
        moves = []
        if word.toks:
            r = rng.randint(1, len(word.toks))
            rotated = conjugate(word, r)
            # the rotated word starts r tokens in; its strand s is strand perm_prefix(s) of the original
            prefix = underlying_permutation(Word(word.n, word.toks[:r]))
            moves.append(("rotation", rotated, [prefix(s + 1) - 1 for s in range(n)]))
        if n > 1:
            tok = GenTok(rng.choice(["sigma", "sigma_inv"]), rng.randint(1, n - 1))
            conj = conjugate_by(word, tok)
            # conj = tok^-1 word tok; its strand s is strand s_i(s) of word
            swap = underlying_permutation(Word(n, [tok]))
            moves.append(("conjugation", conj, [swap(s + 1) - 1 for s in range(n)]))
        for positive in (True, False):
            moves.append((f"stabilization{'+' if positive else '-'}", stabilize(word, positive), None))
        for mode in modes:
            base = bt.invariant(word, part, mode)
            for name, moved, smap in moves:
                mpart = None
                if part is not None:
                    if smap is None:
                        mpart = _stabilized_partition(word, part, moved)
                    else:
                        mpart = _carry(word, part, moved, smap)
                ok = bt.invariant(moved, mpart, mode) == base
                out.append(Outcome("markov", f"#{k} {mode} {name} [{word}]", ok))
    return out


def graded_suite(count: int = 50, max_level: int = 4, max_len: int = 10, max_degree: int = 3,
                 seed: int = 19) -> List[Outcome]:
    """tr^(d) = d! Tr(rho~) and Upsilon-hat = Upsilon~ on random words."""
    rng = random.Random(seed)
    out = []
    for k in range(count):
        n = rng.randint(2, max_level)
        word = random_singular_word(rng, n, rng.randint(1, max_len), max_degree)
        cnt, _ = closure_components(word)
        part = rng.choice(enumerate_partitions(cnt)) if k % 2 else None
        alpha = GradedWord.from_word(word, _strand_partition(word, part))
        out.append(Outcome("graded", f"#{k} equivalence d={alpha.d} [{word}]", verify_equivalence(alpha)))
        ok = upsilon_hat(word, part) == bt.invariant(word, part, "upsilon")
        out.append(Outcome("graded", f"#{k} hat = tilde [{word}]", ok))
    return out


# ---------------------------------------------------------------------------
# Skein relations
# ---------------------------------------------------------------------------


@dataclass
class SkeinTriple:
    """alpha X_i beta with X in {tau, sigma, sigma^-1, nothing}."""

    alpha: Word
    i: int
    beta: Word

    @property
    def n(self) -> int:
        return self.alpha.n

    def with_middle(self, kind: Optional[str]) -> Word:
        mid = () if kind is None else (GenTok(kind, self.i),)
        return Word(self.n, self.alpha.toks + mid + self.beta.toks)

    def crossing_strands(self) -> Tuple[int, int]:
        """Top strands p, q whose ties meet the crossing strands i, i + 1."""
        perm = underlying_permutation(self.alpha)
        return perm(self.i), perm(self.i + 1)

    def crossing_components(self) -> Tuple[int, int]:
        _, comp = closure_components(self.with_middle("sigma"))
        p, q = self.crossing_strands()
        return comp[p - 1], comp[q - 1]


def smoothing_partition(triple: SkeinTriple, part: SetPartition) -> Tuple[SetPartition, str]:
    """The partition on the components of L_0 built with the skein partition operations.

    Returns the partition and "merge" or "split".  Components of L_0 are numbered
    by their smallest strand, like every closure.
    """
    ci, cj = triple.crossing_components()
    k = part.n
    if ci != cj:
        lo, hi = min(ci, cj), max(ci, cj)
        # the merged component keeps the smaller label; later labels shift down
        return drop(part, lo, hi), "merge"
    # the component splits; the part holding its smallest strand keeps label ci,
    # the other part becomes the new point k + 1
    big = attach(part, ci)
    _, comp_plus = closure_components(triple.with_middle("sigma"))
    count0, comp0 = closure_components(triple.with_middle(None))
    smallest = min(s for s in range(1, triple.n + 1) if comp_plus[s - 1] == ci)
    keeper = comp0[smallest - 1]
    to_big = {}
    for s in range(1, triple.n + 1):
        c0 = comp0[s - 1]
        if comp_plus[s - 1] == ci:
            to_big[c0] = ci if c0 == keeper else k + 1
        else:
            to_big[c0] = comp_plus[s - 1]
    labels = [big.code[to_big[c] - 1] for c in range(1, count0 + 1)]
    return SetPartition.from_labels(labels), "split"


def random_triple(rng: random.Random, n: int, max_len: int, classical_alpha: bool,
                  max_degree: int = 2) -> SkeinTriple:
    if classical_alpha:
        alpha = random_singular_word(rng, n, rng.randint(0, max_len), 0)
    else:
        alpha = random_singular_word(rng, n, rng.randint(0, max_len), max_degree)
    beta = random_singular_word(rng, n, rng.randint(0, max_len), max_degree)
    return SkeinTriple(alpha, rng.randint(1, n - 1), beta)


def skein_rule3(triple: SkeinTriple, part: SetPartition, printed: bool = False) -> bool:
    """(1/w) Y(L+, I) - w Y(L-, I) against the tie-smoothing terms.

    The derived form pairs (v-1)/u with L_0 and (1 - 1/u)/w with L+ under I_{i,j};
    ``printed=True`` checks the coefficients the other way round.
    """
    w = Scalar.w()
    u, v = Scalar.var("u"), Scalar.var("v")
    lp, lm, l0 = triple.with_middle("sigma"), triple.with_middle("sigma_inv"), triple.with_middle(None)
    ci, cj = triple.crossing_components()
    merged = merge(part, ci, cj)
    smooth, _ = smoothing_partition(triple, part)
    lhs = bt.invariant(lp, part) / w - w * bt.invariant(lm, part)
    tie_plus = bt.invariant(lp, merged)
    tie_zero = bt.invariant(l0, smooth)
    c1 = (v - 1) / u
    c2 = (1 - 1 / u) / w
    if printed:
        rhs = c1 * tie_plus + c2 * tie_zero
    else:
        rhs = c1 * tie_zero + c2 * tie_plus
    return lhs == rhs


def desing_prime(triple: SkeinTriple, part: SetPartition) -> bool:
    """Y'(Lx, I) = x Y'(L0, I~_{i,j}) + y Y'(L+, I_{i,j})."""
    lx, lp, l0 = triple.with_middle("tau"), triple.with_middle("sigma"), triple.with_middle(None)
    ci, cj = triple.crossing_components()
    smooth, _ = smoothing_partition(triple, part)
    lhs = bt.invariant(lx, part, "upsilon_prime")
    rhs = (Scalar.var("x") * bt.invariant(l0, smooth, "upsilon_prime")
           + Scalar.var("y") * bt.invariant(lp, merge(part, ci, cj), "upsilon_prime"))
    return lhs == rhs


def desing_plain(triple: SkeinTriple) -> bool:
    """Y(Lx) = x Y(L0) + y Y(L+) + z Y(L-)."""
    lhs = bt.invariant(triple.with_middle("tau"))
    rhs = (Scalar.var("x") * bt.invariant(triple.with_middle(None))
           + Scalar.var("y") * bt.invariant(triple.with_middle("sigma"))
           + Scalar.var("z") * bt.invariant(triple.with_middle("sigma_inv")))
    return lhs == rhs


def desing_tied(triple: SkeinTriple, part: SetPartition, split_rule: str = "attach") -> bool:
    """Y~(Lx, I) = x Y~(L0, I*) + y Y~(L+, I) + z Y~(L-, I).

    For a crossing of two components I* is I~_{i,j}.  When the crossing belongs
    to one component, ``split_rule`` picks the partition of the smoothed link:
    "attach" ties the two new components, "plus" leaves the new one alone.
    """
    smooth, kind = smoothing_partition(triple, part)
    if kind == "split" and split_rule == "plus":
        count0, comp0 = closure_components(triple.with_middle(None))
        ci, _ = triple.crossing_components()
        _, comp_plus = closure_components(triple.with_middle("sigma"))
        smallest = min(s for s in range(1, triple.n + 1) if comp_plus[s - 1] == ci)
        keeper = comp0[smallest - 1]
        k = part.n
        big = plus(part)
        labels = []
        for c in range(1, count0 + 1):
            s = comp0.index(c) + 1
            lab = comp_plus[s - 1]
            if lab == ci and c != keeper:
                lab = k + 1
            labels.append(big.code[lab - 1])
        smooth = SetPartition.from_labels(labels)
    lhs = bt.invariant(triple.with_middle("tau"), part)
    rhs = (Scalar.var("x") * bt.invariant(triple.with_middle(None), smooth)
           + Scalar.var("y") * bt.invariant(triple.with_middle("sigma"), part)
           + Scalar.var("z") * bt.invariant(triple.with_middle("sigma_inv"), part))
    return lhs == rhs


def skein_suite(count: int = 50, max_level: int = 4, max_len: int = 4, seed: int = 23) -> List[Outcome]:
    rng = random.Random(seed)
    out = []
    for k in range(count):
        n = rng.randint(2, max_level)
        t3 = random_triple(rng, n, max_len, classical_alpha=True)
        cnt, _ = closure_components(t3.with_middle("sigma"))
        part = rng.choice(enumerate_partitions(cnt))
        out.append(Outcome("skein", f"#{k} tie skein relation", skein_rule3(t3, part)))
        t2 = random_triple(rng, n, max_len, classical_alpha=False)
        cnt, _ = closure_components(t2.with_middle("sigma"))
        part2 = rng.choice(enumerate_partitions(cnt))
        out.append(Outcome("skein", f"#{k} desingularization of Upsilon'", desing_prime(t2, part2)))
        t1 = random_triple(rng, n, max_len, classical_alpha=False)
        out.append(Outcome("skein", f"#{k} desingularization of Upsilon", desing_plain(t1)))
    return out


def tie_factor_suite(seed: int = 29, count: int = 10) -> List[Outcome]:
    """Y~(L u O, I~_{j,j}) = b/(a w) Y~(L, I)."""
    rng = random.Random(seed)
    out = []
    factor = Scalar.var("b") / (Scalar.var("a") * Scalar.w())
    for k in range(count):
        n = rng.randint(1, 3)
        word = random_singular_word(rng, n, rng.randint(0, 6), 2)
        cnt, _ = closure_components(word)
        part = rng.choice(enumerate_partitions(cnt))
        j = rng.randint(1, cnt)
        bigger = word.with_strands(n + 1)
        ok = bt.invariant(bigger, attach(part, j)) == factor * bt.invariant(word, part)
        out.append(Outcome("tie-factor", f"#{k} j={j} [{word}]", ok))
    return out


SUITES: Dict[str, Callable[[], List[Outcome]]] = {
    "relations": relations_suite,
    "trace": lambda: trace_axioms_suite() + trace_choices_suite(),
    # with ties only Upsilon' is conjugation invariant on singular words
    "markov": lambda: markov_suite() + markov_suite(count=40, seed=31, tied=True,
                                                    modes=("upsilon_prime",)),
    "graded": graded_suite,
    "skein": lambda: skein_suite() + tie_factor_suite(),
}


def run_suite(scope: str) -> List[Outcome]:
    if scope == "all":
        out = []
        for name in SUITES:
            out.extend(SUITES[name]())
        return out
    if scope not in SUITES:
        raise ValueError(f"unknown suite {scope!r}")
    return SUITES[scope]()
