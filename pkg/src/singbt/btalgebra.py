"""The two-parameter bt-algebra E_n(u, v), its Markov trace and the invariants.

Elements are stored on the basis E_I T_w (I a set partition, w a permutation),
keyed internally by the raw tuples ``(code, images)`` of the partition and the
0-based permutation.  Coefficients are :class:`~singbt.scalars.Laurent`
polynomials with ``w`` free; the relation w^2 = W is applied when a trace value
is turned into a :class:`~singbt.scalars.Scalar`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Tuple

from .braids import Word, closure_components
from .partitions import (
    Permutation,
    SetPartition,
    _apply_codes,
    _canonical,
    _join_codes,
)
from .scalars import Laurent, RationalFunction, Scalar

Key = Tuple[Tuple[int, ...], Tuple[int, ...]]

ONE = Laurent.const(1)
U = Laurent.var("u")
V = Laurent.var("v")
A = Laurent.var("a")
B = Laurent.var("b")
W = Laurent.var("w")
W_INV = Laurent.var("w", -1)
X = Laurent.var("x")
Y = Laurent.var("y")
Z = Laurent.var("z")
U_INV = Laurent.var("u", -1)

U_M1 = U - ONE
V_M1 = V - ONE


@dataclass(frozen=True)
class BasisKey:
    ties: SetPartition
    perm: Permutation

    @classmethod
    def from_raw(cls, key: Key) -> "BasisKey":
        code, imgs = key
        return cls(SetPartition._trusted(len(code), code), Permutation._trusted(imgs))

    def raw(self) -> Key:
        return (self.ties.code, self.perm.images)


# ---------------------------------------------------------------------------
# Raw basis arithmetic
# ---------------------------------------------------------------------------


def _pair_code(n: int, p: int, q: int) -> Tuple[int, ...]:
    """RGS of the partition whose only block is {p, q} (0-based points)."""
    labels = list(range(n))
    labels[max(p, q)] = min(p, q)
    return _canonical(labels)


def _discrete(n: int) -> Tuple[int, ...]:
    return tuple(range(n))


def _swap(imgs: Tuple[int, ...], j: int) -> Tuple[int, ...]:
    """imgs * s_{j+1}: swap positions j and j+1."""
    out = list(imgs)
    out[j], out[j + 1] = out[j + 1], out[j]
    return tuple(out)


def _acc(target: Dict, key, coeff: Laurent) -> None:
    cur = target.get(key)
    if cur is None:
        if coeff.terms:
            target[key] = coeff
        return
    new = cur + coeff
    if new.terms:
        target[key] = new
    else:
        del target[key]


def _right_R(state: Dict[Key, Laurent], j: int) -> Dict[Key, Laurent]:
    """Multiply every basis term on the right by R_{j+1} (0-based j)."""
    out: Dict[Key, Laurent] = {}
    for (code, x), c in state.items():
        xs = _swap(x, j)
        if x[j] < x[j + 1]:
            _acc(out, (code, xs), c)
        else:
            tied = _join_codes(code, _pair_code(len(x), x[j], x[j + 1]))
            _acc(out, (code, xs), c)
            _acc(out, (tied, xs), c * U_M1)
            _acc(out, (tied, x), c * V_M1)
    return out


def _reduced_word(imgs: Tuple[int, ...]) -> List[int]:
    """0-based indices j_1..j_k with imgs = s_{j_1} ... s_{j_k}."""
    arr = list(imgs)
    word = []
    while True:
        for j in range(len(arr) - 1):
            if arr[j] > arr[j + 1]:
                arr[j], arr[j + 1] = arr[j + 1], arr[j]
                word.append(j)
                break
        else:
            break
    word.reverse()
    return word


@lru_cache(maxsize=1 << 16)
def _tt(w: Tuple[int, ...], v: Tuple[int, ...]) -> Tuple[Tuple[Key, Laurent], ...]:
    """T_w T_v expanded on the basis, as ((ties code, perm), coeff) pairs."""
    state: Dict[Key, Laurent] = {(_discrete(len(w)), w): ONE}
    for j in _reduced_word(v):
        state = _right_R(state, j)
    return tuple(state.items())


@lru_cache(maxsize=1 << 18)
def _key_mul(k1: Key, k2: Key) -> Tuple[Tuple[Key, Laurent], ...]:
    """(E_I T_w)(E_J T_v) = E_{I v w(J)} T_w T_v."""
    (ci, w), (cj, v) = k1, k2
    base = _join_codes(ci, _apply_codes(w, cj))
    out: Dict[Key, Laurent] = {}
    for (p, x), c in _tt(w, v):
        _acc(out, (_join_codes(base, p), x), c)
    return tuple(out.items())


# ---------------------------------------------------------------------------
# Elements
# ---------------------------------------------------------------------------


def _coerce_laurent(c) -> Laurent:
    if isinstance(c, Laurent):
        return c
    return Laurent.const(c)


class AlgebraElement:
    """Finite linear combination of basis elements E_I T_w at level n."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Optional[Dict[Key, Laurent]] = None):
        self.n = n
        self.terms = {k: c for k, c in (terms or {}).items() if c.terms}

    # -- constructors -----------------------------------------------------
    @classmethod
    def unit(cls, n: int) -> "AlgebraElement":
        return cls(n, {(_discrete(n), _discrete(n)): ONE})

    @classmethod
    def zero(cls, n: int) -> "AlgebraElement":
        return cls(n)

    @classmethod
    def basis(cls, n: int, ties: SetPartition, perm: Permutation, coeff=1) -> "AlgebraElement":
        if ties.n != n or perm.n != n:
            raise ValueError("basis key does not live at this level")
        return cls(n, {(ties.code, perm.images): _coerce_laurent(coeff)})

    @classmethod
    def scalar(cls, n: int, coeff) -> "AlgebraElement":
        return cls(n, {(_discrete(n), _discrete(n)): _coerce_laurent(coeff)})

    @classmethod
    def ties(cls, J: SetPartition) -> "AlgebraElement":
        """E_J."""
        return cls(J.n, {(J.code, _discrete(J.n)): ONE})

    # -- arithmetic -------------------------------------------------------
    def _same(self, other: "AlgebraElement") -> None:
        if self.n != other.n:
            raise ValueError(f"level mismatch: {self.n} vs {other.n}")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._same(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _acc(out, k, c)
        return AlgebraElement(self.n, out)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def scale(self, coeff) -> "AlgebraElement":
        coeff = _coerce_laurent(coeff)
        return AlgebraElement(self.n, {k: c * coeff for k, c in self.terms.items()})

    def __mul__(self, other) -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return self.scale(other)
        self._same(other)
        out: Dict[Key, Laurent] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                c12 = c1 * c2
                for k, pc in _key_mul(k1, k2):
                    _acc(out, k, c12 * pc)
        return AlgebraElement(self.n, out)

    def __rmul__(self, other) -> "AlgebraElement":
        return self.scale(other)

    # -- structure --------------------------------------------------------
    def is_zero(self) -> bool:
        """Exact test, reducing coefficients with w^2 = W."""
        return all(c.to_scalar().is_zero() for c in self.terms.values())

    def equals(self, other: "AlgebraElement") -> bool:
        self._same(other)
        return (self - other).is_zero()

    def basis_terms(self) -> List[Tuple[BasisKey, Scalar]]:
        return [(BasisKey.from_raw(k), c.to_scalar()) for k, c in sorted(self.terms.items())]

    def coefficient(self, ties: SetPartition, perm: Permutation) -> Scalar:
        c = self.terms.get((ties.code, perm.images))
        return c.to_scalar() if c is not None else Scalar()

    def extend(self, m: int) -> "AlgebraElement":
        """Image under the inclusion E_n -> E_m."""
        if m < self.n:
            raise ValueError("cannot embed into a smaller level")
        pad = tuple(range(self.n, m))
        out = {}
        for (code, imgs), c in self.terms.items():
            top = max(code, default=-1) + 1
            out[(code + tuple(range(top, top + m - self.n)), imgs + pad)] = c
        return AlgebraElement(m, out)

    def trace_laurent(self, **options) -> Laurent:
        opts = TraceOptions(**options)
        total = Laurent()
        for (code, imgs), c in self.terms.items():
            total.iadd(c * _trace_key(code, imgs, opts))
        return total

    def trace(self, **options) -> Scalar:
        return self.trace_laurent(**options).to_scalar()

    def __repr__(self) -> str:
        return f"AlgebraElement(n={self.n}, {len(self.terms)} terms)"


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------


def _check_index(n: int, i: int) -> None:
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for level {n}")


def gen_R(n: int, i: int) -> AlgebraElement:
    _check_index(n, i)
    return AlgebraElement(n, {(_discrete(n), _swap(_discrete(n), i - 1)): ONE})


def gen_E(n: int, i: int) -> AlgebraElement:
    _check_index(n, i)
    return AlgebraElement(n, {(_pair_code(n, i - 1, i), _discrete(n)): ONE})


def gen_Rinv(n: int, i: int) -> AlgebraElement:
    """R_i^{-1} = R_i + (1 - v)/u E_i + (1/u - 1) E_i R_i."""
    _check_index(n, i)
    ident, s = _discrete(n), _swap(_discrete(n), i - 1)
    mu = _pair_code(n, i - 1, i)
    return AlgebraElement(n, {
        (ident, s): ONE,
        (mu, ident): (ONE - V) * U_INV,
        (mu, s): U_INV - ONE,
    })


def elem_generator(n: int, which: str, i: int) -> AlgebraElement:
    table = {"R": gen_R, "E": gen_E, "Rinv": gen_Rinv}
    if which not in table:
        raise ValueError(f"unknown generator {which!r}")
    return table[which](n, i)


def T(perm: Permutation) -> AlgebraElement:
    """T_w along a reduced word."""
    n = perm.n
    return AlgebraElement(n, {k: c for k, c in _tt(_discrete(n), perm.images)})


def T_inverse(perm: Permutation) -> AlgebraElement:
    n = perm.n
    out = AlgebraElement.unit(n)
    for j in reversed(_reduced_word(perm.images)):
        out = out * gen_Rinv(n, j + 1)
    return out


# ---------------------------------------------------------------------------
# Markov trace
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TraceOptions:
    """Choices inside the strand-reduction algorithm; all give the same trace.

    ``pick``: which partner of the top strand to peel off ("max" or "min").
    ``conjugator``: how to move that partner next to the top strand in the
    fixed-top case ("cycle" s_j...s_{n-2}, or the transposition (j n-1)).
    ``coset``: how to split off R_{n-1} when the top strand moves
    ("right": w = a s_{n-1}...s_m, "left": w = s_k...s_{n-1} a).
    """

    pick: str = "max"
    conjugator: str = "cycle"
    coset: str = "right"

    def __post_init__(self):
        if self.pick not in ("max", "min"):
            raise ValueError("pick must be 'max' or 'min'")
        if self.conjugator not in ("cycle", "transposition"):
            raise ValueError("conjugator must be 'cycle' or 'transposition'")
        if self.coset not in ("right", "left"):
            raise ValueError("coset must be 'right' or 'left'")


def _perm_from_word(n: int, word: Iterable[int]) -> Tuple[int, ...]:
    imgs = _discrete(n)
    for j in word:
        imgs = _swap(imgs, j)
    return imgs


def _compose(p: Tuple[int, ...], q: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple(p[k] for k in q)


def _invert(p: Tuple[int, ...]) -> Tuple[int, ...]:
    inv = [0] * len(p)
    for i, k in enumerate(p):
        inv[k] = i
    return tuple(inv)


def _drop_top(code: Tuple[int, ...]) -> Tuple[int, ...]:
    """Remove the last point from its block and forget it."""
    return _canonical(code[:-1])


def _choose(points: List[int], pick: str) -> int:
    return max(points) if pick == "max" else min(points)


def _trace_elem_raw(terms: Dict[Key, Laurent], opts: TraceOptions) -> Laurent:
    total = Laurent()
    for (code, imgs), c in terms.items():
        total.iadd(c * _trace_key(code, imgs, opts))
    return total


@lru_cache(maxsize=None)
def _trace_key(code: Tuple[int, ...], w: Tuple[int, ...], opts: TraceOptions) -> Laurent:
    n = len(w)
    if n <= 1:
        return ONE
    top = n - 1
    if w[top] == top:
        partners = [k for k in range(top) if code[k] == code[top]]
        if not partners:
            return _trace_key(code[:-1], w[:-1], opts)
        # E_I = E_{I-} E_{j,n};  E_{j,n} = T_c E_{n-1} T_c^{-1} with c(n-1) = j
        j = _choose(partners, opts.pick)
        m = n - 1
        if opts.conjugator == "cycle":
            c_imgs = _perm_from_word(m, range(j, m - 1))
        else:
            c_list = list(range(m))
            c_list[j], c_list[m - 1] = c_list[m - 1], c_list[j]
            c_imgs = tuple(c_list)
        c = Permutation._trusted(c_imgs)
        body = AlgebraElement(m, {(_drop_top(code), w[:-1]): ONE})
        z = T_inverse(c) * body * T(c)
        return B * _trace_elem_raw(z.terms, opts)
    # the top strand moves: T_w = T_a R_{n-1} T_b with a, b fixing it
    if opts.coset == "right":
        mm = w.index(top)  # w^{-1}(n)
        tail = _perm_from_word(n, range(top - 1, mm - 1, -1))  # s_{n-1} ... s_m
        a_perm = _compose(w, _invert(tail))
        b_perm = _perm_from_word(n, range(top - 2, mm - 1, -1))  # s_{n-2} ... s_m
        # Tr(E_I T_a R T_b) = Tr(E_{b(I)} T_b T_a R)
        first, second, ties = b_perm, a_perm, _apply_codes(b_perm, code)
    else:
        k = w[top]  # w(n)
        head = _perm_from_word(n, range(k, top))  # s_k ... s_{n-1}
        a_perm = _compose(_invert(head), w)
        b_perm = _perm_from_word(n, range(k, top - 1))  # s_k ... s_{n-2}
        # Tr(E_I T_b R T_a) = Tr(E_{a(I)} T_a T_b R)
        first, second, ties = a_perm, b_perm, _apply_codes(a_perm, code)
    total = Laurent()
    for (p, v), coeff in _tt(first, second):
        K = _join_codes(ties, p)
        # E_K T_v R_{n-1} = T_v E_{K'} R_{n-1} with K' = v^{-1}(K)
        k_prime = _apply_codes(_invert(v), K)
        partners = [q for q in range(top) if k_prime[q] == k_prime[top]]
        base = _drop_top(K)
        if partners:
            j = _choose(partners, opts.pick)
            if j != top - 1:
                base = _join_codes(base, _pair_code(top, j, top - 1))
        total.iadd(coeff * _trace_key(base, v[:-1], opts))
    return A * total


def trace_basis(ties: SetPartition, perm: Permutation, **options) -> Scalar:
    return _trace_key(ties.code, perm.images, TraceOptions(**options)).to_scalar()


def elem_trace(x: AlgebraElement, **options) -> Scalar:
    return x.trace(**options)


# ---------------------------------------------------------------------------
# Representations and invariants
# ---------------------------------------------------------------------------

REPR_MODES = ("rho", "varrho")


@lru_cache(maxsize=4096)
def _token_image(n: int, kind: str, i: int, mode: str) -> AlgebraElement:
    if kind == "sigma":
        return gen_R(n, i).scale(W)
    if kind == "sigma_inv":
        return gen_Rinv(n, i).scale(W_INV)
    if kind == "tie":
        return gen_E(n, i)
    if kind == "tau":
        if mode == "rho":
            return (AlgebraElement.scalar(n, X) + gen_R(n, i).scale(Y * W)
                    + gen_Rinv(n, i).scale(Z * W_INV))
        e = gen_E(n, i)
        return e.scale(X) + (e * gen_R(n, i)).scale(Y * W)
    raise ValueError(f"unknown token kind {kind!r}")


def repr_rho(word: Word, mode: str = "rho") -> AlgebraElement:
    """Image of a (tied) singular braid word under rho or varrho."""
    if mode not in REPR_MODES:
        raise ValueError(f"mode must be one of {REPR_MODES}")
    out = AlgebraElement.unit(word.n)
    for t in word.toks:
        out = out * _token_image(word.n, t.kind, t.index, mode)
    return out


def strand_ties(word: Word, components_partition: SetPartition) -> SetPartition:
    """Pull a partition of closure components back to the strands."""
    count, comp = closure_components(word)
    if components_partition.n != count:
        raise ValueError(
            f"partition has {components_partition.n} points but the closure has {count} components"
        )
    return SetPartition.from_labels([components_partition.code[c - 1] for c in comp])


INVARIANT_MODES = {"upsilon": "rho", "upsilon_prime": "varrho"}


def normalization(n: int) -> Laurent:
    """(1/(a w))^(n-1)."""
    return Laurent.monomial(1, a=-(n - 1), w=-(n - 1))


def invariant_laurent(word: Word, components_partition: Optional[SetPartition] = None,
                      mode: str = "upsilon", **options) -> Laurent:
    if mode not in INVARIANT_MODES:
        raise ValueError(f"mode must be one of {sorted(INVARIANT_MODES)}")
    elem = repr_rho(word, INVARIANT_MODES[mode])
    if components_partition is not None:
        elem = AlgebraElement.ties(strand_ties(word, components_partition)) * elem
    return elem.trace_laurent(**options) * normalization(word.n)


def invariant(word: Word, components_partition: Optional[SetPartition] = None,
              mode: str = "upsilon", **options) -> Scalar:
    """Upsilon (mode "upsilon") or Upsilon' ("upsilon_prime") of the closure.

    With a partition of the closure components the tied version is computed:
    strands whose components share a block are tied before taking the trace.
    """
    return invariant_laurent(word, components_partition, mode, **options).to_scalar()


def _rf(text: str) -> RationalFunction:
    from .scalars import parse_scalar

    return parse_scalar(text).as_rational()


SPECIALIZATIONS = {
    "psi": {"z": "0", "v": "u"},
    "psi_prime": {"z": "0", "u": "1", "v": "s - 1/s + 1"},
}


def specialize_invariant(value: Scalar, which: str) -> Scalar:
    if which not in SPECIALIZATIONS:
        raise ValueError(f"unknown specialization {which!r}")
    return value.substitute({k: _rf(t) for k, t in SPECIALIZATIONS[which].items()})


# ---------------------------------------------------------------------------
# Defining relations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RelationResult:
    relation: str
    indices: Tuple[int, ...]
    route: str
    passed: bool

    def __str__(self) -> str:
        idx = ",".join(map(str, self.indices))
        return f"{self.relation}({idx}) [{self.route}]: {'pass' if self.passed else 'FAIL'}"


def _w(n: int, text: str) -> Word:
    return Word.parse(text, n)


def monoid_relations(n: int) -> List[Tuple[str, Tuple[int, ...], str, str]]:
    """All instances (name, indices, lhs word, rhs word) at n strands."""
    rels = []
    idx = range(1, n)
    for i in idx:
        for j in idx:
            d = abs(i - j)
            if d >= 2:
                rels.append(("B1", (i, j), f"s{i} s{j}", f"s{j} s{i}"))
            if d == 1:
                rels.append(("B2", (i, j), f"s{i} s{j} s{i}", f"s{j} s{i} s{j}"))
            if d != 1:
                rels.append(("SB1", (i, j), f"s{i} t{j}", f"t{j} s{i}"))
            if d == 1:
                rels.append(("SB2", (i, j), f"s{i} s{j} t{i}", f"t{j} s{i} s{j}"))
            if d >= 2:
                rels.append(("SB3", (i, j), f"t{i} t{j}", f"t{j} t{i}"))
            rels.append(("TS1", (i, j), f"e{i} e{j}", f"e{j} e{i}"))
            if d > 1:
                rels.append(("TS2", (i, j), f"e{i} s{j}", f"s{j} e{i}"))
            if d == 1:
                rels.append(("TS3", (i, j), f"e{i} s{j} s{i}", f"s{j} s{i} e{j}"))
                rels.append(("TS3", (i, j), f"e{i} e{j} s{i}", f"e{j} s{i} e{j}"))
                rels.append(("TS3", (i, j), f"e{j} s{i} e{j}", f"s{i} e{i} e{j}"))
                rels.append(("TS4", (i, j), f"e{i} s{j} s{i}^-1", f"s{j} s{i}^-1 e{j}"))
            if d != 1:
                rels.append(("TSB1", (i, j), f"t{i} e{j}", f"e{j} t{i}"))
            if d == 1:
                rels.append(("TSB2", (i, j), f"e{i} t{j} t{i}", f"t{j} t{i} e{j}"))
                rels.append(("TSB2", (i, j), f"e{i} t{j} s{i}", f"t{j} s{i} e{j}"))
                rels.append(("TSB2", (i, j), f"e{i} s{j} t{i}", f"s{j} t{i} e{j}"))
                rels.append(("TSB3", (i, j), f"e{i} e{j} t{i}", f"e{j} t{i} e{j}"))
                rels.append(("TSB3", (i, j), f"e{j} t{i} e{j}", f"t{i} e{i} e{j}"))
                rels.append(("TSB3", (i, j), f"t{i} e{j}", f"s{i} e{j} s{i}^-1 t{i}"))
        rels.append(("TS1", (i,), f"e{i} e{i}", f"e{i}"))
        rels.append(("TS1", (i,), f"e{i} s{i}", f"s{i} e{i}"))
        rels.append(("B0", (i,), f"s{i} s{i}^-1", ""))
    return rels


def algebra_relations(n: int) -> List[Tuple[str, Tuple[int, ...], AlgebraElement, AlgebraElement]]:
    R = {i: gen_R(n, i) for i in range(1, n)}
    E = {i: gen_E(n, i) for i in range(1, n)}
    Ri = {i: gen_Rinv(n, i) for i in range(1, n)}
    one = AlgebraElement.unit(n)
    rels = []
    for i in range(1, n):
        for j in range(1, n):
            d = abs(i - j)
            if d >= 2:
                rels.append(("bt1", (i, j), E[i] * E[j], E[j] * E[i]))
                rels.append(("bt7", (i, j), R[i] * R[j], R[j] * R[i]))
            if d != 1:
                rels.append(("bt3", (i, j), E[i] * R[j], R[j] * E[i]))
            if d == 1:
                rels.append(("bt5", (i, j), E[i] * R[j] * R[i], R[j] * R[i] * E[j]))
                rels.append(("bt6", (i, j), E[i] * E[j] * R[i], E[j] * R[i] * E[j]))
                rels.append(("bt6", (i, j), E[j] * R[i] * E[j], R[i] * E[i] * E[j]))
                rels.append(("bt8", (i, j), R[j] * R[i] * R[j], R[i] * R[j] * R[i]))
        rels.append(("bt2", (i,), E[i] * E[i], E[i]))
        rels.append(("bt9", (i,), R[i] * R[i],
                     one + E[i].scale(U_M1) + (E[i] * R[i]).scale(V_M1)))
        rels.append(("inverse", (i,), R[i] * Ri[i], one))
        rels.append(("inverse", (i,), Ri[i] * R[i], one))
        rels.append(("tie-inverse", (i,), E[i] * Ri[i],
                     E[i].scale((ONE - V) * U_INV) + (E[i] * R[i]).scale(U_INV)))
    return rels


def check_defining_relations(n: int, big: bool = False) -> List[RelationResult]:
    """Check every relation instance at level n under rho~, varrho~ and directly."""
    if n > 5 and not big:
        raise ValueError("relation check is limited to n <= 5")
    results = []
    for name, indices, lhs, rhs in monoid_relations(n):
        for mode in REPR_MODES:
            ok = repr_rho(_w(n, lhs), mode).equals(repr_rho(_w(n, rhs), mode))
            results.append(RelationResult(name, indices, mode, ok))
    for name, indices, lhs, rhs in algebra_relations(n):
        results.append(RelationResult(name, indices, "direct", lhs.equals(rhs)))
    return results


def all_basis_keys(n: int) -> List[BasisKey]:
    from .partitions import all_permutations, enumerate_partitions

    return [BasisKey(p, w) for p in enumerate_partitions(n) for w in all_permutations(n)]
