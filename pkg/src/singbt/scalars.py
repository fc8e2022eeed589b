"""Exact coefficient arithmetic for the invariants.

Scalars live in Q(u, v, a, b, x, y, z, s)[w] / (w^2 - W) with
W = (a + (1 - v) b) / (a u).  A :class:`Scalar` is ``f0 + f1*w`` with two
:class:`RationalFunction` components.

The algebra code does not work with scalars directly: it carries
:class:`Laurent` coefficients (integer-exponent polynomials in the same
variables plus a free ``w``) and reduces them with :meth:`Laurent.to_scalar`
once a trace value is produced.  Evaluating at ``w = sqrt(W)`` is a ring
homomorphism, so reducing late gives the same value as reducing after every
step, and it keeps non-monomial denominators out of the inner loops.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Tuple, Union

VARIABLES: Tuple[str, ...] = ("u", "v", "a", "b", "x", "y", "z", "s")
NVARS = len(VARIABLES)
_INDEX = {name: k for k, name in enumerate(VARIABLES)}

Coeff = Union[int, Fraction]
Exps = Tuple[int, ...]


def _norm_coeff(c) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


# ---------------------------------------------------------------------------
# Polynomials with non-negative exponents
# ---------------------------------------------------------------------------


def _grlex_key(exps: Exps):
    return (sum(exps), exps)


class Polynomial:
    """Sparse polynomial over Q in the variables of :data:`VARIABLES`."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Exps, Coeff]] = None):
        clean: Dict[Exps, Coeff] = {}
        if terms:
            for exps, c in terms.items():
                if c:
                    if len(exps) != NVARS or min(exps) < 0:
                        raise ValueError(f"bad exponent vector {exps!r}")
                    clean[tuple(exps)] = _norm_coeff(c)
        self.terms = clean
        self._hash = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def constant(cls, c: Coeff) -> "Polynomial":
        return cls({(0,) * NVARS: c}) if c else cls()

    @classmethod
    def var(cls, name: str, power: int = 1) -> "Polynomial":
        exps = [0] * NVARS
        exps[_INDEX[name]] = power
        return cls({tuple(exps): 1})

    @classmethod
    def _raw(cls, terms: Dict[Exps, Coeff]) -> "Polynomial":
        p = cls.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return len(self.terms) == 1 and self.terms.get((0,) * NVARS) == 1

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def variables(self) -> set:
        out = set()
        for exps in self.terms:
            out.update(VARIABLES[k] for k, e in enumerate(exps) if e)
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other: "Polynomial") -> "Polynomial":
        out = dict(self.terms)
        for exps, c in other.terms.items():
            r = out.get(exps, 0) + c
            if r:
                out[exps] = _norm_coeff(r)
            else:
                out.pop(exps, None)
        return Polynomial._raw(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other)
        out: Dict[Exps, Coeff] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(p + q for p, q in zip(e1, e2))
                r = out.get(e, 0) + c1 * c2
                if r:
                    out[e] = r
                else:
                    del out[e]
        return Polynomial._raw({e: _norm_coeff(c) for e, c in out.items()})

    def scale(self, c: Coeff) -> "Polynomial":
        if not c:
            return Polynomial()
        return Polynomial._raw({e: _norm_coeff(v * c) for e, v in self.terms.items()})

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, exps: Exps) -> "Polynomial":
        """Multiply by the monomial with exponent vector ``exps``."""
        return Polynomial({tuple(p + q for p, q in zip(e, exps)): c for e, c in self.terms.items()})

    # -- structure --------------------------------------------------------
    def leading(self) -> Tuple[Exps, Coeff]:
        exps = max(self.terms, key=_grlex_key)
        return exps, self.terms[exps]

    def min_exponents(self) -> Exps:
        it = iter(self.terms)
        lo = list(next(it))
        for exps in it:
            for k in range(NVARS):
                if exps[k] < lo[k]:
                    lo[k] = exps[k]
        return tuple(lo)

    def exact_div(self, divisor: "Polynomial") -> Optional["Polynomial"]:
        """Quotient ``self / divisor`` if the division is exact, else None."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return Polynomial()
        lead_e, lead_c = divisor.leading()
        rest = dict(self.terms)
        quot: Dict[Exps, Coeff] = {}
        while rest:
            e = max(rest, key=_grlex_key)
            if any(p < q for p, q in zip(e, lead_e)):
                return None
            t_e = tuple(p - q for p, q in zip(e, lead_e))
            t_c = Fraction(rest[e]) / lead_c
            quot[t_e] = _norm_coeff(t_c)
            for de, dc in divisor.terms.items():
                k = tuple(p + q for p, q in zip(de, t_e))
                r = rest.get(k, 0) - t_c * dc
                if r:
                    rest[k] = _norm_coeff(r)
                else:
                    rest.pop(k, None)
        return Polynomial._raw(quot)

    def substitute(self, bindings: Mapping[str, "RationalFunction"]) -> "RationalFunction":
        total = RationalFunction.zero()
        powers: Dict[Tuple[int, int], RationalFunction] = {}
        for exps, c in self.terms.items():
            term = RationalFunction(Polynomial.constant(c))
            rest = list(exps)
            for k, e in enumerate(exps):
                name = VARIABLES[k]
                if e and name in bindings:
                    key = (k, e)
                    if key not in powers:
                        powers[key] = bindings[name] ** e
                    term = term * powers[key]
                    rest[k] = 0
            term = term * RationalFunction(Polynomial({tuple(rest): 1}))
            total = total + term
        return total

    # -- text -------------------------------------------------------------
    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms, key=_grlex_key, reverse=True):
            c = self.terms[exps]
            mono = "*".join(
                VARIABLES[k] if e == 1 else f"{VARIABLES[k]}^{e}"
                for k, e in enumerate(exps)
                if e
            )
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"Polynomial({self})"


# ---------------------------------------------------------------------------
# Rational functions
# ---------------------------------------------------------------------------


class RationalFunction:
    """``num / den`` with monomial content stripped and a monic denominator.

    No multivariate gcd is taken; equality is decided by cross-multiplication.
    When the denominator is not a monomial an exact division of the numerator
    by it is attempted, which clears the common case of a full cancellation.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Optional[Polynomial] = None):
        if den is None:
            den = Polynomial.constant(1)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = Polynomial(), Polynomial.constant(1)
            return
        lo = tuple(min(p, q) for p, q in zip(num.min_exponents(), den.min_exponents()))
        if any(lo):
            neg = tuple(-e for e in lo)
            num, den = num.shift(neg), den.shift(neg)
        if not den.is_monomial():
            q = num.exact_div(den)
            if q is not None:
                num, den = q, Polynomial.constant(1)
        _, lc = den.leading()
        if lc != 1:
            inv = Fraction(1) / lc
            num, den = num.scale(inv), den.scale(inv)
        self.num, self.den = num, den

    @classmethod
    def zero(cls) -> "RationalFunction":
        return cls(Polynomial())

    @classmethod
    def one(cls) -> "RationalFunction":
        return cls(Polynomial.constant(1))

    @classmethod
    def var(cls, name: str) -> "RationalFunction":
        return cls(Polynomial.var(name))

    @classmethod
    def const(cls, c: Coeff) -> "RationalFunction":
        return cls(Polynomial.constant(c))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalFunction):
            return NotImplemented
        if self.den == other.den:
            return self.num == other.num
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        raise TypeError("RationalFunction is not hashable (no canonical reduced form)")

    def _common(self, other: "RationalFunction"):
        if self.den == other.den:
            return self.num, other.num, self.den
        if self.den.is_one():
            return self.num * other.den, other.num, other.den
        if other.den.is_one():
            return self.num, other.num * self.den, self.den
        q = other.den.exact_div(self.den)
        if q is not None:
            return self.num * q, other.num, other.den
        q = self.den.exact_div(other.den)
        if q is not None:
            return self.num, other.num * q, self.den
        return self.num * other.den, other.num * self.den, self.den * other.den

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        a, b, d = self._common(other)
        return RationalFunction(a + b, d)

    def __sub__(self, other: "RationalFunction") -> "RationalFunction":
        a, b, d = self._common(other)
        return RationalFunction(a - b, d)

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        if self.is_zero() or other.is_zero():
            return RationalFunction.zero()
        return RationalFunction(self.num * other.num, self.den * other.den)

    def inverse(self) -> "RationalFunction":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other: "RationalFunction") -> "RationalFunction":
        return self * other.inverse()

    def __pow__(self, k: int) -> "RationalFunction":
        if k < 0:
            return RationalFunction(self.den ** (-k), self.num ** (-k))
        return RationalFunction(self.num ** k, self.den ** k)

    def substitute(self, bindings: Mapping[str, "RationalFunction"]) -> "RationalFunction":
        den = self.den.substitute(bindings)
        if den.is_zero():
            raise ZeroDivisionError("substitution makes a denominator vanish")
        return self.num.substitute(bindings) / den

    def variables(self) -> set:
        return self.num.variables() | self.den.variables()

    def __str__(self) -> str:
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RationalFunction({self})"


def default_wsq() -> RationalFunction:
    """W = (a + (1 - v) b) / (a u), the value of w^2."""
    a, b, u, v = (Polynomial.var(n) for n in "abuv")
    one = Polynomial.constant(1)
    return RationalFunction(a + (one - v) * b, a * u)


_W = default_wsq()


# ---------------------------------------------------------------------------
# Scalars f0 + f1 w
# ---------------------------------------------------------------------------


class Scalar:
    """Element ``f0 + f1*w`` of the quadratic extension by ``w``.

    ``wsq`` is the value of ``w^2``; it is W unless the scalar was produced by
    :meth:`substitute`, which recomputes it from the substituted variables.
    """

    __slots__ = ("f0", "f1", "wsq")

    def __init__(
        self,
        f0: Optional[RationalFunction] = None,
        f1: Optional[RationalFunction] = None,
        wsq: Optional[RationalFunction] = None,
    ):
        self.f0 = f0 if f0 is not None else RationalFunction.zero()
        self.f1 = f1 if f1 is not None else RationalFunction.zero()
        self.wsq = wsq if wsq is not None else _W

    # -- constructors -----------------------------------------------------
    @classmethod
    def const(cls, c: Coeff) -> "Scalar":
        return cls(RationalFunction.const(c))

    @classmethod
    def var(cls, name: str) -> "Scalar":
        if name == "w":
            return cls.w()
        return cls(RationalFunction.var(name))

    @classmethod
    def w(cls) -> "Scalar":
        return cls(RationalFunction.zero(), RationalFunction.one())

    @classmethod
    def coerce(cls, value) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        if isinstance(value, RationalFunction):
            return cls(value)
        if isinstance(value, Polynomial):
            return cls(RationalFunction(value))
        if isinstance(value, (int, Fraction)):
            return cls.const(value)
        raise TypeError(f"cannot make a Scalar from {type(value).__name__}")

    def _check(self, other: "Scalar") -> RationalFunction:
        """The w^2 relation shared by both operands; a w-free operand fits any."""
        if self.wsq is other.wsq or self.wsq == other.wsq:
            return self.wsq
        if other.f1.is_zero():
            return self.wsq
        if self.f1.is_zero():
            return other.wsq
        raise ValueError("scalars over different w^2 relations")

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other) -> "Scalar":
        other = Scalar.coerce(other)
        wsq = self._check(other)
        return Scalar(self.f0 + other.f0, self.f1 + other.f1, wsq)

    __radd__ = __add__

    def __sub__(self, other) -> "Scalar":
        other = Scalar.coerce(other)
        wsq = self._check(other)
        return Scalar(self.f0 - other.f0, self.f1 - other.f1, wsq)

    def __rsub__(self, other) -> "Scalar":
        return Scalar.coerce(other) - self

    def __neg__(self) -> "Scalar":
        return Scalar(-self.f0, -self.f1, self.wsq)

    def __mul__(self, other) -> "Scalar":
        other = Scalar.coerce(other)
        wsq = self._check(other)
        a0, a1, b0, b1 = self.f0, self.f1, other.f0, other.f1
        f0 = a0 * b0
        if not (a1.is_zero() or b1.is_zero()):
            f0 = f0 + a1 * b1 * wsq
        f1 = a0 * b1 + a1 * b0
        return Scalar(f0, f1, wsq)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero scalar")
        if self.f1.is_zero():
            return Scalar(self.f0.inverse(), None, self.wsq)
        norm = self.f0 * self.f0 - self.f1 * self.f1 * self.wsq
        inv = norm.inverse()
        return Scalar(self.f0 * inv, -self.f1 * inv, self.wsq)

    def __truediv__(self, other) -> "Scalar":
        return self * Scalar.coerce(other).inverse()

    def __rtruediv__(self, other) -> "Scalar":
        return Scalar.coerce(other) * self.inverse()

    def __pow__(self, k: int) -> "Scalar":
        if k < 0:
            return self.inverse() ** (-k)
        result = Scalar(RationalFunction.one(), None, self.wsq)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison -------------------------------------------------------
    def is_zero(self) -> bool:
        return self.f0.is_zero() and self.f1.is_zero()

    def __eq__(self, other) -> bool:
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        try:
            self._check(other)
        except ValueError:
            return False
        return self.f0 == other.f0 and self.f1 == other.f1

    def __hash__(self):
        raise TypeError("Scalar is not hashable")

    def w_degree(self) -> int:
        return 0 if self.f1.is_zero() else 1

    # -- substitution -----------------------------------------------------
    def substitute(self, bindings: Mapping[str, RationalFunction]) -> "Scalar":
        """Simultaneous substitution of variables (never ``w``)."""
        if "w" in bindings:
            raise ValueError("w cannot be substituted; it is tied to w^2 = W")
        bindings = {k: (v if isinstance(v, RationalFunction) else Scalar.coerce(v).as_rational())
                    for k, v in bindings.items()}
        for name in bindings:
            if name not in _INDEX:
                raise ValueError(f"unknown variable {name!r}")
        wsq = self.wsq.substitute(bindings)
        if wsq.is_zero():
            raise ZeroDivisionError("substitution makes w^2 vanish")
        return Scalar(self.f0.substitute(bindings), self.f1.substitute(bindings), wsq)

    def as_rational(self) -> RationalFunction:
        if not self.f1.is_zero():
            raise ValueError("scalar involves w")
        return self.f0

    # -- text -------------------------------------------------------------
    def __str__(self) -> str:
        parts = []
        if not self.f0.is_zero():
            parts.append(str(self.f0))
        if not self.f1.is_zero():
            parts.append(f"({self.f1})*w")
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"Scalar({self})"


# ---------------------------------------------------------------------------
# Laurent polynomials with a free w: the algebra's working coefficients
# ---------------------------------------------------------------------------

LAURENT_VARS: Tuple[str, ...] = VARIABLES + ("w",)
_LINDEX = {name: k for k, name in enumerate(LAURENT_VARS)}
_BITS = 20
_HALF = 1 << (_BITS - 1)
_MASK = (1 << _BITS) - 1


def _encode(exps: Iterable[int]) -> int:
    code = 0
    for k, e in enumerate(exps):
        code += e << (_BITS * k)
    return code


def _decode(code: int) -> Tuple[int, ...]:
    out = []
    for _ in range(len(LAURENT_VARS)):
        r = code & _MASK
        if r >= _HALF:
            r -= 1 << _BITS
        out.append(r)
        code = (code - r) >> _BITS
    return tuple(out)


class Laurent:
    """Laurent polynomial over Q in u, v, a, b, x, y, z, s and a free w.

    Monomials are packed into a single integer so that multiplying monomials
    is integer addition.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Dict[int, Coeff]] = None):
        self.terms = terms if terms is not None else {}

    @classmethod
    def const(cls, c: Coeff) -> "Laurent":
        return cls({0: _norm_coeff(c)} if c else {})

    @classmethod
    def monomial(cls, c: Coeff = 1, **exps: int) -> "Laurent":
        vec = [0] * len(LAURENT_VARS)
        for name, e in exps.items():
            vec[_LINDEX[name]] = e
        return cls({_encode(vec): _norm_coeff(c)} if c else {})

    @classmethod
    def var(cls, name: str, power: int = 1) -> "Laurent":
        return cls.monomial(1, **{name: power})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, Laurent):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == Laurent.const(other).terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "Laurent") -> "Laurent":
        out = dict(self.terms)
        for m, c in other.terms.items():
            r = out.get(m, 0) + c
            if r:
                out[m] = r
            else:
                out.pop(m, None)
        return Laurent(out)

    def iadd(self, other: "Laurent", factor: Coeff = 1) -> None:
        """In-place ``self += factor * other``; only for private accumulators."""
        out = self.terms
        for m, c in other.terms.items():
            r = out.get(m, 0) + c * factor
            if r:
                out[m] = r
            else:
                out.pop(m, None)

    def __neg__(self) -> "Laurent":
        return Laurent({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Laurent") -> "Laurent":
        return self + (-other)

    def __mul__(self, other) -> "Laurent":
        if not isinstance(other, Laurent):
            return self.scale(other)
        if len(self.terms) > len(other.terms):
            big, small = self.terms, other.terms
        else:
            big, small = other.terms, self.terms
        out: Dict[int, Coeff] = {}
        get = out.get
        for m2, c2 in small.items():
            for m1, c1 in big.items():
                m = m1 + m2
                r = get(m, 0) + c1 * c2
                if r:
                    out[m] = r
                else:
                    del out[m]
        return Laurent(out)

    __rmul__ = __mul__

    def scale(self, c: Coeff) -> "Laurent":
        if not c:
            return Laurent()
        return Laurent({m: _norm_coeff(v * c) for m, v in self.terms.items()})

    def __pow__(self, k: int) -> "Laurent":
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (m, c), = self.terms.items()
            return Laurent({-m * (-k): _norm_coeff(Fraction(1, 1) / c ** (-k))})
        result = Laurent.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def items(self):
        """(exponent dict, coefficient) pairs, sorted for determinism."""
        rows = []
        for m, c in self.terms.items():
            vec = _decode(m)
            rows.append(({LAURENT_VARS[k]: e for k, e in enumerate(vec) if e}, c))
        rows.sort(key=lambda r: sorted(r[0].items()))
        return rows

    def to_scalar(self) -> Scalar:
        """Reduce with w^2 = W."""
        # group by w-exponent, then split into w^(2m) * w^parity
        wk = len(LAURENT_VARS) - 1
        groups: Dict[int, Dict[Exps, Coeff]] = {}
        for m, c in self.terms.items():
            vec = _decode(m)
            groups.setdefault(vec[wk], {})[vec[:wk]] = c
        parts = {0: {}, 1: {}}
        for k, terms in groups.items():
            parity = k % 2
            parts[parity][(k - parity) // 2] = terms
        a, b, u, v = (Polynomial.var(n) for n in "abuv")
        big_d = a + (Polynomial.constant(1) - v) * b
        comps = []
        for parity in (0, 1):
            by_m = parts[parity]
            if not by_m:
                comps.append(RationalFunction.zero())
                continue
            lift = max(0, -min(by_m))
            # sum_m c_m D^(m+lift) (a u)^(-m)  /  D^lift
            num_terms: Dict[Exps, Coeff] = {}
            for m, terms in by_m.items():
                poly_d = big_d ** (m + lift)
                for exps, c in terms.items():
                    shift = list(exps)
                    shift[_INDEX["a"]] -= m
                    shift[_INDEX["u"]] -= m
                    for de, dc in poly_d.terms.items():
                        e = tuple(p + q for p, q in zip(shift, de))
                        r = num_terms.get(e, 0) + c * dc
                        if r:
                            num_terms[e] = r
                        else:
                            num_terms.pop(e, None)
            comps.append(_laurent_fraction(num_terms, big_d ** lift))
        return Scalar(comps[0], comps[1])

    def __str__(self) -> str:
        return str(self.to_scalar())

    def __repr__(self) -> str:
        return f"Laurent({len(self.terms)} terms)"


def _laurent_fraction(terms: Dict[Exps, Coeff], den: Polynomial) -> RationalFunction:
    if not terms:
        return RationalFunction.zero()
    lo = [0] * NVARS
    for exps in terms:
        for k, e in enumerate(exps):
            if e < lo[k]:
                lo[k] = e
    neg = tuple(-e for e in lo)
    num = Polynomial({tuple(p + q for p, q in zip(e, neg)): c for e, c in terms.items()})
    return RationalFunction(num, den.shift(neg))


def laurent_from_scalar(s: Scalar) -> Laurent:
    """Inverse of :meth:`Laurent.to_scalar` for scalars with monomial denominators."""
    if s.wsq is not _W and s.wsq != _W:
        raise ValueError("scalar is not over the default w^2 relation")
    out = Laurent()
    for comp, wexp in ((s.f0, 0), (s.f1, 1)):
        if comp.is_zero():
            continue
        if not comp.den.is_monomial():
            raise ValueError("denominator is not a monomial")
        (de, dc), = comp.den.terms.items()
        for e, c in comp.num.terms.items():
            vec = [p - q for p, q in zip(e, de)] + [wexp]
            out.iadd(Laurent({_encode(vec): _norm_coeff(Fraction(c) / dc)}))
    return out


# ---------------------------------------------------------------------------
# Parsing canonical text back into scalars
# ---------------------------------------------------------------------------


def parse_scalar(text: str) -> Scalar:
    """Parse ``+ - * / ^`` expressions over integers and the variables (and w)."""
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take(expected=None):
        nonlocal pos
        tok = peek()
        if tok is None or (expected is not None and tok != expected):
            raise ValueError(f"unexpected {tok!r} in {text!r}")
        pos += 1
        return tok

    def expr():
        val = term()
        while peek() in ("+", "-"):
            op = take()
            rhs = term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term():
        val = factor()
        while peek() in ("*", "/"):
            op = take()
            rhs = factor()
            val = val * rhs if op == "*" else val / rhs
        return val

    def factor():
        if peek() == "-":
            take()
            return -factor()
        if peek() == "+":
            take()
            return factor()
        return power()

    def power():
        base = atom()
        if peek() == "^":
            take()
            sign = 1
            if peek() == "-":
                take()
                sign = -1
            tok = take()
            if not tok.isdigit():
                raise ValueError(f"bad exponent {tok!r}")
            return base ** (sign * int(tok))
        return base

    def atom():
        tok = take()
        if tok == "(":
            val = expr()
            take(")")
            return val
        if tok.isdigit():
            return Scalar.const(int(tok))
        if tok in _INDEX or tok == "w":
            return Scalar.var(tok)
        raise ValueError(f"unknown symbol {tok!r}")

    value = expr()
    if pos != len(tokens):
        raise ValueError(f"trailing input in {text!r}")
    return value


def _tokenize(text: str):
    out = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            out.append(text[i:j])
            i = j
        elif ch.isalpha():
            j = i
            while j < len(text) and text[j].isalnum():
                j += 1
            out.append(text[i:j])
            i = j
        elif ch in "+-*/^()":
            out.append(ch)
            i += 1
        else:
            raise ValueError(f"unexpected character {ch!r}")
    return out
