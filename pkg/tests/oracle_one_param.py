"""Independent one-parameter oracle for singular braid words.

Works in the algebra with generators T_i, E_i and T_i^2 = 1 + (u-1)E_i + (u-1)E_i T_i,
elements written in the basis T_w E_I (ties on the right).  The trace is not
computed by strand reduction: every basis value is an unknown, and the unknowns
are solved from the Markov rules and the cyclicity equations Tr(g X) = Tr(X g) for g = T_i, E_i.
Shares no code with the package.
"""

from functools import lru_cache

import sympy
from sympy.polys.fields import field

K, u, a, b, x, y = field("u,a,b,x,y", sympy.QQ)


# -- set partitions as frozensets of frozensets on 0..n-1 ------------------


def discrete(n):
    return frozenset(frozenset([i]) for i in range(n))


def join_pair(part, i, j):
    bi = next(B for B in part if i in B)
    bj = next(B for B in part if j in B)
    if bi is bj:
        return part
    return (part - {bi, bj}) | {bi | bj}


def join(p, q):
    out = p
    for B in q:
        items = sorted(B)
        for x in items[1:]:
            out = join_pair(out, items[0], x)
    return out


def swap_points(part, i, j):
    f = {i: j, j: i}
    return frozenset(frozenset(f.get(x, x) for x in B) for B in part)


# -- algebra ---------------------------------------------------------------


def add(acc, key, c):
    v = acc.get(key, K.zero) + c
    if v == K.zero:
        acc.pop(key, None)
    else:
        acc[key] = v


def times_E(elem, j):
    out = {}
    for (w, part), c in elem.items():
        add(out, (w, join_pair(part, j, j + 1)), c)
    return out


def times_T(elem, j):
    out = {}
    for (w, part), c in elem.items():
        # T_w E_I T_j = T_w T_j E_{s_j I}
        moved = swap_points(part, j, j + 1)
        ws = list(w)
        ws[j], ws[j + 1] = ws[j + 1], ws[j]
        ws = tuple(ws)
        if w[j] < w[j + 1]:
            add(out, (ws, moved), c)
        else:
            tied = join_pair(moved, j, j + 1)
            add(out, (ws, moved), c)
            add(out, (ws, tied), c * (u - 1))
            add(out, (w, tied), c * (u - 1))
    return out


def times_T_inverse(elem, j):
    # T^-1 = T + (1/u - 1) E + (1/u - 1) E T
    c = 1 / u - 1
    out = dict(times_T(elem, j))
    for key, val in times_E(elem, j).items():
        add(out, key, val * c)
    for key, val in times_T(times_E(elem, j), j).items():
        add(out, key, val * c)
    return out


def unit(n):
    return {(tuple(range(n)), discrete(n)): K.one}


def reduced_word(w):
    w = list(w)
    word = []
    # bubble sort from the right: w = w' s_j with w(j) > w(j+1)
    while True:
        for j in range(len(w) - 1):
            if w[j] > w[j + 1]:
                w[j], w[j + 1] = w[j + 1], w[j]
                word.append(j)
                break
        else:
            return word[::-1]


def basis_as_product(n, w, part, prefix=None):
    elem = prefix if prefix is not None else unit(n)
    for j in reduced_word(w):
        elem = times_T(elem, j)
    for B in part:
        items = sorted(B)
        for x in items[1:]:
            elem = _tie(elem, items[0], x)
    return elem


def _tie(elem, i, j):
    out = {}
    for (w, part), c in elem.items():
        add(out, (w, join_pair(part, i, j)), c)
    return out


# -- trace -----------------------------------------------------------------


def all_partitions(n):
    if n == 0:
        return [frozenset()]
    out = []
    for p in all_partitions(n - 1):
        out.append(p | {frozenset([n - 1])})
        for B in p:
            out.append((p - {B}) | {B | {n - 1}})
    return out


def all_perms(n):
    from itertools import permutations

    return list(permutations(range(n)))


def embed(n, w, part):
    return (tuple(w) + (n - 1,), part | {frozenset([n - 1])})


@lru_cache(maxsize=None)
def trace_table(n):
    if n == 1:
        return {((0,), discrete(1)): K.one}
    lower = trace_table(n - 1)
    keys = [(w, p) for w in all_perms(n) for p in all_partitions(n)]
    equations = []  # (dict key -> coeff, constant): sum coeff*Tr(key) = constant
    for (w, p), val in lower.items():
        base = {embed(n, w, p): K.one}
        equations.append((base, val))
        equations.append((times_T(base, n - 2), a * val))
        equations.append((times_E(base, n - 2), b * val))
        equations.append((times_T(times_E(base, n - 2), n - 2), a * val))
    for w, p in keys:
        for i in range(n - 1):
            for times in (times_T, times_E):
                right = times({(w, p): K.one}, i)
                left = basis_as_product(n, w, p, prefix=times(unit(n), i))
                diff = dict(left)
                for k2, c in right.items():
                    add(diff, k2, -c)
                if diff:
                    equations.append((diff, K.zero))
    known = {}
    pending = equations
    while pending:
        progress = False
        rest = []
        for coeffs, const in pending:
            const2 = const
            open_terms = {}
            for k2, c in coeffs.items():
                if k2 in known:
                    const2 = const2 - c * known[k2]
                else:
                    open_terms[k2] = c
            if len(open_terms) == 1:
                (k2, c), = open_terms.items()
                known[k2] = const2 / c
                progress = True
            elif open_terms:
                rest.append((open_terms, const2))
            elif const2 != K.zero:
                raise AssertionError("inconsistent trace equations")
        pending = rest
        if not progress:
            break
    if pending:
        missing = sorted({k2 for eq, _ in pending for k2 in eq}, key=str)
        syms = sympy.symbols(f"t0:{len(missing)}")
        index = dict(zip(missing, syms))
        exprs = [sum(c.as_expr() * index[k2] for k2, c in eq.items()) - cst.as_expr()
                 for eq, cst in pending]
        (sol,) = sympy.linsolve(exprs, syms)
        for k2, s in zip(missing, sol):
            known[k2] = K.from_expr(sympy.together(s))
    assert len(known) == len(keys), "trace not determined"
    return known


def trace(n, elem):
    table = trace_table(n)
    total = K.zero
    for key, c in elem.items():
        total += c * table[key]
    return total


def word_element(n, tokens):
    elem = unit(n)
    for kind, i in tokens:
        if kind == "sigma":
            elem = times_T(elem, i - 1)
        elif kind == "sigma_inv":
            elem = times_T_inverse(elem, i - 1)
        elif kind == "tie":
            elem = times_E(elem, i - 1)
        else:
            raise ValueError(f"no single image for {kind}")
    return elem


def _resolutions(tokens, kind):
    """Expand each tau into its terms: (coefficient, extra power of w, tokens)."""
    out = [(K.one, 0, [])]
    for tok in tokens:
        if tok[0] != "tau":
            out = [(c, k, toks + [tok]) for c, k, toks in out]
            continue
        i = tok[1]
        if kind == "psi":
            # tau -> x + y w T
            terms = [(x, 0, []), (y, 1, [("sigma", i)])]
        else:
            # tau -> x E + y w E T
            terms = [(x, 0, [("tie", i)]), (y, 1, [("tie", i), ("sigma", i)])]
        out = [(c * tc, k + tk, toks + extra) for c, k, toks in out for tc, tk, extra in terms]
    return out


def invariant(n, tokens, kind="psi"):
    """Return (f0, f1) with the invariant equal to f0 + f1*w, where w^2 = (a+(1-u)b)/(a*u).

    ``kind`` is "psi" (tau -> x + y w T) or "phi" (tau -> x E + y w E T); sigma -> w T.
    """
    c = (a + (1 - u) * b) / (a * u)
    eps = sum(1 if kind_ == "sigma" else -1 for kind_, _ in tokens if kind_.startswith("sigma"))
    f = [K.zero, K.zero]
    for coeff, extra, toks in _resolutions(tokens, kind):
        value = coeff * trace(n, word_element(n, toks)) / a ** (n - 1)
        half, odd = divmod(eps + extra - (n - 1), 2)
        f[odd] += value * c ** half
    return f[0], f[1]


def psi(n, tokens):
    return invariant(n, tokens, "psi")
