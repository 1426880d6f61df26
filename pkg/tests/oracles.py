"""Reference arithmetic that shares no code with the library.

Elements are dicts ``{(j, m): c}`` standing for ``sum c Y^j X^m``.  Products
are computed by writing both factors as words in the letters X and Y and
rewriting ``XY -> sigma(Y) X + delta(Y)`` until every X sits to the right.
Coefficients can be Fractions or sympy expressions.
"""

from __future__ import annotations

from fractions import Fraction

import sympy


def _clean(d):
    return {k: v for k, v in d.items() if sympy.simplify(v) != 0} if _symbolic(d) else {
        k: v for k, v in d.items() if v != 0}


def _symbolic(d):
    return any(isinstance(v, sympy.Basic) for v in d.values())


def _word(j, m):
    return ("Y",) * j + ("X",) * m


def normal_order(words: dict, sigma_y: dict, delta_y: dict) -> dict:
    """Rewrite a combination of words into normal order Y^j X^m."""
    out: dict = {}
    todo = list(words.items())
    while todo:
        w, c = todo.pop()
        for pos in range(len(w) - 1):
            if w[pos] == "X" and w[pos + 1] == "Y":
                head, tail = w[:pos], w[pos + 2:]
                for d, s in sigma_y.items():
                    todo.append((head + ("Y",) * d + ("X",) + tail, c * s))
                for d, s in delta_y.items():
                    todo.append((head + ("Y",) * d + tail, c * s))
                break
        else:
            key = (w.count("Y"), w.count("X"))
            out[key] = out.get(key, 0) + c
    return _clean(out)


def poly_pow(p: dict, n: int) -> dict:
    out = {0: 1}
    for _ in range(n):
        new: dict = {}
        for a, x in out.items():
            for b, y in p.items():
                new[a + b] = new.get(a + b, 0) + x * y
        out = new
    return out


def apply_alpha(elem: dict, alpha_y: dict) -> dict:
    """Homogeneous extension of the algebra endomorphism Y -> alpha_y."""
    out: dict = {}
    for (j, m), c in elem.items():
        for d, s in poly_pow(alpha_y, j).items():
            out[(d, m)] = out.get((d, m), 0) + c * s
    return _clean(out)


def product(p: dict, q: dict, sigma_y: dict, delta_y: dict, alpha_y: dict | None = None) -> dict:
    words: dict = {}
    for (j1, m1), c1 in p.items():
        for (j2, m2), c2 in q.items():
            w = _word(j1, m1) + _word(j2, m2)
            words[w] = words.get(w, 0) + c1 * c2
    res = normal_order(words, sigma_y, delta_y)
    return apply_alpha(res, alpha_y) if alpha_y is not None else res


def pi_oracle(i: int, m: int, b: dict, sigma_y: dict, delta_y: dict) -> dict:
    """pi_i^m(b) read off as the X^i coefficient of X^m b."""
    words = {("X",) * m + ("Y",) * j: c for j, c in b.items()}
    res = normal_order(words, sigma_y, delta_y)
    return {j: c for (j, x), c in res.items() if x == i}


# -- conversions from library objects ----------------------------------------


def to_fraction(c):
    return Fraction(int(c.numerator), int(c.denominator))


def param_to_sympy(c):
    names = getattr(c, "names", None)
    if names is None:
        return sympy.Rational(int(c.numerator), int(c.denominator))
    syms = sympy.symbols(names)
    return sum(sympy.Rational(int(v.numerator), int(v.denominator))
               * sympy.Mul(*[s**e for s, e in zip(syms, exps)])
               for exps, v in c.terms.items())


def ore_to_dict(p, conv=to_fraction) -> dict:
    return {(j, m): conv(c) for m, a in p.terms.items() for j, c in enumerate(a.coeffs) if c}


def poly_to_dict(p, conv=to_fraction) -> dict:
    return {j: conv(c) for j, c in enumerate(p.coeffs) if c}


def same(a: dict, b: dict) -> bool:
    keys = set(a) | set(b)
    return all(sympy.simplify(sympy.sympify(a.get(k, 0)) - sympy.sympify(b.get(k, 0))) == 0
               if _symbolic(a) or _symbolic(b) else a.get(k, 0) == b.get(k, 0) for k in keys)
