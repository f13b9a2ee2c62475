"""Exact univariate polynomial arithmetic over the rationals and Sturm root isolation.

Polynomials are lists of coefficients in ascending degree.  Integer input
stays integral where possible; everything else is ``Fraction``.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Sequence

Poly = list


def trim(a: Sequence) -> list:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def from_pathsets(N: Sequence[int]) -> list[int]:
    """Power-basis coefficients of sum N_i p^i (1-p)^(m-i), with m = len(N) - 1."""
    m = len(N) - 1
    out = [0] * (m + 1)
    for i, c in enumerate(N):
        if c:
            for j in range(m - i + 1):
                out[i + j] += c * comb(m - i, j) * (-1) ** j
    return trim(out)


def horner(a: Sequence, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def sign(x) -> int:
    return (x > 0) - (x < 0)


def derivative(a: Sequence) -> list:
    return [i * a[i] for i in range(1, len(a))]


def sub(a: Sequence, b: Sequence) -> list:
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def mul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def divmod_poly(a: Sequence, b: Sequence) -> tuple[list, list]:
    b = trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(c) for c in trim(a)]
    q = [Fraction(0)] * max(len(r) - len(b) + 1, 0)
    lead = Fraction(b[-1])
    while len(r) >= len(b) and r:
        k = len(r) - len(b)
        f = r[-1] / lead
        q[k] = f
        for i, c in enumerate(b):
            r[k + i] -= f * c
        r = trim(r)
    return trim(q), r


def monic(a: Sequence) -> list:
    a = trim(a)
    lead = Fraction(a[-1])
    return [Fraction(c) / lead for c in a]


def gcd(a: Sequence, b: Sequence) -> list:
    a, b = trim(a), trim(b)
    while b:
        a, b = b, divmod_poly(a, b)[1]
    return monic(a) if a else []


def squarefree_parts(a: Sequence) -> list[list]:
    """Yun's algorithm: monic f_1, f_2, ... with a = lead * prod f_k**k."""
    a = trim(a)
    if len(a) <= 1:
        return []
    da = derivative(a)
    g = gcd(a, da)
    b = divmod_poly(a, g)[0]
    c = divmod_poly(da, g)[0]
    d = sub(c, derivative(b))
    parts = []
    while len(b) > 1:
        f = gcd(b, d)
        parts.append(f)
        b = divmod_poly(b, f)[0]
        c = divmod_poly(d, f)[0]
        d = sub(c, derivative(b))
    return parts


def sturm_sequence(a: Sequence) -> list[list]:
    seq = [trim(a), trim(derivative(a))]
    while seq[-1]:
        r = divmod_poly(seq[-2], seq[-1])[1]
        if not r:
            break
        seq.append([-c for c in r])
    return seq


def _variations(seq: list[list], x) -> int:
    signs = [sign(horner(s, x)) for s in seq]
    signs = [s for s in signs if s]
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def count_roots(seq: list[list], lo, hi) -> int:
    """Distinct real roots in (lo, hi] of the sequence's square-free head."""
    return _variations(seq, lo) - _variations(seq, hi)


def isolate_roots(a: Sequence, lo=Fraction(0), hi=Fraction(1)) -> list[tuple[Fraction, Fraction]]:
    """Disjoint open intervals strictly inside (lo, hi), one per distinct root of a.

    ``a`` must be square-free and nonzero at lo and hi.
    """
    seq = sturm_sequence(a)
    out = []
    stack = [(Fraction(lo), Fraction(hi))]
    while stack:
        x, y = stack.pop()
        k = count_roots(seq, x, y)
        if k == 0:
            continue
        if k == 1:
            out.append((x, y))
            continue
        mid = (x + y) / 2
        step = (y - x) / 4
        while horner(a, mid) == 0:
            step /= 2
            mid += step
        stack.append((mid, y))
        stack.append((x, mid))
    out.sort()
    return [_shrink_inside(a, seq, x, y, lo, hi) for x, y in out]


def _shrink_inside(a, seq, x, y, lo, hi):
    # pull endpoints off the outer bounds so intervals sit strictly inside
    while x == lo or y == hi:
        mid = (x + y) / 2
        if horner(a, mid) == 0:
            # the root is exactly mid; bracket it tightly
            w = (y - x) / 8
            return (mid - w, mid + w)
        if count_roots(seq, x, mid) == 1:
            y = mid
        else:
            x = mid
    return (x, y)


def odd_multiplicity_core(a: Sequence) -> list:
    """Product of the square-free parts of odd multiplicity (sign-change roots)."""
    core: list = [Fraction(1)]
    for k, f in enumerate(squarefree_parts(a), start=1):
        if k % 2 == 1:
            core = mul(core, f)
    return trim(core)


def lowest_sign(a: Sequence) -> int:
    for c in a:
        if c:
            return sign(c)
    return 0


def reflect(a: Sequence) -> list:
    """Coefficients of a(1 - q) in q."""
    out = [0] * len(a)
    for i, c in enumerate(a):
        if c:
            for j in range(i + 1):
                out[j] += c * comb(i, j) * (-1) ** j
    return trim(out)
