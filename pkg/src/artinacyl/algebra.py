"""Exact integer arithmetic for the numbers 2cos(pi/m).

Group elements are tracked through the reflection representation, whose
structure constants are c(m) = 2cos(pi/m) for finite labels and 2 for
infinite ones.  All of these live in a ring Z[c(m1), c(m2), ...] that is
free as a Z-module, so ring elements become integer coordinate vectors
and multiplication by a fixed c(m) becomes an integer matrix.

Two bases are used:
  * labels within {2,3,4,5,6}: the tensor basis of products of
    sqrt(2), sqrt(3) and phi=(1+sqrt5)/2 (dimension <= 8, and each
    multiplication matrix has at most 2 nonzeros per column);
  * otherwise: the power basis of Z[y], y = 2cos(pi/N) with N the lcm
    of the finite labels, whose minimal polynomial comes from the
    palindromic transform of the cyclotomic polynomial of order 2N.
"""
from __future__ import annotations

import math
from functools import lru_cache

from .graphs import INF

# ---------------------------------------------------------------------------
# integer polynomials, little-endian coefficient lists


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divexact(a, b):
    """Exact division of integer polynomials (remainder must vanish)."""
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = a[i + len(b) - 1]
        assert c % b[-1] == 0
        q[i] = c // b[-1]
        for j, y in enumerate(b):
            a[i + j] -= q[i] * y
    assert all(x == 0 for x in a)
    return q


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> tuple:
    """Coefficients of the n-th cyclotomic polynomial."""
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact(poly, cyclotomic(d))
    return tuple(poly)


def minpoly_2cos(N: int) -> tuple:
    """Monic minimal polynomial of y = 2cos(pi/N) over Z.

    Determined by x^D p(x + 1/x) = Phi_{2N}(x) where D = deg Phi_{2N} / 2.
    """
    phi = list(cyclotomic(2 * N))
    deg = len(phi) - 1
    assert deg % 2 == 0
    D = deg // 2
    p = [0] * (D + 1)
    # peel off leading terms: x^{D-j} (x^2+1)^j has degree D+j
    rem = phi[:]
    for j in range(D, -1, -1):
        c = rem[D + j]
        p[j] = c
        if c:
            term = [0] * (D - j) + [1]
            for _ in range(j):
                term = _poly_mul(term, [1, 0, 1])
            for i, y in enumerate(term):
                rem[i] -= c * y
    assert all(x == 0 for x in rem), "palindromic transform failed"
    return tuple(p)


# ---------------------------------------------------------------------------


class Ring:
    """Free Z-module basis for Z[2cos(pi/m) : m in labels].

    Exposes integer coordinate vectors and, per label, the matrix of
    multiplication by c(label) (c(2)=0, c(inf)=2).
    """

    def __init__(self, dim, one_index=0):
        self.dim = dim
        self.one = tuple(1 if i == one_index else 0 for i in range(dim))

    def value_vector(self, m):
        raise NotImplementedError

    def basis_product(self, i, j):
        """List of (coeff, index) terms of basis_i * basis_j."""
        raise NotImplementedError

    def value_matrix(self, m):
        """Dense integer matrix M with (M @ x) = c(m) * x in coordinates."""
        val = self.value_vector(m)
        mat = [[0] * self.dim for _ in range(self.dim)]
        for d, coeff in enumerate(val):
            if not coeff:
                continue
            for j in range(self.dim):
                for c2, idx in self.basis_product(d, j):
                    mat[idx][j] += coeff * c2
        return mat

    def mul(self, x, y):
        out = [0] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                for c, idx in self.basis_product(i, j):
                    out[idx] += xi * yj * c
        return tuple(out)


_TENSOR_GENS = {4: "sqrt2", 6: "sqrt3", 5: "phi"}


class TensorRing(Ring):
    """Basis: products of subsets of {sqrt2, sqrt3, phi} (those present)."""

    def __init__(self, finite_labels):
        self.gens = [name for lab, name in _TENSOR_GENS.items()
                     if lab in finite_labels]
        super().__init__(1 << len(self.gens))
        self._gen_bit = {name: 1 << p for p, name in enumerate(self.gens)}

    def basis_product(self, i, j):
        terms = [(1, 0)]
        for p, name in enumerate(self.gens):
            bit = 1 << p
            b1, b2 = i & bit, j & bit
            if b1 and b2:
                if name == "sqrt2":
                    terms = [(c * 2, m) for c, m in terms]
                elif name == "sqrt3":
                    terms = [(c * 3, m) for c, m in terms]
                else:  # phi^2 = phi + 1
                    terms = [t for c, m in terms
                             for t in ((c, m | bit), (c, m))]
            elif b1 or b2:
                terms = [(c, m | bit) for c, m in terms]
        return terms

    def value_vector(self, m):
        vec = [0] * self.dim
        if m == 2:
            return tuple(vec)
        if m == 3:
            vec[0] = 1
        elif m == INF:
            vec[0] = 2
        elif m in _TENSOR_GENS:
            vec[self._gen_bit[_TENSOR_GENS[m]]] = 1
        else:
            raise ValueError(f"label {m} outside tensor-basis range")
        return tuple(vec)


class PowerRing(Ring):
    """Power basis 1, y, ..., y^{D-1} of Z[y], y = 2cos(pi/N)."""

    def __init__(self, N: int):
        self.N = N
        self.minpoly = minpoly_2cos(N)
        D = len(self.minpoly) - 1
        super().__init__(D)
        # y^e mod minpoly for e up to 2D-2
        pows = [tuple(1 if i == e else 0 for i in range(D)) for e in range(D)]
        cur = list(pows[-1]) if D > 0 else []
        for _ in range(D - 1):
            shifted = [0] + cur[:D - 1]
            lead = cur[D - 1]
            nxt = [shifted[i] - lead * self.minpoly[i] for i in range(D)]
            pows.append(tuple(nxt))
            cur = nxt
        self._ypow = pows

    def basis_product(self, i, j):
        return [(c, idx) for idx, c in enumerate(self._ypow[i + j]) if c]

    def value_vector(self, m):
        if m == 2:
            return tuple([0] * self.dim)
        if m == INF:
            return tuple(2 * x for x in self.one)
        # 2cos(k * pi/N) via the recurrence E_0=2, E_1=y, E_k = y E_{k-1} - E_{k-2}
        assert self.N % m == 0
        k = self.N // m
        y = self._ypow[1]
        prev = tuple(2 * x for x in self.one)
        cur = y
        if k == 0:
            return prev
        for _ in range(k - 1):
            prev, cur = cur, tuple(
                a - b for a, b in zip(self.mul(y, cur), prev))
        return cur


def build_ring(finite_labels) -> Ring:
    """Pick the cheapest exact basis covering the given finite labels >= 3."""
    high = sorted(m for m in finite_labels if m not in (2,) and m != INF)
    if all(m <= 6 for m in high):
        return TensorRing(set(high))
    N = 1
    for m in high:
        N = math.lcm(N, m)
    return PowerRing(N)
