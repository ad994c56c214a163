"""Sparse group-algebra arithmetic in C[S_n] over a pluggable coefficient ring.

Coefficients may be ``fractions.Fraction``, :class:`~weingarten.coeffring.TauPolynomial`
or :class:`~weingarten.coeffring.TauRational`; anything supporting ``+ * -``,
truthiness for zero tests, and ``==``.  Elements are immutable by convention:
no method mutates ``terms`` after construction.

This module owns the Jucys-Murphy elements, the two product expansions that
reproduce Gram matrices (all permutations weighted by cycle count for the
unitary case, odd-indexed factors for the orthogonal case), and the
hyperoctahedral averaging projector.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .coeffring import render
from .symcore import Permutation, permutations_of


class AlgebraElement:
    """Finitely supported map from S_n to a coefficient ring."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict | None = None):
        self.n = n
        if terms:
            self.terms = {p: c for p, c in terms.items() if c}
        else:
            self.terms = {}

    @classmethod
    def unit(cls, n: int, coeff=Fraction(1)) -> "AlgebraElement":
        return cls(n, {Permutation.identity(n): coeff})

    @classmethod
    def zero(cls, n: int) -> "AlgebraElement":
        return cls(n)

    @classmethod
    def basis(cls, sigma: Permutation, coeff=Fraction(1)) -> "AlgebraElement":
        return cls(len(sigma), {sigma: coeff})

    def coefficient(self, sigma: Permutation):
        return self.terms.get(sigma, Fraction(0))

    def sorted_terms(self):
        """Terms in the canonical (lexicographic one-line) permutation order."""
        return [(p, self.terms[p]) for p in sorted(self.terms)]

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        if self.n != other.n:
            raise ValueError(f"ambient size mismatch: {self.n} vs {other.n}")
        out = dict(self.terms)
        for p, c in other.terms.items():
            prev = out.get(p)
            out[p] = c if prev is None else prev + c
        return AlgebraElement(self.n, out)

    def __neg__(self):
        return AlgebraElement(self.n, {p: -c for p, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, coeff) -> "AlgebraElement":
        if not coeff:
            return AlgebraElement(self.n)
        return AlgebraElement(self.n, {p: c * coeff for p, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, AlgebraElement):
            return self.scale(other)
        if self.n != other.n:
            raise ValueError(f"ambient size mismatch: {self.n} vs {other.n}")
        out: dict = {}
        rhs = list(other.terms.items())
        get = out.get
        for p, ca in self.terms.items():
            for q, cb in rhs:
                r = Permutation(p[j - 1] for j in q)
                c = ca * cb
                prev = get(r)
                out[r] = c if prev is None else prev + c
        return AlgebraElement(self.n, out)

    def __rmul__(self, coeff):
        return self.scale(coeff)

    def antipode(self) -> "AlgebraElement":
        """Linear extension of sigma -> sigma^{-1}; reverses products."""
        return AlgebraElement(self.n, {p.inverse(): c for p, c in self.terms.items()})

    def embed(self, m: int) -> "AlgebraElement":
        """Promote into C[S_m], m >= n, each permutation fixing n+1..m."""
        if m < self.n:
            raise ValueError(f"cannot embed S_{self.n} element into S_{m}")
        if m == self.n:
            return self
        tail = tuple(range(self.n + 1, m + 1))
        return AlgebraElement(m, {Permutation(p + tail): c for p, c in self.terms.items()})

    def map_coefficients(self, fn) -> "AlgebraElement":
        return AlgebraElement(self.n, {p: fn(c) for p, c in self.terms.items()})

    def to_json_dict(self) -> dict[str, str]:
        return {p.to_text(): render(c) for p, c in self.sorted_terms()}

    def __repr__(self):
        if not self.terms:
            return f"AlgebraElement(S_{self.n}, 0)"
        body = " + ".join(f"({render(c)})*{p.to_text()}" for p, c in self.sorted_terms()[:6])
        more = "" if len(self.terms) <= 6 else f" ... [{len(self.terms)} terms]"
        return f"AlgebraElement(S_{self.n}, {body}{more})"


def jm_element(k: int, n: int) -> AlgebraElement:
    """Jucys-Murphy element: sum of transpositions (i k) for i < k; zero at k=1."""
    if not 1 <= k <= n:
        raise ValueError(f"jm_element requires 1 <= k <= {n}, got {k}")
    return AlgebraElement(
        n, {Permutation.transposition(i, k, n): Fraction(1) for i in range(1, k)}
    )


def _tau_plus(m: AlgebraElement, tau) -> AlgebraElement:
    return m + AlgebraElement.unit(m.n, Fraction(1)).scale(tau)


def jm_product_unitary(n: int, tau) -> AlgebraElement:
    """Expand (tau + m_1)(tau + m_2)...(tau + m_n) in C[S_n].

    By Jucys' classical identity this equals the sum over all of S_n of
    tau^(number of cycles) times the permutation; callers verify rather than
    assume that.
    """
    if n < 1:
        raise ValueError(f"jm_product_unitary requires n >= 1, got {n}")
    acc = _tau_plus(jm_element(1, n), tau)
    for k in range(2, n + 1):
        acc = acc * _tau_plus(jm_element(k, n), tau)
    return acc


def jm_product_orthogonal(n: int, tau) -> AlgebraElement:
    """Expand (tau + m_(2n-1))...(tau + m_3)(tau + m_1) in C[S_2n].

    The odd-indexed Jucys-Murphy elements commute, so the value is order
    independent; the descending order is fixed anyway so that the expansion
    bookkeeping matches the coset-representative recursion term by term.
    """
    if n < 1:
        raise ValueError(f"jm_product_orthogonal requires n >= 1, got {n}")
    acc = _tau_plus(jm_element(1, 2 * n), tau)
    for k in range(2, n + 1):
        acc = _tau_plus(jm_element(2 * k - 1, 2 * n), tau) * acc
    return acc


@lru_cache(maxsize=None)
def hyperoctahedral_elements(n: int) -> tuple[Permutation, ...]:
    """The stabilizer of the adjacent pairing inside S_2n, canonically ordered.

    Materialized by closure from its standard generators: the pair swaps
    (2i-1 2i) and the double elementary transpositions (2i-1 2i+1)(2i 2i+2).
    Size is 2^n * n!.
    """
    if n < 1:
        raise ValueError(f"hyperoctahedral_elements requires n >= 1, got {n}")
    size = 2 * n
    gens = [Permutation.transposition(2 * i - 1, 2 * i, size) for i in range(1, n + 1)]
    for i in range(1, n):
        gens.append(
            Permutation.transposition(2 * i - 1, 2 * i + 1, size)
            * Permutation.transposition(2 * i, 2 * i + 2, size)
        )
    elements = {Permutation.identity(size)}
    frontier = list(elements)
    while frontier:
        fresh = []
        for g in gens:
            for h in frontier:
                gh = g * h
                if gh not in elements:
                    elements.add(gh)
                    fresh.append(gh)
        frontier = fresh
    return tuple(sorted(elements))


def hyperoctahedral_order(n: int) -> int:
    out = 1
    for i in range(1, n + 1):
        out *= 2 * i
    return out


def average_projector(n: int) -> AlgebraElement:
    """Uniform average over the hyperoctahedral subgroup of S_2n (idempotent)."""
    elements = hyperoctahedral_elements(n)
    w = Fraction(1, len(elements))
    return AlgebraElement(2 * n, {h: w for h in elements})


def regular_matrix(a: AlgebraElement, basis: list[Permutation], side: str = "left"):
    """Matrix of multiplication by `a` on C[S_n] in the given ordered basis.

    side="left": column j holds a * basis[j]; side="right": basis[j] * a.
    Entry [i][j] is the coefficient of basis[i].
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    inv = [b.inverse() for b in basis]
    rows = []
    for bi in basis:
        if side == "left":
            # coefficient of bi in a*bj is a[bi * bj^-1]
            rows.append([a.coefficient(bi * bj_inv) for bj_inv in inv])
        else:
            # coefficient of bi in bj*a is a[bj^-1 * bi]
            rows.append([a.coefficient(bj_inv * bi) for bj_inv in inv])
    return rows


def full_basis(n: int) -> list[Permutation]:
    """Canonical ordered basis of C[S_n]."""
    return permutations_of(n)
