"""Orthogonal-group Weingarten calculus on the pair-partition basis.

The invariants are indexed by pairings of {1,...,2n}; the Gram matrix is
tau^(number of loops obtained by pasting two pairings).  Everything happens
inside C[S_2n]: the span of the pairings is realized as the image of right
multiplication by the hyperoctahedral averaging projector, with standard
basis sigma_pi * P_H where sigma_pi conjugates the adjacent pairing to pi.

The Weingarten matrix comes out of the Collins-Matsumoto formula

    W_(pi,pi') = sum over lam with c_lam != 0 of
                 (P_doubled(lam))_(pi,pi') / c_lam,
    c_lam = product over boxes (i,j) of (tau + 2j - 1 - i),

with central-projector entries

    (P_2lam)_(pi,pi') = dim(2lam)/(2n)! *
                        sum over {sigma : sigma pi' sigma^-1 = pi} of
                        chi_2lam(sigma).

That sum runs over a single left coset of the centralizer of pi' (order
2^n n!), and its value depends only on the loop-length type of the pair
(pi, pi') (simultaneous conjugation moves any pair to any other of the same
type while permuting the coset).  Table assembly therefore computes one
cycle-type histogram per loop type and reuses it, which is what keeps the
945-pairing case affordable.

The verify_* operations check the structural identities this construction
rests on, term by term and exactly.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .coeffring import TAU, invert, is_symbolic, render
from .exactmat import mat_eq, mat_mul
from .groupalg import (
    AlgebraElement,
    average_projector,
    hyperoctahedral_order,
    jm_element,
    jm_product_orthogonal,
)
from .symcore import (
    Pairing,
    Partition,
    Permutation,
    StandardTableau,
    double_shape,
    double_tableau,
    enumerate_pairings,
    hook_dimension,
    loop_count,
    partitions_of,
    standard_tableaux,
)
from .unitary import _tau_powers
from .young import character, young_idempotent, _extend_idempotent


def double_factorial_odd(n: int) -> int:
    """(2n-1)!! = number of pairings of 2n points."""
    out = 1
    for k in range(3, 2 * n, 2):
        out *= k
    return out


def adjacent_pairing(n: int) -> Pairing:
    """The base point (1 2)(3 4)...(2n-1 2n) of the conjugation action."""
    if n < 1:
        raise ValueError(f"adjacent_pairing requires n >= 1, got {n}")
    images = []
    for k in range(1, n + 1):
        images.extend((2 * k, 2 * k - 1))
    return Pairing(images)


@dataclass(frozen=True)
class CosetRepresentative:
    """A permutation carrying the adjacent pairing onto `pairing`."""

    pairing: Pairing
    sigma: Permutation


def _representative_images(pi: Pairing) -> Permutation:
    size = len(pi)
    if size == 2:
        return Permutation.identity(2)
    if pi[size - 1] == size - 1:
        inner = _representative_images(Pairing(pi[: size - 2]))
        return Permutation(tuple(inner) + (size - 1, size))
    swap = Permutation.transposition(pi[size - 1], size - 1, size)
    return swap * _representative_images(pi.conjugate_by(swap))


def coset_representative(pi: Pairing) -> CosetRepresentative:
    """Deterministic coset representative, by recursion on the last point.

    If pi already pairs (2n-1, 2n), extend the representative of the
    restriction; otherwise conjugate by the transposition moving pi(2n) up to
    2n-1 and recurse.  The adjacent pairing maps to the identity, and the
    chosen representatives are exactly the permutations appearing in the
    expansion of the odd Jucys-Murphy product.
    """
    return CosetRepresentative(pi, _representative_images(pi))


def loop_type(pi: Pairing, rho: Pairing) -> Partition:
    """Loop lengths of the pasting of two pairings, as a partition of n.

    The permutation product splits every loop through 2m points into two
    m-cycles, so halving the cycle-type multiplicities recovers the loops.
    """
    counts = Counter(len(c) for c in (pi * rho).cycles())
    sizes = []
    for length, count in counts.items():
        sizes.extend([length] * (count // 2))
    return Partition(sorted(sizes, reverse=True))


def gram_orthogonal(n: int, tau):
    """(2n-1)!! square Gram matrix over the canonical pairing basis."""
    basis = enumerate_pairings(n)
    powers = _tau_powers(tau, n)
    return [[powers[loop_count(pi, rho)] for rho in basis] for pi in basis]


def c_orthogonal(lam: Partition, tau):
    """Eigenvalue product for the orthogonal case: prod (tau + 2j - 1 - i)."""
    lam = Partition(lam)
    acc = None
    for i, j in lam.cells():
        factor = tau + Fraction(2 * j - 1 - i)
        acc = factor if acc is None else acc * factor
    return acc if acc is not None else Fraction(1)


def pairing_centralizer(pi: Pairing) -> list[Permutation]:
    """Centralizer of a pairing in S_2n: permute its pairs, flip each pair."""
    pairs = pi.pairs()
    n = len(pairs)
    out = []
    for order in itertools.permutations(range(n)):
        for flips in itertools.product((0, 1), repeat=n):
            images = [0] * (2 * n)
            for i, (a, b) in enumerate(pairs):
                ta, tb = pairs[order[i]]
                if flips[i]:
                    ta, tb = tb, ta
                images[a - 1], images[b - 1] = ta, tb
            out.append(Permutation(images))
    return out


def conjugating_permutation(src: Pairing, dst: Pairing) -> Permutation:
    """Some sigma with sigma src sigma^-1 = dst, by matching pair lists in order."""
    if len(src) != len(dst):
        raise ValueError("pairings must have the same size")
    images = [0] * len(src)
    for (a, b), (c, d) in zip(src.pairs(), dst.pairs()):
        images[a - 1], images[b - 1] = c, d
    return Permutation(images)


def _loop_type_representative(mu: Partition) -> Pairing:
    """A pairing whose pasting against the adjacent pairing has loops mu."""
    images = []
    offset = 0
    for m in mu:
        block = list(range(offset + 2, offset + 2 * m + 1)) + [offset + 1]
        # cyclic shift of the block: pairs (s+2,s+3),(s+4,s+5),...,(s+2m,s+1)
        partner = {}
        for idx in range(0, 2 * m, 2):
            a, b = block[idx], block[idx + 1]
            partner[a] = b
            partner[b] = a
        images.extend(partner[offset + i] for i in range(1, 2 * m + 1))
        offset += 2 * m
    return Pairing(images)


_HISTOGRAM_CACHE: dict[tuple[int, ...], Counter] = {}


def coset_cycle_type_histogram(mu: Partition) -> Counter:
    """Cycle-type counts over {sigma : sigma conjugates pi' to pi}, fixed loop type.

    The multiset of cycle types is the same for every pair (pi, pi') of loop
    type mu and for every choice of base conjugator, so it is cached per type.
    """
    mu = Partition(mu)
    key = tuple(mu)
    cached = _HISTOGRAM_CACHE.get(key)
    if cached is not None:
        return cached
    n = mu.weight
    base = adjacent_pairing(n)
    target = _loop_type_representative(mu)
    sigma0 = conjugating_permutation(base, target)
    hist = Counter((sigma0 * c).cycle_type() for c in pairing_centralizer(base))
    _HISTOGRAM_CACHE[key] = hist
    return hist


def projector_entry(lam: Partition, pi: Pairing, rho: Pairing, sigma0=None) -> Fraction:
    """Entry (pi, rho) of the doubled-shape central projector on pairings.

    dim(2lam)/(2n)! times the character sum over the conjugating coset.  With
    sigma0=None the cached loop-type histogram is used; passing an explicit
    conjugator forces the direct coset enumeration (any valid sigma0 gives the
    same value, which tests exploit).
    """
    lam = Partition(lam)
    n = lam.weight
    if len(pi) != 2 * n or len(rho) != 2 * n:
        raise ValueError(f"pairings must cover 2n = {2 * n} points")
    lam2 = double_shape(lam)
    if sigma0 is None:
        hist = coset_cycle_type_histogram(loop_type(pi, rho))
    else:
        if not rho.conjugate_by(sigma0) == pi:
            raise ValueError("sigma0 does not conjugate rho to pi")
        hist = Counter((sigma0 * c).cycle_type() for c in pairing_centralizer(rho))
    total = sum(count * character(lam2, ct) for ct, count in hist.items())
    return Fraction(hook_dimension(lam2) * total, factorial(2 * n))


@dataclass
class WeingartenTableO:
    """Gram and Weingarten matrices on the pairing basis for one (n, tau)."""

    n: int
    tau: object
    basis: list[Pairing]
    gram: list[list]
    weingarten: list[list]
    excluded: list[Partition] = field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {
            "group": "orthogonal",
            "n": self.n,
            "tau": "symbolic" if is_symbolic(self.tau) else render(Fraction(self.tau)),
            "basis": [p.to_text() for p in self.basis],
            "gram": [[render(x) for x in row] for row in self.gram],
            "weingarten": [[render(x) for x in row] for row in self.weingarten],
            "excluded": [p.to_text() for p in self.excluded],
        }


def wg_value_orthogonal(mu: Partition, tau):
    """Weingarten entry for a pair of pairings of loop type mu."""
    mu = Partition(mu)
    n = mu.weight
    base = adjacent_pairing(n)
    target = _loop_type_representative(mu)
    total = None
    for lam in partitions_of(n):
        c = c_orthogonal(lam, tau)
        if not c:
            continue
        entry = projector_entry(lam, target, base)
        if not entry:
            continue
        term = invert(c) * entry
        total = term if total is None else total + term
    return total if total is not None else Fraction(0)


def weingarten_orthogonal(n: int, tau) -> WeingartenTableO:
    if n < 1:
        raise ValueError(f"weingarten_orthogonal requires n >= 1, got {n}")
    basis = enumerate_pairings(n)
    values = {mu: wg_value_orthogonal(mu, tau) for mu in partitions_of(n)}
    wg = [[values[loop_type(pi, rho)] for rho in basis] for pi in basis]
    excluded = [] if is_symbolic(tau) else [
        lam for lam in partitions_of(n) if not c_orthogonal(lam, tau)
    ]
    return WeingartenTableO(
        n=n,
        tau=tau,
        basis=basis,
        gram=gram_orthogonal(n, tau),
        weingarten=wg,
        excluded=excluded,
    )


# -- verification operations -------------------------------------------------


@dataclass
class OidReport:
    """Term-exact comparison of the odd JM product with its pairing expansion."""

    n: int
    expected_terms: int
    lhs_terms: int
    representatives_distinct: bool
    expansion_matches: bool

    @property
    def ok(self) -> bool:
        return (
            self.expansion_matches
            and self.representatives_distinct
            and self.lhs_terms == self.expected_terms
        )


def verify_oid(n: int, tau=TAU) -> OidReport:
    """Check that the odd JM product equals the sum of coset representatives
    weighted by tau^(loops against the adjacent pairing)."""
    lhs = jm_product_orthogonal(n, tau)
    base = adjacent_pairing(n)
    powers = _tau_powers(tau, n)
    rhs_terms: dict[Permutation, object] = {}
    for pi in enumerate_pairings(n):
        sigma = coset_representative(pi).sigma
        rhs_terms[sigma] = powers[loop_count(base, pi)]
    expected = double_factorial_odd(n)
    return OidReport(
        n=n,
        expected_terms=expected,
        lhs_terms=len(lhs),
        representatives_distinct=len(rhs_terms) == expected,
        expansion_matches=lhs == AlgebraElement(2 * n, rhs_terms),
    )


@dataclass
class StabilityReport:
    """G commutes with the averaging projector; its basis matrix is the Gram."""

    n: int
    commutes: bool
    basis_matrix_is_gram: bool

    @property
    def ok(self) -> bool:
        return self.commutes and self.basis_matrix_is_gram


def verify_stability_lemma(n: int, tau=TAU) -> StabilityReport:
    g = jm_product_orthogonal(n, tau)
    proj = average_projector(n)
    commutes = g * proj == proj * g

    # expand sigma_pi * P * G over the standard basis sigma_pi' * P: the
    # cosets sigma_pi' H are disjoint, so the coefficient of the
    # representative itself, rescaled by |H|, reads off the matrix entry.
    basis = enumerate_pairings(n)
    reps = [coset_representative(pi).sigma for pi in basis]
    order = hyperoctahedral_order(n)
    pg = proj * g
    extracted = [
        [order * pg.coefficient(reps[j].inverse() * reps[i]) for j in range(len(basis))]
        for i in range(len(basis))
    ]
    return StabilityReport(
        n=n,
        commutes=commutes,
        basis_matrix_is_gram=mat_eq(extracted, gram_orthogonal(n, tau)),
    )


def verify_key_identity(n: int, k: int) -> bool:
    """P_H * (m_2k - m_(2k-1) - 1) must vanish identically."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= {n}, got {k}")
    size = 2 * n
    diff = jm_element(2 * k, size) - jm_element(2 * k - 1, size) - AlgebraElement.unit(size)
    return not (average_projector(n) * diff)


@dataclass
class DoublingReport:
    """Survivors of hyperoctahedral averaging are exactly doubled tableaux."""

    n: int
    survivors: set
    expected: set
    even_row_shapes: bool

    @property
    def ok(self) -> bool:
        return self.survivors == self.expected and self.even_row_shapes


def _projector_pairing_trace(proj: AlgebraElement, e: AlgebraElement) -> Fraction:
    """Identity coefficient of proj * e, i.e. the normalized regular trace.

    Both factors are self-adjoint idempotents (antipode-invariant, rational),
    so the full product vanishes exactly when this single coefficient does:
    tr((Pe)(Pe)^*) = tr(PeP) = tr(Pe) by idempotence and cyclicity, and the
    regular trace is faithful on positive elements.
    """
    total = Fraction(0)
    terms = e.terms
    for h, w in proj.terms.items():
        c = terms.get(h)
        if c is not None:
            total += w * c
    return total


def verify_doubling(n: int, deep_check_products: bool | None = None) -> DoublingReport:
    """Classify which size-2n idempotents survive left averaging over H_n.

    By default the expensive direct products P * e(T) are computed (and
    cross-checked against the trace criterion) for 2n <= 6; for larger sizes
    only the exact trace criterion is used unless forced.
    """
    size = 2 * n
    if deep_check_products is None:
        deep_check_products = size <= 6
    proj = average_projector(n)
    survivors = set()
    for lam in partitions_of(size):
        for t in standard_tableaux(lam):
            if size >= 8:
                e = _extend_idempotent(t, cache=False)
            else:
                e = young_idempotent(t)
            trace_alive = bool(_projector_pairing_trace(proj, e))
            if deep_check_products:
                product_alive = bool(proj * e)
                if product_alive != trace_alive:
                    raise AssertionError(
                        f"trace criterion disagrees with direct product at {t!r}"
                    )
            if trace_alive:
                survivors.add(t.rows)
    expected = set()
    for lam in partitions_of(n):
        for t in standard_tableaux(lam):
            expected.add(double_tableau(t).rows)
    even_rows = all(
        all(len(row) % 2 == 0 for row in rows) for rows in survivors
    )
    return DoublingReport(n=n, survivors=survivors, expected=expected, even_row_shapes=even_rows)


def verify_gram_commutation(n: int, tau1: Fraction, tau2: Fraction) -> bool:
    """Gram matrices at two parameter values must commute exactly."""
    if tau1 == tau2:
        raise ValueError("parameters must be distinct for a meaningful check")
    g1 = gram_orthogonal(n, Fraction(tau1))
    g2 = gram_orthogonal(n, Fraction(tau2))
    return mat_eq(mat_mul(g1, g2), mat_mul(g2, g1))


def weingarten_matrix_from_central_idempotents(n: int, tau):
    """Independent route to the Weingarten matrix through C[S_2n] itself.

    Builds W = sum invert(c_lam) * P_2lam as a group-algebra element and reads
    off its matrix on the pairing basis the same way the stability lemma does.
    Used to arbitrate the entrywise formula at desk scale.
    """
    parts = partitions_of(n)
    w_alg = AlgebraElement.zero(2 * n)
    for lam in parts:
        c = c_orthogonal(lam, tau)
        if not c:
            continue
        w_alg = w_alg + central_idempotent_doubled(lam).map_coefficients(
            lambda x, inv=invert(c): x * inv
        )
    basis = enumerate_pairings(n)
    reps = [coset_representative(pi).sigma for pi in basis]
    order = hyperoctahedral_order(n)
    pw = average_projector(n) * w_alg
    return [
        [order * pw.coefficient(reps[j].inverse() * reps[i]) for j in range(len(basis))]
        for i in range(len(basis))
    ]


def central_idempotent_doubled(lam: Partition) -> AlgebraElement:
    """P_2lam inside C[S_2n], built from the young module."""
    from .young import central_idempotent

    return central_idempotent(double_shape(lam), route="character")
