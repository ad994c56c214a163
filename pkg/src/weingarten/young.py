"""Irreducible characters of S_n and Young's orthogonal idempotents.

Characters come from the Murnaghan-Nakayama rule, implemented on beta sets
(first-column hook lengths) and memoized in a module-level table; bulk use
goes through :class:`CharacterTable`, which can be persisted to JSON so the
S_10 lookups behind orthogonal projector entries are paid for once.

The minimal idempotents e(T) are built by the Lagrange-interpolation style
recursion on the last box: e(T) equals e of the restricted tableau times
the product over the other addable corners c' of
(m_n - c') / (content(T, n) - c').  Distinct addable corners of one shape
have distinct contents, so the denominators never vanish.  Coefficients stay
plain rationals; promotion to symbolic happens downstream on demand.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from pathlib import Path

from .groupalg import AlgebraElement, jm_element, full_basis
from .symcore import Partition, StandardTableau, hook_dimension, partitions_of, standard_tableaux

_CHAR_MEMO: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}

CHARACTER_SCHEMA = "weingarten/character-table/1"


def _beta_set(lam: tuple[int, ...]) -> list[int]:
    ell = len(lam)
    return [lam[i] + (ell - 1 - i) for i in range(ell)]


def _beta_to_partition(beta: list[int]) -> tuple[int, ...]:
    ell = len(beta)
    parts = [beta[i] - (ell - 1 - i) for i in range(ell)]
    return tuple(p for p in parts if p > 0)


def _mn(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if not mu:
        return 1
    key = (lam, mu)
    cached = _CHAR_MEMO.get(key)
    if cached is not None:
        return cached
    strip, rest = mu[0], mu[1:]
    beta = _beta_set(lam)
    present = set(beta)
    total = 0
    for b in beta:
        nb = b - strip
        if nb < 0 or nb in present:
            continue
        height = sum(1 for c in beta if nb < c < b)
        new_beta = sorted((c for c in beta if c != b), reverse=True)
        new_beta.append(nb)
        new_beta.sort(reverse=True)
        term = _mn(_beta_to_partition(new_beta), rest)
        total += -term if height % 2 else term
    _CHAR_MEMO[key] = total
    return total


def character(lam: Partition, mu: Partition) -> int:
    """Irreducible character chi_lam evaluated on the class of cycle type mu."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.weight != mu.weight:
        raise ValueError(f"weight mismatch: |{lam}| != |{mu}|")
    return _mn(tuple(lam), tuple(mu))


def centralizer_order(mu: Partition) -> int:
    """Order of the centralizer of a permutation of cycle type mu."""
    out, run, prev = 1, 0, None
    for part in tuple(mu) + (None,):
        if part == prev:
            run += 1
        else:
            if prev is not None:
                out *= prev**run * factorial(run)
            prev, run = part, 1
    return out


@dataclass(frozen=True)
class CharacterTable:
    """Full character table of S_n on the canonical partition order."""

    n: int
    partitions: tuple[Partition, ...]
    values: tuple[tuple[int, ...], ...]  # values[lam_index][mu_index]

    @classmethod
    def build(cls, n: int) -> "CharacterTable":
        parts = tuple(partitions_of(n))
        values = tuple(
            tuple(character(lam, mu) for mu in parts) for lam in parts
        )
        return cls(n, parts, values)

    def value(self, lam: Partition, mu: Partition) -> int:
        i = self.partitions.index(Partition(lam))
        j = self.partitions.index(Partition(mu))
        return self.values[i][j]

    def to_json_dict(self) -> dict:
        return {
            "schema": CHARACTER_SCHEMA,
            "n": self.n,
            "partitions": [p.to_text() for p in self.partitions],
            "values": [list(row) for row in self.values],
        }

    @classmethod
    def from_json_dict(cls, payload: dict) -> "CharacterTable":
        if payload.get("schema") != CHARACTER_SCHEMA:
            raise ValueError(f"unrecognized character cache schema: {payload.get('schema')!r}")
        parts = tuple(Partition.from_text(t) for t in payload["partitions"])
        values = tuple(tuple(int(v) for v in row) for row in payload["values"])
        return cls(int(payload["n"]), parts, values)

    def save(self, path: Path) -> None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(self.to_json_dict()) + "\n")

    @classmethod
    def load(cls, path: Path) -> "CharacterTable":
        table = cls.from_json_dict(json.loads(path.read_text()))
        table.warm_memo()
        return table

    def warm_memo(self) -> None:
        """Feed the in-process memo so later character() calls hit the cache."""
        for lam, row in zip(self.partitions, self.values):
            for mu, v in zip(self.partitions, row):
                _CHAR_MEMO[(tuple(lam), tuple(mu))] = v

    @classmethod
    def load_or_build(cls, n: int, cache_dir: Path | None = None) -> "CharacterTable":
        if cache_dir is None:
            return cls.build(n)
        path = Path(cache_dir) / f"characters-n{n}.json"
        if path.exists():
            return cls.load(path)
        table = cls.build(n)
        table.save(path)
        return table


def _addable_corner_contents(shape: Partition) -> list[int]:
    """Contents (column - row) of the cells where a box may be added."""
    contents = []
    for i, part in enumerate(shape, start=1):
        if i == 1 or shape[i - 2] > part:
            contents.append(part + 1 - i)
    contents.append(-len(shape))  # fresh row below
    return contents


_IDEMPOTENT_CACHE: dict[tuple[tuple[int, ...], ...], AlgebraElement] = {}


def _extend_idempotent(t: StandardTableau, cache: bool = True) -> AlgebraElement:
    """One recursion step; cache=False keeps huge top-level results transient."""
    n = t.size
    if n == 1:
        e = AlgebraElement.unit(1)
    else:
        tbar = t.restricted()
        e = young_idempotent(tbar).embed(n)
        c_here = t.content(n)
        m_n = jm_element(n, n)
        for c_other in _addable_corner_contents(tbar.shape()):
            if c_other == c_here:
                continue
            factor = m_n - AlgebraElement.unit(n, Fraction(c_other))
            e = (e * factor).scale(Fraction(1, c_here - c_other))
    if cache:
        _IDEMPOTENT_CACHE[t.rows] = e
    return e


def young_idempotent(t: StandardTableau) -> AlgebraElement:
    """Young's orthogonal (seminormal) idempotent indexed by a standard tableau.

    Simultaneously diagonalizes the Jucys-Murphy elements:
    m_k e(T) = e(T) m_k = content(T, k) e(T).
    """
    cached = _IDEMPOTENT_CACHE.get(t.rows)
    if cached is not None:
        return cached
    return _extend_idempotent(t, cache=True)


def central_idempotent(lam: Partition, route: str = "tableau-sum") -> AlgebraElement:
    """Central projector onto the lam-isotypic component of C[S_n].

    route="tableau-sum" sums the minimal idempotents over SYT(lam);
    route="character" expands dim(lam)/n! * sum_sigma chi_lam(sigma^-1) sigma.
    The two must agree exactly (and tests enforce it).  chi on sigma^-1 equals
    chi on sigma since the two are conjugate in S_n; that identification is
    made here, once.
    """
    lam = Partition(lam)
    n = lam.weight
    if route == "tableau-sum":
        out = AlgebraElement.zero(n)
        for t in standard_tableaux(lam):
            out = out + young_idempotent(t)
        return out
    if route == "character":
        scale = Fraction(hook_dimension(lam), factorial(n))
        chi_by_type = {mu: character(lam, mu) for mu in partitions_of(n)}
        terms = {}
        for sigma in full_basis(n):
            chi = chi_by_type[sigma.cycle_type()]
            if chi:
                terms[sigma] = scale * chi
        return AlgebraElement(n, terms)
    raise ValueError(f"unknown route {route!r}")
