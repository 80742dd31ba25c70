"""Coefficients of products of linear differences, for Nullstellensatz certificates.

Variables are ``x_1..x_n`` and a factor ``(k, l)`` stands for ``x_k - x_l``
(1-based). Coefficients are exact Python integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

# Five-cycle configuration: the product over all pairs of x_1..x_9 divided by
# the four pairs that do not see each other.
LEMMA_C5_NONSEEING = ((1, 9), (5, 8), (3, 6), (4, 7))
LEMMA_C5_SIZES = (5, 6, 5, 5, 5, 5, 5, 5, 5)
LEMMA_C5_TARGET = (4, 5, 4, 4, 3, 3, 3, 3, 3)
DEFAULT_CANDIDATE_BUDGET = 10_000


class SparsePolynomial:
    """Multivariate polynomial as ``{exponent tuple: int}`` with optional exponent caps.

    Monomials exceeding a cap in any variable are dropped on multiplication,
    which is exact for the purpose of reading coefficients inside the cap box.
    """

    def __init__(self, nvars: int, terms=None, caps: Sequence[int] | None = None):
        self.nvars = nvars
        self.caps = tuple(caps) if caps is not None else None
        if self.caps is not None and len(self.caps) != nvars:
            raise ValueError("caps must have one entry per variable")
        self.terms = {}
        for mono, c in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) != nvars:
                raise ValueError(f"monomial {mono} has wrong length")
            if c and self._fits(mono):
                self.terms[mono] = self.terms.get(mono, 0) + c
        self.terms = {m: c for m, c in self.terms.items() if c}

    @classmethod
    def one(cls, nvars: int, caps=None) -> "SparsePolynomial":
        return cls(nvars, {(0,) * nvars: 1}, caps)

    def _fits(self, mono) -> bool:
        return self.caps is None or all(a <= b for a, b in zip(mono, self.caps))

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def coefficient(self, mono: Sequence[int]) -> int:
        return self.terms.get(tuple(mono), 0)

    def mul_difference(self, k: int, l: int) -> "SparsePolynomial":
        """Multiply by ``x_k - x_l`` (1-based), pruning past the caps."""
        i, j = k - 1, l - 1
        cap_i = self.caps[i] if self.caps else None
        cap_j = self.caps[j] if self.caps else None
        out: dict = {}
        for mono, c in self.terms.items():
            if cap_i is None or mono[i] < cap_i:
                m = mono[:i] + (mono[i] + 1,) + mono[i + 1:]
                out[m] = out.get(m, 0) + c
            if cap_j is None or mono[j] < cap_j:
                m = mono[:j] + (mono[j] + 1,) + mono[j + 1:]
                out[m] = out.get(m, 0) - c
        res = SparsePolynomial(self.nvars, caps=self.caps)
        res.terms = {m: c for m, c in out.items() if c}
        return res

    def __mul__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        if other.nvars != self.nvars:
            raise ValueError("variable counts differ")
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                if self._fits(m):
                    out[m] = out.get(m, 0) + c1 * c2
        res = SparsePolynomial(self.nvars, caps=self.caps)
        res.terms = {m: c for m, c in out.items() if c}
        return res

    def __eq__(self, other) -> bool:
        return isinstance(other, SparsePolynomial) and self.nvars == other.nvars and self.terms == other.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        return f"SparsePolynomial(nvars={self.nvars}, terms={len(self.terms)})"


@dataclass(frozen=True)
class DifferenceFactorSet:
    n: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen = set()
        for k, l in self.pairs:
            if not 1 <= k < l <= self.n:
                raise ValueError(f"factor ({k}, {l}) must satisfy 1 <= k < l <= {self.n}")
            if (k, l) in seen:
                raise ValueError(f"duplicate factor ({k}, {l})")
            seen.add((k, l))

    def __len__(self) -> int:
        return len(self.pairs)


def conflict_pairs_to_factors(conflicts: Iterable[tuple[int, int]], n: int) -> DifferenceFactorSet:
    """One factor per conflicting pair of 1-based indices, oriented ``k < l``."""
    pairs = set()
    for a, b in conflicts:
        if a == b:
            continue
        k, l = min(a, b), max(a, b)
        if not (1 <= k and l <= n):
            raise ValueError(f"conflict ({a}, {b}) outside 1..{n}")
        pairs.add((k, l))
    return DifferenceFactorSet(n, tuple(sorted(pairs)))


def lemma_c5_factors() -> DifferenceFactorSet:
    skip = {tuple(sorted(p)) for p in LEMMA_C5_NONSEEING}
    pairs = [(k, l) for k in range(1, 10) for l in range(k + 1, 10) if (k, l) not in skip]
    return DifferenceFactorSet(9, tuple(pairs))


def _pairs(factors):
    return factors.pairs if isinstance(factors, DifferenceFactorSet) else tuple(factors)


def coefficient(factors, target: Sequence[int]) -> int:
    """Coefficient of ``prod x_i^target[i]`` in the product of ``(x_k - x_l)``.

    Factors may be a :class:`DifferenceFactorSet` or any sequence of ordered
    pairs (so that orientation can be flipped). Exponents are capped at the
    target, and a partial monomial is dropped as soon as some variable can no
    longer reach its target from the factors still to come.
    """
    pairs = sorted(_pairs(factors))
    target = tuple(target)
    n = len(target)
    for k, l in pairs:
        if not (1 <= k <= n and 1 <= l <= n) or k == l:
            raise ValueError(f"factor ({k}, {l}) invalid for {n} variables")
    if sum(target) != len(pairs):
        return 0
    # remaining[t][i]: factors from position t on that involve variable i
    remaining = [[0] * n for _ in range(len(pairs) + 1)]
    for t in range(len(pairs) - 1, -1, -1):
        row = remaining[t + 1][:]
        k, l = pairs[t]
        row[k - 1] += 1
        row[l - 1] += 1
        remaining[t] = row
    if any(target[i] > remaining[0][i] for i in range(n)):
        return 0

    poly = SparsePolynomial.one(n, caps=target)
    for t, (k, l) in enumerate(pairs):
        poly = poly.mul_difference(k, l)
        rest = remaining[t + 1]
        poly.terms = {
            m: c for m, c in poly.terms.items() if all(target[i] - m[i] <= rest[i] for i in range(n))
        }
    return poly.coefficient(target)


def expand(factors, n: int) -> SparsePolynomial:
    """Full product without caps (small inputs only)."""
    poly = SparsePolynomial.one(n)
    for k, l in _pairs(factors):
        poly = poly.mul_difference(k, l)
    return poly


@dataclass(frozen=True)
class Certificate:
    degree: int
    target: tuple[int, ...]
    coefficient: int
    list_sizes: tuple[int, ...]

    @property
    def degree_ok(self) -> bool:
        return sum(self.target) == self.degree and all(k < s for k, s in zip(self.target, self.list_sizes))


def candidate_monomials(caps: Sequence[int], total: int) -> Iterator[tuple[int, ...]]:
    """Exponent vectors with ``v[i] <= caps[i]`` summing to ``total``, lexicographically decreasing."""
    caps = tuple(caps)
    suffix = [0] * (len(caps) + 1)
    for i in range(len(caps) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + caps[i]

    def rec(i, left):
        if i == len(caps):
            if left == 0:
                yield ()
            return
        for k in range(min(caps[i], left), -1, -1):
            if suffix[i + 1] >= left - k:
                for rest in rec(i + 1, left - k):
                    yield (k,) + rest

    yield from rec(0, total)


def cn_certificate(list_sizes: Sequence[int], conflicts, budget: int = DEFAULT_CANDIDATE_BUDGET):
    """A nonzero coefficient with each exponent below its list size, or None.

    ``conflicts`` are 1-based index pairs (or a :class:`DifferenceFactorSet`).
    A certificate means every assignment of lists with these sizes admits a
    choice with all conflicting pairs distinct. None means "inconclusive":
    no suitable monomial was found within ``budget`` candidates.
    """
    sizes = tuple(int(s) for s in list_sizes)
    if any(s < 1 for s in sizes):
        raise ValueError("list sizes must be positive")
    n = len(sizes)
    if isinstance(conflicts, DifferenceFactorSet):
        factors = conflicts
    else:
        factors = conflict_pairs_to_factors(conflicts, n)
    m = len(factors)
    caps = tuple(s - 1 for s in sizes)
    if sum(caps) < m:
        return None

    tried = set()
    first = []
    if n == 9 and sizes == LEMMA_C5_SIZES:
        first.append(LEMMA_C5_TARGET)
    seen_budget = 0
    for target in (*first, *candidate_monomials(caps, m)):
        if target in tried:
            continue
        tried.add(target)
        seen_budget += 1
        if seen_budget > budget:
            return None
        c = coefficient(factors, target)
        if c:
            return Certificate(m, tuple(target), c, sizes)
    return None
