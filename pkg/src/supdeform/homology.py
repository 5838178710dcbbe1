"""Boundary matrices over Q[t], parametric ranks, and piecewise Betti numbers.

Generic ranks are computed fraction-free (Bareiss) over Q[t].  The special
locus of a weight-w complex is the set of monic irreducible polynomial
conditions where some boundary rank drops; at a rational root ranks are
recomputed by exact substitution, at an irrational condition p over the
quotient ring Q[t]/(p).  If a supposedly irreducible p splits during an
inversion, the condition is refined and recomputed (this cannot happen for
conditions of degree <= 3, which are certified by the factoring routine).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional, Union

from . import qlinalg
from .chains import ChainComplexSystem, SuperWord
from .scalars import ONE, PolyT, ZERO, format_rational, irreducible_factors, poly_xgcd

# matrices up to this many minors use the exact minor-gcd locus; larger ones
# fall back to factoring the fraction-free pivots, verified by rank drop
MINOR_BUDGET = 4000


@dataclass
class BoundaryMatrix:
    """The boundary map C_m^w -> C_{m-1}^w in the canonical word bases."""

    m: int
    w: int
    rows: list[SuperWord]
    cols: list[SuperWord]
    entries: list[list[PolyT]]  # entries[r][c] = coefficient of rows[r] in d(cols[c])

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)


def boundary_matrix(system: ChainComplexSystem, m: int, w: int) -> BoundaryMatrix:
    cols = system.enumerate_basis(m, w)
    rows = system.enumerate_basis(m - 1, w) if m >= 2 else []
    row_index = {word: i for i, word in enumerate(rows)}
    entries = [[ZERO] * len(cols) for _ in rows]
    for c, word in enumerate(cols):
        image = system.boundary_word(word)
        for target, coeff in image.terms.items():
            r = row_index.get(target)
            if r is None:
                raise RuntimeError("boundary image left the expected weight space")
            entries[r][c] = coeff
    return BoundaryMatrix(m, w, rows, cols, entries)


def _entries(M: Union[BoundaryMatrix, list]) -> list[list[PolyT]]:
    return M.entries if isinstance(M, BoundaryMatrix) else M


def bareiss(entries: list[list[PolyT]]) -> tuple[int, list[PolyT]]:
    """Fraction-free elimination; returns (rank, pivot sequence).

    Pivots are chosen of minimal degree so the pivot product stays small.
    """
    M = [row[:] for row in entries]
    nrows = len(M)
    ncols = len(M[0]) if nrows else 0
    pivots: list[PolyT] = []
    prev = ONE
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        best = None
        for i in range(r, nrows):
            if not M[i][c].is_zero() and (best is None or M[i][c].degree < M[best][c].degree):
                best = i
        if best is None:
            continue
        M[r], M[best] = M[best], M[r]
        piv = M[r][c]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                M[i][j] = (piv * M[i][j] - M[i][c] * M[r][j]).exact_div(prev)
            M[i][c] = ZERO
        pivots.append(piv)
        prev = piv
        r += 1
    return len(pivots), pivots


def generic_rank(M: Union[BoundaryMatrix, list]) -> int:
    """Rank over the fraction field Q(t)."""
    return bareiss(_entries(M))[0]


def det_poly(entries: list[list[PolyT]]) -> PolyT:
    """Determinant up to sign (row swaps untracked); exact via Bareiss."""
    n = len(entries)
    if n == 0:
        return ONE
    rank, pivots = bareiss(entries)
    return pivots[-1] if rank == n else ZERO


def minors_gcd(entries: list[list[PolyT]], r: int) -> PolyT:
    """Monic gcd of all r x r minors; ONE when r = 0."""
    if r == 0:
        return ONE
    nrows, ncols = len(entries), len(entries[0])
    g = ZERO
    for rows_sel in combinations(range(nrows), r):
        for cols_sel in combinations(range(ncols), r):
            sub = [[entries[i][j] for j in cols_sel] for i in rows_sel]
            det = det_poly(sub)
            if det.is_zero():
                continue
            g = det.monic() if g.is_zero() else _poly_gcd(g, det)
            if g == ONE:
                return g
    return g


def _poly_gcd(a: PolyT, b: PolyT) -> PolyT:
    from .scalars import poly_gcd

    return poly_gcd(a, b)


class FactorSplit(Exception):
    """A modulus believed irreducible revealed a proper factor."""

    def __init__(self, factor: PolyT):
        super().__init__(f"modulus splits off {factor}")
        self.factor = factor


def rank_at_rational(M: Union[BoundaryMatrix, list], t0: Fraction) -> int:
    rows = [[e(t0) for e in row] for row in _entries(M)]
    return qlinalg.rank(rows)


def rank_modulo(M: Union[BoundaryMatrix, list], p: PolyT) -> int:
    """Rank over Q[t]/(p) for monic p of degree >= 1.

    Requires p irreducible to be a field; a pivot whose gcd with p is proper
    raises FactorSplit so the caller can refine the condition.
    """
    if p.degree < 1:
        raise ValueError("modulus must have degree >= 1")
    rows = [[e % p for e in row] for row in _entries(M)]
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    rank = 0
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        piv_row = next((i for i in range(r, nrows) if not rows[i][c].is_zero()), None)
        if piv_row is None:
            continue
        rows[r], rows[piv_row] = rows[piv_row], rows[r]
        g, s, _ = poly_xgcd(rows[r][c], p)
        if g.degree > 0:
            raise FactorSplit(g)
        inv = s  # s * pivot == 1 (mod p) since the xgcd is normalized monic
        rows[r] = [(inv * e) % p for e in rows[r]]
        for i in range(nrows):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [(e - f * q) % p for e, q in zip(rows[i], rows[r])]
        rank += 1
        r += 1
    return rank


def special_locus_for_matrix(
    entries: list[list[PolyT]], rank: Optional[int] = None, method: str = "auto"
) -> list[PolyT]:
    """Monic irreducible conditions where this matrix's rank drops."""
    if not entries or not entries[0]:
        return []
    if rank is None:
        rank = generic_rank(entries)
    if rank == 0:
        return []
    nrows, ncols = len(entries), len(entries[0])
    n_minors = _comb(nrows, rank) * _comb(ncols, rank)
    if method == "auto":
        method = "minors" if n_minors <= MINOR_BUDGET else "pivots"
    if method == "minors":
        g = minors_gcd(entries, rank)
        return sorted(irreducible_factors(g), key=_poly_sort_key) if g.degree >= 1 else []
    if method != "pivots":
        raise ValueError(f"unknown locus method {method!r}")
    product = ONE
    for piv in bareiss(entries)[1]:
        product = product * piv
    if product.degree < 1:
        return []
    # pivot products can carry spurious factors; keep only verified rank drops
    candidates = irreducible_factors(product)
    verified = []
    seen = set()
    while candidates:
        factor = candidates.pop(0)
        key = tuple(factor.coeffs)
        if key in seen:
            continue
        seen.add(key)
        if factor.degree == 1:
            drop = rank_at_rational(entries, -factor.coeffs[0]) < rank
        else:
            try:
                drop = rank_modulo(entries, factor) < rank
            except FactorSplit as split:
                candidates.extend(irreducible_factors(split.factor))
                candidates.extend(irreducible_factors(factor.exact_div(split.factor)))
                continue
        if drop:
            verified.append(factor)
    return sorted(verified, key=_poly_sort_key)


def _comb(n: int, k: int) -> int:
    from math import comb

    return comb(n, k)


def _poly_sort_key(p: PolyT):
    return (p.degree, tuple(p.coeffs))


def special_locus(system: ChainComplexSystem, w: int, max_degree: Optional[int] = None) -> list[PolyT]:
    """Union over m of each boundary matrix's rank-drop conditions."""
    bound = system.max_length(w)
    if max_degree is not None:
        bound = min(bound, max_degree)
    seen = {}
    for m in range(1, bound + 1):
        M = boundary_matrix(system, m, w)
        for factor in special_locus_for_matrix(M.entries):
            seen[tuple(factor.coeffs)] = factor
    return sorted(seen.values(), key=_poly_sort_key)


@dataclass
class SpecialCase:
    """Ranks, kernels, and Betti numbers on one component of the locus."""

    condition: PolyT
    point: Optional[Fraction]  # the rational root for linear conditions
    ranks: list[int]
    kernels: list[int]
    betti: list[int]

    def label(self) -> str:
        if self.point is not None:
            return f"t = {format_rational(self.point)}"
        return f"{self.condition} = 0"

    def to_json(self) -> dict:
        return {
            "condition": [format_rational(c) for c in self.condition.coeffs],
            "point": None if self.point is None else format_rational(self.point),
            "ranks": self.ranks,
            "kernels": self.kernels,
            "betti": self.betti,
        }


@dataclass
class BettiReport:
    """Piecewise Betti table of one weighted complex."""

    weight: int
    degrees: list[int]
    dims: list[int]
    generic_ranks: list[int]
    generic_kernels: list[int]
    generic_betti: list[int]
    locus: list[PolyT]
    special: list[SpecialCase] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "weight": self.weight,
            "degrees": self.degrees,
            "dims": self.dims,
            "generic": {
                "ranks": self.generic_ranks,
                "kernels": self.generic_kernels,
                "betti": self.generic_betti,
            },
            "special_locus": [[format_rational(c) for c in p.coeffs] for p in self.locus],
            "special": [case.to_json() for case in self.special],
        }

    def to_text(self) -> str:
        lines = [f"weight {self.weight}"]
        lines.append("  m:        " + "  ".join(f"{m:3d}" for m in self.degrees))
        lines.append("  dim:      " + "  ".join(f"{d:3d}" for d in self.dims))
        lines.append("  ker:      " + "  ".join(f"{k:3d}" for k in self.generic_kernels) + "   (generic)")
        lines.append("  betti:    " + "  ".join(f"{b:3d}" for b in self.generic_betti) + "   (generic)")
        if self.locus:
            lines.append("  special locus: " + ", ".join(str(p) for p in self.locus))
            for case in self.special:
                lines.append(f"  at {case.label()}:")
                lines.append("    ker:    " + "  ".join(f"{k:3d}" for k in case.kernels))
                lines.append("    betti:  " + "  ".join(f"{b:3d}" for b in case.betti))
        else:
            lines.append("  special locus: (empty)")
        return "\n".join(lines)


def _betti_from_ranks(dims: list[int], ranks: list[int]) -> tuple[list[int], list[int]]:
    kernels = [dims[i] - ranks[i] for i in range(len(dims))]
    betti = [kernels[i] - (ranks[i + 1] if i + 1 < len(ranks) else 0) for i in range(len(dims))]
    return kernels, betti


def _check_euler(dims: list[int], betti: list[int], context: str):
    chi_dims = sum((-1) ** m * d for m, d in enumerate(dims))
    chi_betti = sum((-1) ** m * b for m, b in enumerate(betti))
    if chi_dims != chi_betti:
        raise RuntimeError(f"Euler characteristic mismatch ({context})")


def betti_piecewise(system: ChainComplexSystem, w: int, max_degree: Optional[int] = None) -> BettiReport:
    """Assemble the piecewise Betti report of the weight-w complex."""
    bound = system.max_length(w)
    if max_degree is not None:
        bound = min(bound, max_degree)
    degrees = list(range(1, bound + 1))
    matrices = [boundary_matrix(system, m, w) for m in degrees]
    dims = [len(M.cols) for M in matrices]
    _check_complex(matrices)

    gen_ranks = [generic_rank(M) for M in matrices]
    gen_kernels, gen_betti = _betti_from_ranks(dims, gen_ranks)
    _check_euler(dims, gen_betti, f"generic, weight {w}")

    locus = {}
    for M in matrices:
        for factor in special_locus_for_matrix(M.entries):
            locus[tuple(factor.coeffs)] = factor

    special = []
    queue = sorted(locus.values(), key=_poly_sort_key)
    while queue:
        cond = queue.pop(0)
        try:
            if cond.degree == 1:
                point = -cond.coeffs[0]  # monic t - point
                ranks = [rank_at_rational(M, point) for M in matrices]
            else:
                point = None
                ranks = [rank_modulo(M, cond) for M in matrices]
        except FactorSplit as split:
            for piece in irreducible_factors(split.factor) + irreducible_factors(cond.exact_div(split.factor)):
                if all(tuple(piece.coeffs) != tuple(q.coeffs) for q in queue):
                    queue.append(piece)
            queue.sort(key=_poly_sort_key)
            continue
        for r, g in zip(ranks, gen_ranks):
            if r > g:
                raise RuntimeError("specialized rank exceeds generic rank")
        kernels, betti = _betti_from_ranks(dims, ranks)
        _check_euler(dims, betti, f"{cond} = 0, weight {w}")
        special.append(SpecialCase(cond, point, ranks, kernels, betti))

    special.sort(key=lambda case: _poly_sort_key(case.condition))
    return BettiReport(
        w, degrees, dims, gen_ranks, gen_kernels, gen_betti, sorted(locus.values(), key=_poly_sort_key), special
    )


def _check_complex(matrices: list[BoundaryMatrix]):
    """d_m . d_{m+1} = 0 as matrices over Q[t]."""
    for A, B in zip(matrices, matrices[1:]):
        if not A.cols or not B.cols or not A.rows:
            continue
        for i in range(len(A.rows)):
            for j in range(len(B.cols)):
                acc = ZERO
                for k in range(len(A.cols)):
                    acc = acc + A.entries[i][k] * B.entries[k][j]
                if not acc.is_zero():
                    raise RuntimeError(f"d.d != 0 between degrees {A.m} and {B.m}")
