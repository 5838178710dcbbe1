"""Brute-force verification of the super bracket axioms, and the linear
systems that pin down admissible deformation functions F.

Checkers work on a ``BracketSystem``: an ordered graded basis plus a bracket
callable.  "Pass" always means the defect is the exact zero element of Q[t]
coefficients, never numerically small.  Witnesses are reported in enumeration
order, so the first (lexicographically lowest) failure wins.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from . import qlinalg
from .brackets import DeformationSpec, SuperElement, deformed_schouten, extension_bracket, form_bracket
from .exterior import FORM, MULTIVECTOR, GradedElement, d, monomial_label
from .liealg import LieAlgebraSpec, OneForm
from .scalars import T, rat


@dataclass(frozen=True)
class BasisItem:
    label: str
    element: object
    superdegree: int

    @property
    def parity(self) -> int:
        return self.superdegree % 2


@dataclass
class BracketSystem:
    """An ordered homogeneous basis together with the bracket to test."""

    label: str
    items: list[BasisItem]
    bracket: Callable

    def pairs(self):
        return itertools.product(self.items, repeat=2)

    def triples(self):
        return itertools.product(self.items, repeat=3)


def _form_monomials(n: int, maxdeg: int) -> list[tuple[int, ...]]:
    out = []
    for deg in range(0, maxdeg + 1):
        out.extend(itertools.combinations(range(1, n + 1), deg))
    return out


def form_system(spec: DeformationSpec, maxdeg: Optional[int] = None) -> BracketSystem:
    """The superalgebra of forms with the configured deformed bracket."""
    n = spec.algebra.n
    maxdeg = n if maxdeg is None else min(maxdeg, n)
    items = [
        BasisItem(monomial_label(FORM, ids), GradedElement.monomial(FORM, n, ids), -len(ids) - 1)
        for ids in _form_monomials(n, maxdeg)
    ]
    return BracketSystem(
        f"forms[{spec.describe()}]",
        items,
        lambda x, y: form_bracket(spec, x, y),
    )


def multivector_system(
    spec: LieAlgebraSpec, phi: OneForm, maxdeg: Optional[int] = None
) -> BracketSystem:
    """Multivectors of degree >= 1 with the phi-deformed Schouten bracket."""
    n = spec.n
    maxdeg = n if maxdeg is None else min(maxdeg, n)
    items = [
        BasisItem(monomial_label(MULTIVECTOR, ids), GradedElement.monomial(MULTIVECTOR, n, ids), len(ids) - 1)
        for deg in range(1, maxdeg + 1)
        for ids in itertools.combinations(range(1, n + 1), deg)
    ]
    return BracketSystem(
        "multivectors[deformed Schouten]",
        items,
        lambda x, y: deformed_schouten(spec, x, y, phi),
    )


def extension_system(spec: DeformationSpec, vectors) -> BracketSystem:
    """h (+) g0' with the Lie-derivative extension bracket."""
    n = spec.algebra.n
    items = []
    for pos, v in enumerate(vectors):
        label = next(
            (f"y{i + 1}" for i, c in enumerate(v.coeffs) if c == 1 and sum(map(bool, v.coeffs)) == 1),
            f"x{pos + 1}",
        )
        items.append(BasisItem(label, SuperElement.from_vector(v), 0))
    for ids in _form_monomials(n, n):
        items.append(
            BasisItem(
                monomial_label(FORM, ids),
                SuperElement.from_form(GradedElement.monomial(FORM, n, ids)),
                -len(ids) - 1,
            )
        )
    return BracketSystem(
        f"extension[{spec.describe()}]",
        items,
        lambda x, y: extension_bracket(spec, x, y),
    )


@dataclass
class Witness:
    labels: tuple[str, ...]
    defect: object

    def to_json(self) -> dict:
        return {"elements": list(self.labels), "defect": str(self.defect)}


@dataclass
class AxiomReport:
    bracket_id: str
    axiom: str
    outcome: str  # "pass" | "fail"
    witness: Optional[Witness]
    checked: int

    @property
    def passed(self) -> bool:
        return self.outcome == "pass"

    def to_json(self) -> dict:
        return {
            "bracket": self.bracket_id,
            "axiom": self.axiom,
            "outcome": self.outcome,
            "checked": self.checked,
            "witness": self.witness.to_json() if self.witness else None,
        }

    def __str__(self) -> str:
        head = f"{self.bracket_id} {self.axiom}: {self.outcome} ({self.checked} checked)"
        if self.witness:
            head += f"\n  witness {self.witness.labels}: defect {self.witness.defect}"
        return head


def supersymmetry_defect(system: BracketSystem, x: BasisItem, y: BasisItem):
    """[x, y] + (-1)^(x'y') [y, x], with shifted-degree parities in the sign."""
    xy = system.bracket(x.element, y.element)
    yx = system.bracket(y.element, x.element)
    return xy + yx if (x.parity * y.parity) % 2 == 0 else xy - yx


def superjacobi_defect(system: BracketSystem, a: BasisItem, b: BasisItem, c: BasisItem):
    """Graded cyclic sum  S (-1)^(a'c') [[a, b], c]."""
    total = None
    for u, v, w in ((a, b, c), (b, c, a), (c, a, b)):
        term = system.bracket(system.bracket(u.element, v.element), w.element)
        if (u.parity * w.parity) % 2:
            term = -term
        total = term if total is None else total + term
    return total


def check_supersymmetry(system: BracketSystem, maxitems: Optional[int] = None) -> AxiomReport:
    items = system.items[:maxitems] if maxitems else system.items
    checked = 0
    for x, y in itertools.product(items, repeat=2):
        checked += 1
        defect = supersymmetry_defect(system, x, y)
        if not defect.is_zero():
            return AxiomReport(system.label, "supersymmetry", "fail", Witness((x.label, y.label), defect), checked)
    return AxiomReport(system.label, "supersymmetry", "pass", None, checked)


def check_superjacobi(system: BracketSystem, maxitems: Optional[int] = None) -> AxiomReport:
    items = system.items[:maxitems] if maxitems else system.items
    checked = 0
    for a, b, c in itertools.product(items, repeat=3):
        checked += 1
        defect = superjacobi_defect(system, a, b, c)
        if not defect.is_zero():
            return AxiomReport(
                system.label, "superjacobi", "fail", Witness((a.label, b.label, c.label), defect), checked
            )
    return AxiomReport(system.label, "superjacobi", "pass", None, checked)


def jacobi_closed_form(
    spec: DeformationSpec, alpha: GradedElement, beta: GradedElement, gamma: GradedElement
) -> GradedElement:
    """Closed-form value of the graded Jacobi cyclic sum for a standard-shape
    bracket (-1)^a d(alpha^beta) + F(a,b) alpha^(t phi)^beta.

    Four terms, each an F-coefficient combination against a fixed wedge; this
    is the independent counterpart of the brute-force ``superjacobi_defect``
    and the two must agree exactly on every basis triple.
    """
    algebra, F = spec.algebra, spec.F
    a, b, g = alpha.degree(), beta.degree(), gamma.degree()
    n = algebra.n
    tphi = GradedElement.from_one_form(spec.phi).scale(T)
    dtphi = d(algebra, tphi)

    def sgn(exponent: int) -> int:
        return -1 if exponent % 2 else 1

    out = GradedElement.zero(FORM, n)
    w1 = alpha.wedge(tphi).wedge(beta).wedge(d(algebra, gamma))
    if not w1.is_zero():
        coeff = F.value(1 + b + g, a) - F.value(a, b) - F.value(b, g) - F.value(g, a) + F.value(1 + g + a, b)
        out = out + w1.scale(coeff * sgn(a * g + a + g))
    w2 = alpha.wedge(d(algebra, beta)).wedge(tphi).wedge(gamma)
    if not w2.is_zero():
        coeff = F.value(1 + a + b, g) + F.value(1 + b + g, a) - F.value(a, b) - F.value(b, g) - F.value(g, a)
        out = out - w2.scale(coeff * sgn(a * g + a + g))
    w3 = alpha.wedge(dtphi).wedge(beta).wedge(gamma)
    if not w3.is_zero():
        coeff = F.value(a, b) + F.value(b, g) + F.value(g, a)
        out = out + w3.scale(coeff * sgn(a * g + a + b + g))
    w4 = d(algebra, alpha).wedge(beta).wedge(tphi).wedge(gamma)
    if not w4.is_zero():
        coeff = F.value(1 + a + b, g) - F.value(a, b) - F.value(b, g) - F.value(g, a) + F.value(1 + g + a, b)
        out = out - w4.scale(coeff * sgn(a * g + g))
    return out


# ---------------------------------------------------------------------------
# Admissibility conditions on F
# ---------------------------------------------------------------------------


@dataclass
class FSolutionSpace:
    """Solution space of the admissibility conditions on a bounded grid.

    ``basis`` holds symmetric tables on {(a,b) : a+b <= grid}; every table
    satisfies all imposed linear conditions exactly.
    """

    grid: int
    constraints: str  # "closed" | "nonclosed"
    basis: list[dict[tuple[int, int], Fraction]] = field(default_factory=list)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def _variables(self) -> list[tuple[int, int]]:
        return _grid_variables(self.grid)

    def contains_table(self, value_of) -> bool:
        """Is the symmetric table (a,b) -> value_of(a,b) in the span?"""
        variables = self._variables()
        target = [rat(value_of(a, b)) for a, b in variables]
        span = [[tab[v] for v in variables] for tab in self.basis]
        if not any(target):
            return True
        return qlinalg.solve_in_span(span, target) is not None

    def to_json(self) -> dict:
        return {
            "grid": self.grid,
            "constraints": self.constraints,
            "dimension": self.dimension,
            "basis": [
                {f"{a},{b}": str(v) for (a, b), v in sorted(tab.items())} for tab in self.basis
            ],
        }


def _grid_variables(N: int) -> list[tuple[int, int]]:
    return [(a, b) for a in range(N + 1) for b in range(a, N + 1 - a)]


def _solve_f_system(N: int, rows: list[list[Fraction]], constraints: str) -> FSolutionSpace:
    variables = _grid_variables(N)
    basis = []
    for vec in qlinalg.nullspace(rows, len(variables)):
        lead = next((v for v in vec if v != 0), None)
        if lead is not None and lead != 1:
            vec = tuple(v / lead for v in vec)
        table = {}
        for (a, b), v in zip(variables, vec):
            table[(a, b)] = v
            table[(b, a)] = v
        basis.append(table)
    return FSolutionSpace(N, constraints, basis)


def _add_coeff(row, index, a, b, coeff):
    key = (a, b) if a <= b else (b, a)
    row[index[key]] += coeff


def solve_F_closed(N: int) -> FSolutionSpace:
    """Symmetric F with, for every triple (a, b, c) fully inside the grid,

        F(1+b+c, a) + F(1+c+a, b) = F(a,b) + F(b,c) + F(c,a)

    and its two cyclic partners.  The expected solution line is kappa*(a+b+2).
    """
    if N < 2:
        raise ValueError("grid bound too small to impose any condition")
    variables = _grid_variables(N)
    index = {v: i for i, v in enumerate(variables)}
    rows = []
    for a in range(N):
        for b in range(N - a):
            for c in range(N - a - b):
                # all six argument pairs have coordinate sum a+b+c or a+b+c+1 <= N
                shifted = [(1 + b + c, a), (1 + c + a, b), (1 + a + b, c)]
                for drop in range(3):
                    row = [Fraction(0)] * len(variables)
                    for k, pair in enumerate(shifted):
                        if k != drop:
                            _add_coeff(row, index, *pair, Fraction(1))
                    for pair in ((a, b), (b, c), (c, a)):
                        _add_coeff(row, index, *pair, Fraction(-1))
                    rows.append(row)
    return _solve_f_system(N, rows, "closed")


def solve_F_nonclosed(N: int) -> FSolutionSpace:
    """Symmetric F subject to the non-closed-phi condition families

        F(1+b+c,a) + F(1+c+a,b) = 0        (and the two cyclic partners)
        F(a,b) + F(b,c) + F(c,a) = 0

    which force F = 0.
    """
    if N < 2:
        raise ValueError("grid bound too small to impose any condition")
    variables = _grid_variables(N)
    index = {v: i for i, v in enumerate(variables)}
    rows = []
    for a in range(N + 1):
        for b in range(N + 1):
            for c in range(N + 1):
                shifted = [(1 + b + c, a), (1 + c + a, b), (1 + a + b, c)]
                if a + b + c + 1 <= N:
                    for drop in range(3):
                        row = [Fraction(0)] * len(variables)
                        for k, pair in enumerate(shifted):
                            if k != drop:
                                _add_coeff(row, index, *pair, Fraction(1))
                        rows.append(row)
                if a + b <= N and b + c <= N and c + a <= N:
                    row = [Fraction(0)] * len(variables)
                    for pair in ((a, b), (b, c), (c, a)):
                        _add_coeff(row, index, *pair, Fraction(1))
                    rows.append(row)
    return _solve_f_system(N, rows, "nonclosed")


def satisfies_difference_identity(table: dict[tuple[int, int], Fraction], N: int) -> bool:
    """F(1+c+a, b) = F(1+a+b, c) wherever both arguments sit in the grid."""
    for a in range(N):
        for b in range(N - a):
            for c in range(N - a - b):
                left = table.get((1 + c + a, b), table.get((b, 1 + c + a)))
                right = table.get((1 + a + b, c), table.get((c, 1 + a + b)))
                if left != right:
                    return False
    return True
