"""Exact su(N) representation combinatorics.

Everything in this module is exact rational arithmetic: irreducible
representations are identified by Dynkin labels, quadratic Casimir
eigenvalues come out as ``Fraction`` values, and tensor decompositions are
integer multisets.  The module serves as the independent oracle for the
spectra of the mixed-tensor generators built numerically elsewhere.

Conventions
-----------
* A Dynkin label ``(l_1, ..., l_{N-1})`` lists column multiplicities of the
  reduced Young diagram (``l_b`` = number of columns of height ``b``).
* Diagrams are always stored reduced: full columns of N boxes are deleted.
* The Casimir normalization is ``c2 = (1/2N) sum_ij (l_i + 2) Ainv_ij l_j``
  with ``Ainv`` the inverse Cartan matrix.  In this normalization the
  adjoint representation has ``c2 = 1`` exactly; physics conventions that
  give the fundamental Casimir ``(N^2-1)/2N`` are larger by a factor N.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import DecompositionError, DomainError, GuardError

MAX_TENSOR_POWER = 8
MAX_RANK_PLUS_ONE = 6


@dataclass(frozen=True)
class DynkinLabel:
    """Irreducible su(N) representation identifier."""

    entries: tuple
    rank_plus_one: int

    def __post_init__(self):
        n = self.rank_plus_one
        if n < 2:
            raise DomainError(f"need N >= 2, got {n}")
        if len(self.entries) != n - 1:
            raise DomainError(f"label length {len(self.entries)} != N-1 = {n - 1}")
        if any(e < 0 for e in self.entries):
            raise DomainError(f"negative Dynkin entry in {self.entries}")
        object.__setattr__(self, "entries", tuple(int(e) for e in self.entries))

    @property
    def is_trivial(self) -> bool:
        return all(e == 0 for e in self.entries)

    def conjugate(self) -> "DynkinLabel":
        return DynkinLabel(self.entries[::-1], self.rank_plus_one)

    def row_lengths(self) -> tuple:
        """Reduced Young-diagram rows: row_j = sum of l_i for i >= j."""
        n = self.rank_plus_one
        rows = []
        total = 0
        for j in range(n - 2, -1, -1):
            total += self.entries[j]
            rows.append(total)
        return tuple(reversed(rows))

    def box_count(self) -> int:
        return sum(self.row_lengths())


def trivial(n: int) -> DynkinLabel:
    return DynkinLabel((0,) * (n - 1), n)


def fundamental(n: int) -> DynkinLabel:
    return DynkinLabel((1,) + (0,) * (n - 2), n)


def adjoint(n: int) -> DynkinLabel:
    if n == 2:
        return DynkinLabel((2,), 2)
    return DynkinLabel((1,) + (0,) * (n - 3) + (1,), n)


@dataclass(frozen=True)
class YoungDiagram:
    """Reduced diagram: non-increasing rows, at most N-1 of them."""

    row_lengths: tuple
    rank_plus_one: int

    def __post_init__(self):
        rows = tuple(int(r) for r in self.row_lengths if r > 0)
        if any(rows[i] < rows[i + 1] for i in range(len(rows) - 1)):
            raise DomainError(f"rows not non-increasing: {self.row_lengths}")
        if len(rows) > self.rank_plus_one - 1:
            raise DomainError("diagram has too many rows for reduced form")
        object.__setattr__(self, "row_lengths", rows)

    def to_label(self) -> DynkinLabel:
        n = self.rank_plus_one
        padded = list(self.row_lengths) + [0] * (n - 1 - len(self.row_lengths))
        entries = [padded[j] - (padded[j + 1] if j + 1 < n - 1 else 0) for j in range(n - 1)]
        return DynkinLabel(tuple(entries), n)

    def box_count(self) -> int:
        return sum(self.row_lengths)


class IrrepMultiset:
    """Multiset of irreps with positive integer multiplicities."""

    def __init__(self, entries=None):
        self.entries: dict = {}
        if entries:
            for label, mult in dict(entries).items():
                self.add(label, mult)

    def add(self, label: DynkinLabel, mult: int = 1):
        if mult <= 0:
            raise DomainError("multiplicities must be positive")
        self.entries[label] = self.entries.get(label, 0) + mult

    def subtract(self, label: DynkinLabel, mult: int = 1):
        have = self.entries.get(label, 0)
        if have < mult:
            raise DecompositionError(
                f"cannot remove {mult} copies of {label.entries}: only {have} present"
            )
        if have == mult:
            del self.entries[label]
        else:
            self.entries[label] = have - mult

    def total_dimension(self) -> int:
        return sum(m * weyl_dimension(lab) for lab, m in self.entries.items())

    def conjugate(self) -> "IrrepMultiset":
        return IrrepMultiset({lab.conjugate(): m for lab, m in self.entries.items()})

    def items(self):
        return self.entries.items()

    def __eq__(self, other):
        return isinstance(other, IrrepMultiset) and self.entries == other.entries

    def __repr__(self):
        inner = ", ".join(f"{lab.entries}:{m}" for lab, m in sorted(
            self.entries.items(), key=lambda kv: kv[0].entries))
        return f"IrrepMultiset({{{inner}}})"


def inverse_cartan(n: int):
    """Inverse Cartan matrix of su(N) as exact Fractions.

    ``Ainv[i][j] = i (N - j) / N`` for i <= j (1-based), symmetric.
    """
    if n < 2:
        raise DomainError(f"invalid rank: need N >= 2, got {n}")
    size = n - 1
    return [
        [
            Fraction(min(i, j) * (n - max(i, j)), n)
            for j in range(1, size + 1)
        ]
        for i in range(1, size + 1)
    ]


def casimir_eigenvalue(label: DynkinLabel) -> Fraction:
    """Quadratic Casimir eigenvalue, exact, adjoint-normalized to 1."""
    n = label.rank_plus_one
    ainv = inverse_cartan(n)
    lam = label.entries
    total = Fraction(0)
    for j in range(n - 1):
        if lam[j] == 0:
            continue
        for i in range(n - 1):
            total += (lam[i] + 2) * ainv[i][j] * lam[j]
    return total / (2 * n)


def weyl_dimension(label: DynkinLabel) -> int:
    """Dimension of the irrep, from products over positive roots."""
    n = label.rank_plus_one
    lam = label.entries
    num = 1
    den = 1
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            num *= sum(lam[i - 1:j - 1]) + (j - i)
            den *= j - i
    dim, rem = divmod(num, den)
    if rem:
        raise DecompositionError(f"non-integer dimension for {lam}")
    return dim


def _add_one_box(rows: tuple, n: int):
    """All reduced diagrams reachable by adding a single box."""
    padded = list(rows) + [0] * (n - len(rows))
    results = []
    for j in range(n):
        if j > 0 and padded[j] + 1 > padded[j - 1]:
            continue
        new = padded.copy()
        new[j] += 1
        if new[n - 1] > 0:
            new = [r - new[n - 1] for r in new]
        results.append(YoungDiagram(tuple(new), n))
    return results


def tensor_with_fundamental(label: DynkinLabel) -> IrrepMultiset:
    """Decompose label (x) fundamental by single-box addition."""
    n = label.rank_plus_one
    out = IrrepMultiset()
    for diag in _add_one_box(label.row_lengths(), n):
        out.add(diag.to_label())
    expected = weyl_dimension(label) * n
    if out.total_dimension() != expected:
        raise DecompositionError(
            f"fundamental tensor product dimension mismatch for {label.entries}")
    return out


def tensor_with_antifundamental(label: DynkinLabel) -> IrrepMultiset:
    """label (x) conjugate-fundamental, via conjugation symmetry."""
    return tensor_with_fundamental(label.conjugate()).conjugate()


def tensor_with_adjoint(label: DynkinLabel) -> IrrepMultiset:
    """Decompose label (x) adjoint.

    Computed as label (x) fundamental (x) antifundamental minus one copy of
    label itself, since fundamental (x) antifundamental splits into the
    trivial plus the adjoint.  A failed subtraction aborts: it would mean the
    box-addition rules are broken.
    """
    n = label.rank_plus_one
    out = IrrepMultiset()
    for lab1, m1 in tensor_with_fundamental(label).items():
        for lab2, m2 in tensor_with_antifundamental(lab1).items():
            out.add(lab2, m1 * m2)
    out.subtract(label, 1)
    expected = weyl_dimension(label) * (n * n - 1)
    if out.total_dimension() != expected:
        raise DecompositionError(
            f"adjoint tensor product dimension mismatch for {label.entries}")
    return out


def decompose_pi_kk(k: int, n: int) -> IrrepMultiset:
    """Decomposition of (trivial + adjoint)^(tensor k) for su(N).

    This is the irreducible content of the k-fold mixed tensor representation
    U -> U^(x)k (x) conj(U)^(x)k after using fundamental (x) antifundamental
    = trivial + adjoint slotwise.
    """
    if k < 1:
        raise DomainError("k must be >= 1")
    if n < 2:
        raise DomainError("N must be >= 2")
    if k > MAX_TENSOR_POWER or n > MAX_RANK_PLUS_ONE:
        raise GuardError(
            f"decompose_pi_kk guard: k <= {MAX_TENSOR_POWER} and N <= {MAX_RANK_PLUS_ONE}")
    current = IrrepMultiset({trivial(n): 1})
    for _ in range(k):
        nxt = IrrepMultiset()
        for lab, m in current.items():
            nxt.add(lab, m)
            for lab2, m2 in tensor_with_adjoint(lab).items():
                nxt.add(lab2, m * m2)
        current = nxt
    if current.total_dimension() != n ** (2 * k):
        raise DecompositionError("mixed tensor decomposition dimension mismatch")
    return current


@dataclass
class SpectrumReport:
    n: int
    k: int
    eigenvalues: dict          # Fraction c2 -> total multiplicity m * dim
    gap: Fraction
    divisibility_ok: bool
    decomposition: IrrepMultiset


def casimir_spectrum_report(k: int, n: int) -> SpectrumReport:
    """Casimir spectrum of the k-fold mixed tensor representation.

    The gap is the smallest positive eigenvalue; ``divisibility_ok`` records
    whether every occurring diagram has a box count divisible by N.
    """
    deco = decompose_pi_kk(k, n)
    eigs: dict = {}
    divisible = True
    for lab, m in deco.items():
        c2 = casimir_eigenvalue(lab)
        eigs[c2] = eigs.get(c2, 0) + m * weyl_dimension(lab)
        if lab.box_count() % n != 0:
            divisible = False
    positive = [c for c in eigs if c > 0]
    gap = min(positive) if positive else Fraction(0)
    return SpectrumReport(n=n, k=k, eigenvalues=eigs, gap=gap,
                          divisibility_ok=divisible, decomposition=deco)


def spectrum_report_to_json(report: SpectrumReport) -> str:
    """Serialize a spectrum report; rationals become "p/q" strings."""
    irreps = []
    for lab, m in sorted(report.decomposition.items(), key=lambda kv: kv[0].entries):
        irreps.append({
            "dynkin": list(lab.entries),
            "mult": m,
            "dim": weyl_dimension(lab),
            "c2": _frac_str(casimir_eigenvalue(lab)),
        })
    payload = {
        "N": report.n,
        "k": report.k,
        "irreps": irreps,
        "gap": _frac_str(report.gap),
        "divisibility_ok": report.divisibility_ok,
    }
    return json.dumps(payload)


def _frac_str(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"
