"""Closed-form recursions for P^3 and the structural checks built on them.

Two families of complex counts in P^3 drive everything: N_d, rational curves
of degree d through 2d generic points, and Ntilde_d, those through 2 generic
lines and 2d - 1 generic points.  They satisfy the coupled recursions (sums
over d1 + d2 = d with d1, d2 >= 1; C(n, k) = 0 out of range):

  N_d      = sum [ d2^2 * C(2d-3, 2*d1-2) - d1*d2 * C(2d-3, 2*d1-1) ]
                 * Ntilde_{d1} * N_{d2}
  Ntilde_d = d * N_d
           + sum [ d1*d2^2 * C(2d-2, 2*d1-1) - d2^3 * C(2d-2, 2*d1-2) ]
                 * Ntilde_{d1} * N_{d2}

seeded by N_1 = 1 and the d = 1 instance of the second line, Ntilde_1 = 1.
The signed real count of degree-d curves through d point-pairs in P^3 then
follows from the degree-halving recursion (sum over 2*d1 + d2 = d):

  N^R_d = sum (-4)^(d1 - 1) * d2 * C(d-2, d2-1) * Ntilde_{d1} * N^R_{d2}

seeded by N^R_1 = 1.  These closed forms are the independent oracle against
which the general recursion engines are checked, and they extend cheaply to
d = 31 and beyond.

The module also hosts two structural reports: the mod-4 congruences of all
three families, and the odd-and-nonzero parity property of real invariants
of P^3 and P^5, evaluated through the general real engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .keys import CodimVector, RealKey, binomial
from .real_engine import RealEvalContext, eval_real
from .reports import CheckReport

__all__ = [
    "P3Series",
    "complex_series_p3",
    "congruence_mod4_report",
    "parity_report",
    "real_codim_vectors",
    "real_series_p3",
]


def complex_series_p3(dmax: int) -> tuple[list[int], list[int]]:
    """(N_d, Ntilde_d) for d = 1..dmax as 0-padded lists indexed by degree."""
    if dmax < 1:
        raise ValueError("dmax must be >= 1")
    n = [0] * (dmax + 1)
    nt = [0] * (dmax + 1)
    n[1] = 1
    nt[1] = 1
    for d in range(2, dmax + 1):
        acc = 0
        for d1 in range(1, d):
            d2 = d - d1
            coeff = d2 * d2 * binomial(2 * d - 3, 2 * d1 - 2)
            coeff -= d1 * d2 * binomial(2 * d - 3, 2 * d1 - 1)
            acc += coeff * nt[d1] * n[d2]
        n[d] = acc
        acc = d * n[d]
        for d1 in range(1, d):
            d2 = d - d1
            coeff = d1 * d2 * d2 * binomial(2 * d - 2, 2 * d1 - 1)
            coeff -= d2 * d2 * d2 * binomial(2 * d - 2, 2 * d1 - 2)
            acc += coeff * nt[d1] * n[d2]
        nt[d] = acc
    return n, nt


def real_series_p3(dmax: int) -> list[int]:
    """N^R_d for d = 1..dmax (0 at even d) as a 0-padded list indexed by degree."""
    if dmax < 1:
        raise ValueError("dmax must be >= 1")
    _, nt = complex_series_p3(max(1, dmax // 2))
    nr = [0] * (dmax + 1)
    nr[1] = 1
    for d in range(3, dmax + 1, 2):
        acc = 0
        for d1 in range(1, (d - 1) // 2 + 1):
            d2 = d - 2 * d1
            coeff = (-4) ** (d1 - 1) * d2 * binomial(d - 2, d2 - 1)
            acc += coeff * nt[d1] * nr[d2]
        nr[d] = acc
    return nr


@dataclass(frozen=True)
class P3Series:
    """All three P^3 families up to a fixed degree, computed in one pass."""

    dmax: int
    n_complex: tuple[int, ...]
    ntilde_complex: tuple[int, ...]
    n_real: tuple[int, ...]

    @staticmethod
    def build(dmax: int) -> "P3Series":
        n, nt = complex_series_p3(dmax)
        nr = real_series_p3(dmax)
        return P3Series(dmax, tuple(n), tuple(nt), tuple(nr))


def congruence_mod4_report(dmax: int = 31) -> CheckReport:
    """Mod-4 congruences of the three P^3 families up to degree dmax.

    N^R_d and N_d are congruent to 1 at odd d and to 0 at even d; Ntilde_d is
    congruent to 1 at odd d, with the even values 1 (d = 2), 2 (d = 4) and 0
    (even d >= 6).
    """
    report = CheckReport(f"mod4 congruences, d <= {dmax}")
    n, nt = complex_series_p3(dmax)
    nr = real_series_p3(dmax)
    for d in range(1, dmax + 1):
        want = 1 if d % 2 else 0
        report.check_equal(f"N^C_{d} mod 4", want, n[d] % 4)
        if d % 2:
            want_nt = 1
        elif d == 2:
            want_nt = 1
        elif d == 4:
            want_nt = 2
        else:
            want_nt = 0
        report.check_equal(f"Ntilde^C_{d} mod 4", want_nt, nt[d] % 4)
        report.check_equal(f"N^R_{d} mod 4", want, nr[d] % 4)
        if d % 2 == 0:
            report.check_equal(f"N^R_{d}", 0, nr[d])
    return report


def _base_vectors(n: int, target: int) -> Iterator[list[int]]:
    """Multisets of odd entries in [3, 2n-1] with sum of (entry - 1) = target."""

    def rec(value: int, remaining: int, acc: list[int]) -> Iterator[list[int]]:
        if remaining == 0:
            yield list(acc)
            return
        if value < 3:
            return
        weight = value - 1
        for count in range(remaining // weight, -1, -1):
            acc.extend([value] * count)
            yield from rec(value - 2, remaining - count * weight, acc)
            del acc[len(acc) - count:]

    yield from rec(2 * n - 1, target, [])


def real_codim_vectors(n: int, d: int, max_ones: int = 0) -> Iterator[CodimVector]:
    """All dimension-balanced odd codimension vectors for (n, d).

    Entries lie in {3, 5, ..., 2n-1}; with ``max_ones`` > 0, each vector is
    also emitted with up to that many divisor entries appended (appending a 1
    preserves the dimension balance, so the full family is infinite and the
    divisor relation reduces every padded vector to its base).
    """
    target = n * (d + 1) - 2
    for base in _base_vectors(n, target):
        cv = CodimVector.from_entries(base)
        yield cv
        for ones in range(1, max_ones + 1):
            yield cv.add(1, times=ones)


def parity_report(
    n: int,
    d_list: tuple[int, ...] | list[int],
    ctx: RealEvalContext | None = None,
    max_ones: int = 2,
) -> CheckReport:
    """Check that every dimension-balanced real invariant is odd (hence nonzero).

    Exhaustive over the base vectors (entries >= 3) for each odd degree in
    ``d_list``, plus divisor-padded variants with up to ``max_ones`` entries
    equal to 1; padding by further 1s only multiplies values by the odd
    degree d, which preserves oddness.
    """
    if ctx is None:
        ctx = RealEvalContext()
    report = CheckReport(f"parity, n={n}")
    for d in d_list:
        if d % 2 == 0:
            raise ValueError("parity checks apply to odd degrees only")
        for cv in real_codim_vectors(n, d, max_ones=max_ones):
            value = eval_real(RealKey(n=n, d=d, insertions=cv), ctx)
            report.add(
                f"n={n} d={d} <{cv}>",
                value % 2 == 1,
                "odd nonzero",
                value,
            )
    return report
