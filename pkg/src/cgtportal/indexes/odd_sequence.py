"""Closed forms for the Wiener index of odd graphs, checked against OEIS A136328.

Two independent exact computations are provided, ported from the Maple
programs published in the OEIS entry:

* :func:`odd_wiener_deutsch` evaluates the derivative at t = 1 of the
  Hosoya-Wiener polynomial built from the intersection arrays of the
  distance-regular odd graph (E. Deutsch's program).
* :func:`odd_wiener_mathar` evaluates a direct binomial summation
  (R. J. Mathar's program).

Both keep every intermediate value as an exact rational and return exact
integers; term 17 already exceeds the 63-bit range.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from cgtportal.errors import InvalidParameterError
from cgtportal.graphs.families import odd_graph
from cgtportal.indexes.wiener import wiener

# Wiener indexes of the odd graphs O_1..O_17 (OEIS A136328, offset 1).
ODD_WIENER_REFERENCE: tuple[int, ...] = (
    0,
    3,
    75,
    1435,
    25515,
    436821,
    7339332,
    121782375,
    2005392675,
    32835436777,
    535550923908,
    8707954925033,
    141270179732500,
    2287544190032700,
    36988236910737360,
    597341791692978975,
    9637351741503033075,
)

# Brute force stays feasible up to O_6 (462 vertices); beyond that the
# verification report records an explicit skip.
BRUTE_FORCE_MAX_N = 6


def odd_wiener_deutsch(n: int) -> int:
    """Wiener index of O_n via the intersection-array route.

    With B[m] = n - floor(m/2) and C[m] = ceil(m/2) for m = 1..n-1, the
    Hosoya-Wiener polynomial of O_n is
    H(t) = (1/2) C(2n-1, n-1) * sum_j (prod_{r<=j} B[r]/C[r]) t^j,
    and the Wiener index is dH/dt at t = 1.
    """
    if n < 2:
        raise InvalidParameterError(f"odd_wiener_deutsch requires n >= 2, got {n}")
    b = [Fraction(n - m // 2) for m in range(1, n)]
    c = [Fraction((m + 1) // 2) for m in range(1, n)]
    total = Fraction(0)
    prod = Fraction(1)
    for j in range(1, n):
        prod *= b[j - 1] / c[j - 1]
        total += j * prod
    result = Fraction(comb(2 * n - 1, n - 1), 2) * total
    assert result.denominator == 1
    return result.numerator


def odd_wiener_mathar(n: int) -> int:
    """Wiener index of O_n via the direct binomial summation.

    D(k) = k * [ sum over integers j <= k/2 - 1 of (2j+1) C(k-1,j)^2 / (1+j)
               + 2 * sum for j = floor(k/2)..k-2 of (k-1-j) C(k-1,j)^2 / (1+j) ]
    and the index is C(2n-1, n-1) * D(n) / 2. a(1) = 0.
    """
    if n < 1:
        raise InvalidParameterError(f"odd_wiener_mathar requires n >= 1, got {n}")
    k = n
    first = Fraction(0)
    j = 0
    while 2 * j <= k - 2:  # j ranges over integers <= k/2 - 1
        first += Fraction((2 * j + 1) * comb(k - 1, j) ** 2, 1 + j)
        j += 1
    second = Fraction(0)
    for j in range(k // 2, k - 1):
        second += Fraction((k - 1 - j) * comb(k - 1, j) ** 2, 1 + j)
    d = k * (first + 2 * second)
    result = Fraction(comb(2 * n - 1, n - 1), 2) * d
    assert result.denominator == 1
    return result.numerator


@dataclass(frozen=True)
class SequenceCheck:
    """Per-n verification row: which methods ran and whether they agree."""

    n: int
    reference: int
    deutsch: int | None
    mathar: int | None
    brute_force: int | None
    skipped: tuple[str, ...]
    ok: bool


@dataclass(frozen=True)
class VerificationReport:
    max_n: int
    checks: tuple[SequenceCheck, ...]
    elapsed_seconds: float
    all_ok: bool = field(default=True)

    def render(self) -> str:
        """Aligned "n value status" rows for CLI output."""
        lines = [f"{'n':>3} {'reference':>22} {'status':<6} methods"]
        for c in self.checks:
            ran = []
            if c.deutsch is not None:
                ran.append("deutsch")
            if c.mathar is not None:
                ran.append("mathar")
            if c.brute_force is not None:
                ran.append("brute-force")
            notes = ", ".join(ran) if ran else "none"
            if c.skipped:
                notes += "; " + "; ".join(c.skipped)
            status = "pass" if c.ok else "FAIL"
            lines.append(f"{c.n:>3} {c.reference:>22} {status:<6} {notes}")
        lines.append(f"result: {'all pass' if self.all_ok else 'FAILURES'} ({self.elapsed_seconds:.3f} s)")
        return "\n".join(lines)


def verify_a136328(max_n: int, brute_max: int = BRUTE_FORCE_MAX_N) -> VerificationReport:
    """Check both closed forms (and brute force where feasible) against the references.

    For each n = 1..max_n the report row compares odd_wiener_deutsch (n >= 2),
    odd_wiener_mathar, and wiener(odd_graph(n)) for n <= brute_max against the
    embedded reference terms. Failures are report content, never exceptions.
    Pass ``brute_max=0`` to check the closed forms alone.
    """
    if not 1 <= max_n <= len(ODD_WIENER_REFERENCE):
        raise InvalidParameterError(
            f"max_n must be in 1..{len(ODD_WIENER_REFERENCE)}, got {max_n}"
        )
    start = time.perf_counter()
    checks = []
    all_ok = True
    for n in range(1, max_n + 1):
        reference = ODD_WIENER_REFERENCE[n - 1]
        skipped: list[str] = []
        deutsch = odd_wiener_deutsch(n) if n >= 2 else None
        if deutsch is None:
            skipped.append("deutsch skipped: defined for n >= 2")
        mathar = odd_wiener_mathar(n)
        brute = None
        if n < 2:
            skipped.append("brute-force skipped: odd graph defined for n >= 2")
        elif n <= min(brute_max, BRUTE_FORCE_MAX_N):
            brute = int(wiener(odd_graph(n)))
        else:
            skipped.append("brute-force skipped: size")
        ok = all(value == reference for value in (deutsch, mathar, brute) if value is not None)
        all_ok = all_ok and ok
        checks.append(
            SequenceCheck(
                n=n,
                reference=reference,
                deutsch=deutsch,
                mathar=mathar,
                brute_force=brute,
                skipped=tuple(skipped),
                ok=ok,
            )
        )
    elapsed = time.perf_counter() - start
    return VerificationReport(max_n=max_n, checks=tuple(checks), elapsed_seconds=elapsed, all_ok=all_ok)
