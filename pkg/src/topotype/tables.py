"""Exact polynomial reconstruction of the type-count tables.

Counts T(p) for a fixed rank-2 partition are polynomial in p on residue
classes of p (the Burnside correction depends on gcd with p-1).  This module
samples the counting formulas at primes, interpolates exactly per class,
and verifies every interpolant on held-out primes.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .counting import count_types_rank2
from .exact import RationalPolynomial, interpolate, is_prime
from .partitions import PartitionType, _partitions_into


class PolynomialFitError(ValueError):
    """Fit could not be performed or failed verification."""


@dataclass(frozen=True)
class StratifiedPolynomial:
    """One exact polynomial per residue class of p mod ``modulus``."""

    partition: PartitionType
    modulus: int
    branches: dict  # residue class -> RationalPolynomial

    def branch_for(self, p: int) -> RationalPolynomial:
        return self.branches[p % self.modulus]

    def __call__(self, p: int) -> Fraction:
        return self.branch_for(p)(p)


def default_degree_bound(partition: PartitionType) -> int:
    """Degree of T(p): deg|A| = R-2, marking adds n-3 (when n > 3), the
    scalar average removes 1."""
    return partition.R - 3 + max(0, partition.n - 3)


def default_modulus(partition: PartitionType) -> int:
    """Residue classes fine enough for any Burnside branch: the correction
    is governed by divisors of gcd(parts, p-1), so stratify p modulo
    2 * lcm(1..max part)."""
    return 2 * math.lcm(*range(1, max(partition.parts) + 1))


def _unit_classes(modulus: int) -> list:
    if modulus == 1:
        return [0]
    return [c for c in range(modulus) if math.gcd(c, modulus) == 1]


def _primes_in_class(c: int, modulus: int, count: int, minimum: int = 5, floor: int = 0):
    """First ``count`` primes > max(3, floor-1) congruent to c mod modulus."""
    out = []
    q = max(minimum, floor)
    while len(out) < count:
        if is_prime(q) and q > 3 and (modulus == 1 or q % modulus == c):
            out.append(q)
        q += 1
    return out


def fit_partition_polynomial(partition, degree_bound=None, modulus=None, primes=None) -> StratifiedPolynomial:
    """Fit T(p) for one rank-2 partition as exact polynomials per residue class.

    Uses degree_bound+1 sample primes per class for the interpolation and
    verifies the result on every remaining prime of that class (at least one
    held-out prime is always present).  When ``primes`` is None a sufficient
    pool is generated automatically; an explicit but insufficient list
    raises an error naming the class.
    """
    part = partition if isinstance(partition, PartitionType) else PartitionType(tuple(partition))
    db = default_degree_bound(part) if degree_bound is None else int(degree_bound)
    mod = default_modulus(part) if modulus is None else int(modulus)
    classes = _unit_classes(mod)
    need = db + 2  # fit points + at least one held-out
    by_class: dict = {}
    if primes is None:
        for c in classes:
            by_class[c] = _primes_in_class(c, mod, need, floor=part.n - 1)
    else:
        primes = sorted(set(int(q) for q in primes))
        for q in primes:
            if not is_prime(q):
                raise PolynomialFitError(f"{q} is not prime")
            if q <= 3:
                raise PolynomialFitError(f"sample primes must exceed 3 (got {q})")
            by_class.setdefault(q % mod, []).append(q)
        for c, qs in by_class.items():
            if len(qs) < need:
                raise PolynomialFitError(
                    f"class {c} mod {mod}: {len(qs)} primes supplied, need "
                    f"{need} (degree bound {db} plus a held-out prime)"
                )
    branches = {}
    for c, qs in sorted(by_class.items()):
        points = [(q, count_types_rank2(part, q).T) for q in qs]
        fit_pts, holdout = points[: db + 1], points[db + 1 :]
        poly = interpolate(fit_pts)
        for q, value in holdout:
            if poly(q) != value:
                raise PolynomialFitError(
                    f"{part} not polynomial at modulus {mod}, degree {db}: "
                    f"class {c} held-out prime {q} gives {value}, "
                    f"interpolant gives {poly(q)}"
                )
        branches[c] = poly
    return StratifiedPolynomial(part, mod, branches)


def table_rows(R: int) -> list:
    """Rank-2 partition rows of the R-section of the table (admissibility
    for all sufficiently large p: 2 <= n, parts >= 2 when n = 2, max part
    <= R - 2), in (part count, ascending lex) order."""
    if R < 3:
        raise ValueError("need R >= 3")
    out = []
    for n in range(2, R + 1):
        for parts in _partitions_into(R, n, R - 2):
            if n == 2 and parts[-1] < 2:
                continue
            out.append(PartitionType(parts))
    return out


@dataclass(frozen=True)
class TableRow:
    partition: PartitionType
    fit: StratifiedPolynomial
    samples: tuple  # ((p, T), ...)


def build_table(R: int, primes=None) -> list:
    """Fit every row of the R-section.  ``primes`` controls which sample
    values are displayed; the fit pool is extended automatically whenever
    the supplied primes cannot pin down a row's polynomial."""
    rows = []
    for part in table_rows(R):
        usable = None
        if primes is not None:
            usable = [q for q in primes if q >= part.n - 1]
        try:
            fit = fit_partition_polynomial(part, primes=usable)
        except PolynomialFitError:
            if usable is None:
                raise
            fit = fit_partition_polynomial(part)  # auto pool
        if usable:
            sample_ps = sorted(usable)
        else:
            sample_ps = _primes_in_class(0, 1, 4, floor=part.n - 1)
        samples = tuple((q, count_types_rank2(part, q).T) for q in sample_ps)
        rows.append(TableRow(part, fit, samples))
    return rows


def _branch_display(fit: StratifiedPolynomial) -> str:
    """Human form of a fit: collapse identical branches."""
    groups: dict = {}
    for c, poly in sorted(fit.branches.items()):
        groups.setdefault(poly.coeffs, []).append(c)
    if len(groups) == 1:
        (poly_coeffs,) = groups
        return RationalPolynomial(poly_coeffs).pretty()
    pieces = []
    for coeffs, cs in groups.items():
        cls = ",".join(str(c) for c in cs)
        pieces.append(f"[p%{fit.modulus} in {cls}] {RationalPolynomial(coeffs).pretty()}")
    return "; ".join(pieces)


def render_table(R: int, primes=None, fmt: str = "plain") -> str:
    """Render the R-section with fitted polynomials and raw sample counts."""
    rows = build_table(R, primes)
    if fmt == "plain":
        lines = [f"R = {R}"]
        for row in rows:
            samples = "  ".join(f"T({q})={t}" for q, t in row.samples)
            lines.append(f"  {str(row.partition):<18} {_branch_display(row.fit)}    {samples}")
        return "\n".join(lines) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["partition", "modulus", "class", "coefficients", "samples"])
        for row in rows:
            for c, poly in sorted(row.fit.branches.items()):
                writer.writerow([
                    str(row.partition),
                    row.fit.modulus,
                    c,
                    " ".join(str(x) for x in poly.coeffs),
                    " ".join(f"{q}:{t}" for q, t in row.samples),
                ])
        return buf.getvalue()
    if fmt == "json":
        records = []
        for row in rows:
            for c, poly in sorted(row.fit.branches.items()):
                records.append({
                    "partition": [str(x) for x in row.partition.parts],
                    "modulus": str(row.fit.modulus),
                    "class": str(c),
                    "coefficients": [str(x) for x in poly.coeffs],
                    "samples": [[str(q), str(t)] for q, t in row.samples],
                })
        return json.dumps({"R": str(R), "rows": records}, sort_keys=True,
                          separators=(",", ":")) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
