"""Type-counting formulas for fully ramified Z_p^k actions.

|A| counts block matrices for one fixed marking (one block of zero-first-
column rows per part, all row sums zero mod p).  The final count T applies
a Burnside average over the scalar group F_p^* (with correction terms for
scalars of each order d' > 1 dividing every part) and the marking
multiplier binomial(p-2, n-3).

Rank 1 uses the same machinery on a single-rowed multiset; p = 2 rank 2
reduces to a parity rule on the partition (three parts of equal parity or
two even parts admit exactly one type, anything else none).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .exact import divisors_greater_than_one, euler_phi, exact_div, is_prime, multichoose
from .partitions import PartitionType, admissible_partitions, marking_count
from .residues import block_wz, part_wz


@dataclass(frozen=True)
class CountReport:
    """Full audit trail of one type count.

    T = marking_multiplier * (card_A + sum of Burnside contributions)/(p-1).
    """

    partition: PartitionType
    p: int
    card_A: int
    burnside_terms: tuple  # ((d', contribution), ...)
    marking_multiplier: int
    T: int


@dataclass(frozen=True)
class TotalReport:
    """Per-partition breakdown plus total for fixed (p, k, R)."""

    p: int
    k: int
    R: int
    reports: tuple
    total: int


def _as_parts(partition) -> tuple:
    if isinstance(partition, PartitionType):
        return partition.parts
    return tuple(int(x) for x in partition)


def card_A_base2(P1: int, P2: int, p: int) -> int:
    """Two-part base case: both block sums must vanish independently."""
    return part_wz(P1, p).W * part_wz(P2, p).W


def card_A_base3(P1: int, P2: int, P3: int, p: int) -> int:
    """Three-part base case: W1 W2 W3 + (p-1) Z1 Z2 Z3 (the three block sums
    are zero, or hit a common nonzero class pattern once per unit)."""
    w1, w2, w3 = part_wz(P1, p), part_wz(P2, p), part_wz(P3, p)
    return w1.W * w2.W * w3.W + (p - 1) * w1.Z * w2.Z * w3.Z


def card_A(partition, p: int) -> int:
    """|A| for any number of parts, by the pairwise recursion.

    Accepts a PartitionType (canonical descending order) or any explicit
    part sequence — the result is independent of the order, which the test
    suite verifies exhaustively for small R.

    The recursion consumes two parts per step: with r the count for the
    suffix processed so far, (W', Z') the block value of that suffix, and
    s01 = W' - r, s11 = (p-1)Z' - W' + r, the next value is
    [W_a Z_a] [[r, s01], [s01, s11]] [W_b Z_b]^T.
    """
    parts = _as_parts(partition)
    n = len(parts)
    if n < 2:
        raise ValueError("need at least two parts")
    if n > p + 1:
        raise ValueError(f"{n} parts but only {p + 1} cyclic subgroups (p={p})")
    if n == 2:
        return card_A_base2(parts[0], parts[1], p)
    if n == 3:
        return card_A_base3(parts[0], parts[1], parts[2], p)
    if n % 2 == 0:
        r = card_A_base2(parts[-2], parts[-1], p)
        i = n - 4
    else:
        r = card_A_base3(parts[-3], parts[-2], parts[-1], p)
        i = n - 5
    while i >= 0:
        suffix = parts[i + 2 :]
        blk = block_wz(suffix, p)
        s01 = blk.W - r
        s11 = (p - 1) * blk.Z - blk.W + r
        if s01 < 0 or s11 < 0:
            raise ArithmeticError("negative recursion state; invariant broken")
        wa, wb = part_wz(parts[i], p), part_wz(parts[i + 1], p)
        r = wa.W * (r * wb.W + s01 * wb.Z) + wa.Z * (s01 * wb.W + s11 * wb.Z)
        i -= 2
    return r


def card_A_shortcut(partition, p: int) -> int:
    """Product shortcut: |A| = (prod b_{P_i}) / p^2, valid whenever at least
    two parts are not congruent to 0 or 1 mod p (two independently
    equidistributed blocks make both row constraints uniform)."""
    parts = _as_parts(partition)
    if sum(1 for P in parts if P % p not in (0, 1)) < 2:
        raise ValueError("shortcut needs two parts not congruent to 0, 1 mod p")
    B = 1
    for P in parts:
        B *= math.comb(P + p - 2, P)
    return exact_div(B, p * p)


def card_A_unitary(n: int, p: int) -> int:
    """|A| of the all-ones partition by the collapsed scalar recursion.

    Each step consumes two parts: r <- (p-1) Z' - W' + r, where (W', Z') is
    the block value of the 2u (even chain) or 2u+1 (odd chain) ones consumed
    so far, with closed forms Z' = ((p-1)^{2u} - 1)/p and
    Z'' = ((p-1)^{2u+1} + 1)/p.
    """
    if n < 2:
        raise ValueError("need at least two parts")
    if n > p + 1:
        raise ValueError(f"{n} parts but only {p + 1} cyclic subgroups (p={p})")
    if n == 2:
        return 0
    if n == 3:
        return p - 1
    if n % 2 == 0:
        r = 0
        for u in range(1, n // 2):
            z = exact_div((p - 1) ** (2 * u) - 1, p)
            w = z + 1
            r = (p - 1) * z - w + r
    else:
        r = p - 1
        for u in range(1, (n - 3) // 2 + 1):
            z = exact_div((p - 1) ** (2 * u + 1) + 1, p)
            w = z - 1
            r = (p - 1) * z - w + r
    return r


def _burnside_terms(parts, p: int) -> tuple:
    """Correction terms of the scalar Burnside average: for each d' > 1
    dividing every part and p-1, the scalars of order d' fix
    prod_i multichoose(P_i/d', (p-1)/d') matrices, phi(d') of them."""
    d = math.gcd(p - 1, *parts)
    terms = []
    for dp_ in divisors_greater_than_one(d):
        fixed = 1
        for P in parts:
            fixed *= multichoose(P // dp_, (p - 1) // dp_)
        terms.append((dp_, euler_phi(dp_) * fixed))
    return tuple(terms)


def count_types_rank2(partition, p: int) -> CountReport:
    """Type count for a rank-2 action with the given partition, odd p.

    T = binomial(p-2, n-3) * (|A| + corrections) / (p-1): Burnside over the
    scalar group for one marking, times the number of markings.
    """
    if p < 3 or not is_prime(p):
        raise ValueError(f"p = {p}: need an odd prime")
    part = partition if isinstance(partition, PartitionType) else PartitionType(_as_parts(partition))
    a = card_A(part, p)
    terms = _burnside_terms(part.parts, p)
    marked_classes = exact_div(a + sum(c for _, c in terms), p - 1)
    mark = marking_count(p, part.n)
    return CountReport(part, p, a, terms, mark, mark * marked_classes)


def count_types_rank1(R: int, p: int) -> CountReport:
    """Type count for rank 1: Burnside over F_p^* on single-rowed multisets.

    For p = 2 there is one action for even R and none for odd R.
    """
    if R < 3:
        raise ValueError("need R >= 3")
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    part = PartitionType((R,))
    if p == 2:
        t = 1 if R % 2 == 0 else 0
        return CountReport(part, p, t, (), 1, t)
    w = part_wz(R, p).W
    terms = _burnside_terms((R,), p)
    t = exact_div(w + sum(c for _, c in terms), p - 1)
    return CountReport(part, p, w, terms, 1, t)


def klein_type_count(partition) -> int:
    """Number of types (0 or 1) of a Klein 4-group partition: one iff three
    parts of equal parity or two even parts."""
    parts = _as_parts(partition)
    if len(parts) == 3:
        return 1 if len({P % 2 for P in parts}) == 1 else 0
    if len(parts) == 2:
        return 1 if all(P % 2 == 0 for P in parts) else 0
    return 0


def count_types_klein(R: int) -> int:
    """Total Klein 4-group (p=2, rank 2) types with R branch points:
    partitions of R into three parts of equal parity plus partitions into
    two even parts."""
    if R < 3:
        raise ValueError("need R >= 3")
    three = 0
    for a in range(1, R // 3 + 1):  # smallest part
        for b in range(a, (R - a) // 2 + 1):  # middle part; largest is forced
            c = R - a - b
            if a % 2 == b % 2 == c % 2:
                three += 1
    two = sum(1 for a in range(2, R // 2 + 1, 2) if (R - a) % 2 == 0)
    return three + two


def total_types(p: int, k: int, R: int) -> TotalReport:
    """Sum of type counts over all admissible partitions of (p, k, R)."""
    if k == 1:
        reports = (count_types_rank1(R, p),)
    elif p == 2:
        reports = tuple(
            CountReport(part, 2, klein_type_count(part), (), 1, klein_type_count(part))
            for part in admissible_partitions(2, 2, R)
        )
    else:
        reports = tuple(
            count_types_rank2(part, p) for part in admissible_partitions(p, 2, R)
        )
    return TotalReport(p, k, R, reports, sum(r.T for r in reports))
