"""Brute-force ground truth by exhaustive enumeration.

Everything here counts by listing actual objects: generating column
multisets over F_p^k with their orbits under the full automorphism group
GL_k(F_p), and literal matrix enumerations for the weighted-sum
distributions.  Nothing is shared with the formula modules beyond basic
binomials, so agreement between the two routes is meaningful evidence.
"""

from __future__ import annotations

import itertools
import os
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .exact import multichoose
from .partitions import PartitionType

DEFAULT_MULTISET_LIMIT = 10**7
DEFAULT_STEP_LIMIT = 10**10

ENV_STEP_LIMIT = "TOPOTYPE_GUARD_STEPS"


class GuardExceeded(RuntimeError):
    """Enumeration refused: the estimated work exceeds the feasibility guard."""


def _step_limit(step_limit):
    if step_limit is not None:
        return int(step_limit)
    env = os.environ.get(ENV_STEP_LIMIT)
    if env:
        return int(env)
    return DEFAULT_STEP_LIMIT


def group_order(p: int, k: int) -> int:
    """|GL_k(F_p)|."""
    order = 1
    for i in range(k):
        order *= p**k - p**i
    return order


def check_feasible(p: int, k: int, R: int, multiset_limit=None, step_limit=None) -> None:
    """Raise GuardExceeded when the enumeration estimate is out of budget."""
    multiset_limit = DEFAULT_MULTISET_LIMIT if multiset_limit is None else int(multiset_limit)
    step_limit = _step_limit(step_limit)
    m = multichoose(R, p**k - 1)
    if m > multiset_limit:
        raise GuardExceeded(
            f"(p={p}, k={k}, R={R}): about {m} column multisets exceeds the "
            f"limit of {multiset_limit}"
        )
    steps = m * group_order(p, k)
    if steps > step_limit:
        raise GuardExceeded(
            f"(p={p}, k={k}, R={R}): about {steps} canonicalization steps "
            f"exceeds the limit of {step_limit}"
        )


def nonzero_vectors(p: int, k: int) -> list:
    """All nonzero vectors of F_p^k, lexicographically sorted."""
    return [v for v in itertools.product(range(p), repeat=k) if any(v)]


def gl_matrices(p: int, k: int) -> list:
    """All invertible k x k matrices over F_p (k = 1 or 2)."""
    if k == 1:
        return [((a,),) for a in range(1, p)]
    if k == 2:
        out = []
        for a, b, c, d in itertools.product(range(p), repeat=4):
            if (a * d - b * c) % p:
                out.append(((a, b), (c, d)))
        return out
    raise ValueError("only ranks 1 and 2 are supported")


def _survivors(p: int, k: int, R: int):
    """Index form of every generating column multiset.

    Returns (vecs, array) where array rows are nondecreasing index tuples
    into vecs.  Enumeration: choose the first R-1 columns as a multiset,
    force the last column to the negated sum; keep it when the forced column
    is nonzero, does not sort below the chosen prefix (each multiset appears
    exactly once), and the full set has rank k.
    """
    vecs = nonzero_vectors(p, k)
    index = {v: i for i, v in enumerate(vecs)}
    rows = []
    for prefix in itertools.combinations_with_replacement(range(len(vecs)), R - 1):
        sums = [0] * k
        for i in prefix:
            v = vecs[i]
            for c in range(k):
                sums[c] += v[c]
        forced = tuple((-s) % p for s in sums)
        if not any(forced):
            continue
        fi = index[forced]
        if fi < prefix[-1]:
            continue
        cols = prefix + (fi,)
        if k == 2:
            if not _has_rank2(cols, vecs, p):
                continue
        rows.append(cols)
    arr = np.array(rows, dtype=np.int64) if rows else np.zeros((0, R), dtype=np.int64)
    return vecs, arr


def _has_rank2(cols, vecs, p) -> bool:
    v0 = vecs[cols[0]]
    for i in cols[1:]:
        v = vecs[i]
        if (v0[0] * v[1] - v0[1] * v[0]) % p:
            return True
    return False


def enumerate_generating_sets(p: int, k: int, R: int, multiset_limit=None, step_limit=None):
    """Yield every generating column multiset (zero row sums, rank k, no zero
    columns), each exactly once, columns sorted ascending."""
    check_feasible(p, k, R, multiset_limit, step_limit)
    vecs, arr = _survivors(p, k, R)
    for row in arr:
        yield tuple(vecs[i] for i in row)


def classify_partition(columns, p: int, k: int = 2) -> PartitionType:
    """Partition type of a column multiset: group columns by the cyclic
    subgroup they span (projective normalization: first nonzero coordinate
    scaled to 1) and take the multiset of group sizes."""
    buckets = Counter()
    for v in columns:
        pivot = next(c for c in v if c % p)
        inv = pow(pivot, p - 2, p)
        buckets[tuple((c * inv) % p for c in v)] += 1
    return PartitionType(tuple(sorted(buckets.values(), reverse=True)))


@dataclass(frozen=True)
class OrbitTable:
    """Orbit counts bucketed by partition type, plus canonical representatives."""

    p: int
    k: int
    R: int
    by_partition: dict
    total: int
    representatives: tuple

    def count(self, partition) -> int:
        part = partition if isinstance(partition, PartitionType) else PartitionType(tuple(partition))
        return self.by_partition.get(part, 0)


def count_orbits(p: int, k: int, R: int, multiset_limit=None, step_limit=None) -> OrbitTable:
    """Orbits of GL_k(F_p) acting columnwise on generating column multisets.

    Canonical representative of an orbit: the minimum, over all group
    elements, of the sorted image multiset (encoded base |vecs| for speed).
    """
    check_feasible(p, k, R, multiset_limit, step_limit)
    V = p**k - 1
    if V**R > 2**62:
        raise GuardExceeded(f"encoding width |V|^R = {V**R} exceeds 64-bit range")
    vecs, arr = _survivors(p, k, R)
    if arr.shape[0] == 0:
        return OrbitTable(p, k, R, {}, 0, ())
    index = {v: i for i, v in enumerate(vecs)}
    mats = gl_matrices(p, k)
    perms = np.zeros((len(mats), V), dtype=np.int64)
    for gi, m in enumerate(mats):
        for vi, v in enumerate(vecs):
            w = tuple(sum(m[r][c] * v[c] for c in range(k)) % p for r in range(k))
            perms[gi, vi] = index[w]
    powers = np.array([V**e for e in range(R - 1, -1, -1)], dtype=np.int64)
    best = np.sort(arr, axis=1) @ powers
    for gi in range(len(mats)):
        image = np.sort(perms[gi][arr], axis=1)
        np.minimum(best, image @ powers, out=best)
    reps_encoded = np.unique(best)
    by_partition: dict = {}
    reps = []
    for code in reps_encoded.tolist():
        digits = []
        x = int(code)
        for _ in range(R):
            digits.append(x % V)
            x //= V
        digits.reverse()
        cols = tuple(vecs[i] for i in digits)
        reps.append(cols)
        part = classify_partition(cols, p, k)
        by_partition[part] = by_partition.get(part, 0) + 1
    return OrbitTable(p, k, R, by_partition, len(reps), tuple(reps))


def canonical_form(columns, p: int, k: int):
    """Canonical representative of one multiset under the full group."""
    mats = gl_matrices(p, k)
    best = None
    for m in mats:
        image = sorted(
            tuple(sum(m[r][c] * v[c] for c in range(k)) % p for r in range(k))
            for v in columns
        )
        key = tuple(image)
        if best is None or key < best:
            best = key
    return best


def rank1_orbit_count(p: int, R: int, multiset_limit=None, step_limit=None) -> int:
    """Orbits of F_p^* acting elementwise on zero-sum R-multisets of nonzero
    residues (rank-1 ground truth)."""
    return count_orbits(p, 1, R, multiset_limit, step_limit).total


def distribution_bruteforce(parts, weights, p: int, zero_first_column: bool = False,
                            multiset_limit=None):
    """Literal enumeration of the weighted-sum distribution.

    Materializes the weighted sum of every matrix (one row per part, row i a
    multiset of P_i column indices, first column excluded when requested)
    and buckets by residue.  Kept deliberately independent of the dynamic-
    programming route.
    """
    from .residues import Distribution  # local import: keep module layers separate

    parts = tuple(parts)
    weights = tuple(weights)
    if len(weights) != len(parts):
        raise ValueError("need one weight per part")
    multiset_limit = DEFAULT_MULTISET_LIMIT if multiset_limit is None else int(multiset_limit)
    total = 1
    for P in parts:
        cols = p - 1 if zero_first_column else p
        total *= multichoose(P, cols)
    if total > multiset_limit:
        raise GuardExceeded(f"{total} matrices exceeds the limit of {multiset_limit}")
    cur = np.zeros(1, dtype=np.int64)
    first = 1 if zero_first_column else 0
    for P, w in zip(parts, weights):
        sums = []
        for combo in itertools.combinations_with_replacement(range(first, p), P):
            sums.append(sum(w * j for j in combo) % p)
        row = np.array(sums, dtype=np.int64)
        cur = (cur[:, None] + row[None, :]).ravel() % p
    counts = np.bincount(cur, minlength=p)
    return Distribution(tuple(int(c) for c in counts))


def write_representatives(table: OrbitTable, path) -> int:
    """Write orbit representatives, one multiset per line, each column as a
    comma-separated coordinate tuple.  Returns the number of lines."""
    lines = []
    for cols in table.representatives:
        lines.append(" ".join(",".join(str(c) for c in v) for v in cols))
    text = "\n".join(lines) + ("\n" if lines else "")
    if hasattr(path, "write"):
        path.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)
    return len(lines)
