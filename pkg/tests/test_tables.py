import csv
import io
import json
from fractions import Fraction

import pytest

from topotype.counting import count_types_rank2
from topotype.partitions import PartitionType
from topotype.tables import (
    PolynomialFitError,
    build_table,
    default_degree_bound,
    default_modulus,
    fit_partition_polynomial,
    render_table,
    table_rows,
)


def test_default_degree_bound():
    assert default_degree_bound(PartitionType((2, 2))) == 1
    assert default_degree_bound(PartitionType((4, 2))) == 3
    assert default_degree_bound(PartitionType((3, 3))) == 3
    assert default_degree_bound(PartitionType((1,) * 6)) == 6
    assert default_degree_bound(PartitionType((2, 1, 1, 1, 1))) == 5


def test_default_modulus():
    assert default_modulus(PartitionType((2, 2))) == 4
    assert default_modulus(PartitionType((3, 3))) == 12
    assert default_modulus(PartitionType((1, 1, 1, 1))) == 2
    assert default_modulus(PartitionType((4, 2))) == 24


def test_fit_linear_row():
    fit = fit_partition_polynomial(PartitionType((2, 2)), modulus=1)
    assert list(fit.branches) == [0]
    assert fit.branches[0].coeffs == (Fraction(-1, 2), Fraction(1, 2))
    assert fit(11) == 5


def test_fit_constant_row():
    fit = fit_partition_polynomial(PartitionType((1, 1, 1)), modulus=1)
    assert fit.branches[0].coeffs == (Fraction(1),)


def test_fit_branching_row():
    # the {3,3} count genuinely depends on p mod 3
    fit = fit_partition_polynomial(PartitionType((3, 3)), modulus=3)
    assert sorted(fit.branches) == [1, 2]
    assert fit.branches[2].coeffs == (
        Fraction(-1, 36), Fraction(-1, 36), Fraction(1, 36), Fraction(1, 36))
    assert fit.branches[1].coeffs == (
        Fraction(-1, 4), Fraction(7, 36), Fraction(1, 36), Fraction(1, 36))
    assert fit(5) == 4
    assert fit(7) == 12


def test_fit_verifies_on_fresh_prime():
    fit = fit_partition_polynomial(PartitionType((2, 1, 1)))
    assert fit(31) == count_types_rank2(PartitionType((2, 1, 1)), 31).T
    assert fit(101) == count_types_rank2(PartitionType((2, 1, 1)), 101).T


def test_fit_insufficient_primes_names_class():
    with pytest.raises(PolynomialFitError, match=r"class 0 mod 1"):
        fit_partition_polynomial(PartitionType((4, 2)), modulus=1, primes=[5, 7, 11])


def test_fit_rejects_bad_primes():
    with pytest.raises(PolynomialFitError, match="not prime"):
        fit_partition_polynomial(PartitionType((2, 2)), modulus=1, primes=[5, 7, 9, 11, 13])
    with pytest.raises(PolynomialFitError, match="exceed 3"):
        fit_partition_polynomial(PartitionType((2, 2)), modulus=1, primes=[3, 5, 7, 11, 13])


def test_fit_detects_wrong_degree():
    with pytest.raises(PolynomialFitError, match="not polynomial"):
        fit_partition_polynomial(
            PartitionType((4, 2)), degree_bound=2, modulus=1,
            primes=[5, 7, 11, 13, 17, 19])


def test_table_rows():
    assert table_rows(3) == [PartitionType((1, 1, 1))]
    assert table_rows(4) == [
        PartitionType((2, 2)),
        PartitionType((2, 1, 1)),
        PartitionType((1, 1, 1, 1)),
    ]
    got = [part.parts for part in table_rows(6)]
    assert got == [
        (3, 3), (4, 2),
        (2, 2, 2), (3, 2, 1), (4, 1, 1),
        (2, 2, 1, 1), (3, 1, 1, 1),
        (2, 1, 1, 1, 1),
        (1, 1, 1, 1, 1, 1),
    ]
    with pytest.raises(ValueError):
        table_rows(2)


def test_build_table_uses_supplied_primes_for_samples():
    rows = build_table(4, primes=[5, 7, 11, 13])
    assert [row.partition.parts for row in rows] == [(2, 2), (2, 1, 1), (1, 1, 1, 1)]
    for row in rows:
        assert [q for q, _ in row.samples] == [5, 7, 11, 13]
        for q, t in row.samples:
            assert t == count_types_rank2(row.partition, q).T


def test_build_table_extends_fit_pool_when_needed():
    # six primes cannot pin down the degree-6 row; the fit pool grows
    # automatically while the displayed samples stay as supplied
    rows = build_table(6, primes=[5, 7, 11, 13, 17, 19])
    last = rows[-1]
    assert last.partition == PartitionType((1,) * 6)
    assert max(poly.degree for poly in last.fit.branches.values()) == 6
    assert [q for q, _ in last.samples] == [5, 7, 11, 13, 17, 19]


def test_render_table_plain():
    text = render_table(3)
    assert text.startswith("R = 3")
    assert "{1,1,1}" in text
    assert "1" in text.splitlines()[1]


def test_render_table_csv_parses():
    text = render_table(4, fmt="csv")
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["partition", "modulus", "class", "coefficients", "samples"]
    assert len(rows) > 3
    for row in rows[1:]:
        for c in row[3].split():
            Fraction(c)  # every coefficient is an exact rational


def test_render_table_json_roundtrip():
    text = render_table(4, fmt="json")
    obj = json.loads(text)
    assert json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n" == text
    parts = {tuple(r["partition"]) for r in obj["rows"]}
    assert ("2", "2") in parts


def test_render_table_rejects_unknown_format():
    with pytest.raises(ValueError):
        render_table(4, fmt="tsv")
