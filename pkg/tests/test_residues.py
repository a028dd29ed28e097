import itertools
import math

import pytest

from qorbit import arith, enumerate_classes, make, partition_ACsets, predicted_subset_count, subset_label
from qorbit.errors import DomainError
from qorbit.orbits import decompose, enumerate_ambiguous, realized_labels
from qorbit.residues import ResidueClass, class_of, label_key, prime_sign

A1_PAPER = {(0, 0, 1), (0, 0, 4), (1, 1, 1), (4, 1, 1), (2, 4, 1), (2, 1, 4), (3, 1, 4), (3, 4, 1), (1, 4, 4), (4, 4, 4)}


def test_classes_mod_5():
    classes = enumerate_classes(5, 5)
    assert len(classes) == 24
    assert sum(1 for k in classes if k.a == 0) == 8
    assert ResidueClass(5, 2, 4, 1) in classes
    assert enumerate_classes(5, 5) == enumerate_classes(10, 5)


def test_classes_mod_2():
    # exhaustive filter of the 8 triples; the even and odd cases differ
    even = {k.triple for k in enumerate_classes(30, 2)}
    odd = {k.triple for k in enumerate_classes(15, 2)}
    assert even == {(0, 0, 1), (0, 1, 0), (1, 1, 1)}
    assert odd == {(0, 1, 1), (1, 0, 1), (1, 1, 0), (1, 0, 0)}


@pytest.mark.parametrize("n, s", [(15, 4), (37, 9), (30, 6)])
def test_classes_contain_every_element(n, s):
    classes = set(enumerate_classes(n, s))
    for e in enumerate_ambiguous(n):
        assert class_of(e, s) in classes


def test_partition_mod_5():
    part = partition_ACsets(5, 5)
    assert {k.triple for k in part.A1} == A1_PAPER
    assert len(part.A2) == 10
    assert {k.triple for k in part.C1} == {(0, 1, 0), (0, 4, 0)}
    assert {k.triple for k in part.C2} == {(0, 2, 0), (0, 3, 0)}
    all_parts = [part.A1, part.A2, part.C1, part.C2]
    assert set().union(*all_parts) == set(enumerate_classes(5, 5))
    for u, v in itertools.combinations(all_parts, 2):
        assert not u & v


def test_partition_errors():
    with pytest.raises(DomainError):
        partition_ACsets(7, 5)
    with pytest.raises(DomainError):
        partition_ACsets(9, 9)


@pytest.mark.parametrize("a, c, expected", [
    (0, 1, {3: 1, 5: 1}),
    (0, -1, {3: -1, 5: 1}),
    (0, 3, {3: 1, 5: -1}),
    (0, -3, {3: -1, 5: -1}),
])
def test_subset_label_n15(a, c, expected):
    assert subset_label(make(a, c, 15)) == expected


def test_subset_label_special_n():
    assert subset_label(make(0, 1, 2)) == {}
    assert subset_label(make(0, 1, 128)) == {128: 1}
    assert subset_label(make(0, -1, 128)) == {128: -1}
    # mixed 2^h * odd uses only the odd primes
    assert list(subset_label(make(0, 1, 24))) == [3]


def test_label_totality():
    for n in (15, 45, 75, 105, 363):
        for e in enumerate_ambiguous(n):
            for p in arith.odd_prime_factors(n):
                assert not (e.b % p == 0 and e.c % p == 0)


def test_label_constant_on_orbits_to_500():
    for n in range(3, 501):
        if math.isqrt(n) ** 2 == n or not arith.odd_prime_factors(n):
            continue
        for o in decompose(n).orbits:
            keys = {label_key(subset_label(e)) for e in o.component}
            assert keys == {label_key(o.label)}, n


def test_two_power_labels_constant():
    for n in (8, 32, 128, 512):
        d = decompose(n)
        assert len(d.orbits) == 2
        assert {o.label[n] for o in d.orbits} == {1, -1}
        for o in d.orbits:
            assert {subset_label(e)[n] for e in o.component} == {o.label[n]}


@pytest.mark.parametrize("n", [15, 35, 45])
def test_class_map_consistency(n):
    for p in arith.odd_prime_factors(n):
        part = partition_ACsets(n, p)
        side = {"A1": 1, "C1": 1, "A2": -1, "C2": -1}
        for e in enumerate_ambiguous(n):
            name = part.part_of(class_of(e, p))
            assert side[name] == prime_sign(e, p)
            x_name = part.part_of(class_of(make(-e.a, e.b, n), p))
            assert side[x_name] == side[name]


@pytest.mark.parametrize("n, expected", [(15, 4), (2310, 16), (128, 2), (2, 1), (37, 2), (105, 8)])
def test_predicted_subset_count(n, expected):
    assert predicted_subset_count(n) == expected


def brute_realized(n):
    primes = [p for p in range(3, n + 1, 2) if n % p == 0 and arith.is_prime(p)]
    out = set()
    for e in enumerate_ambiguous(n):
        sig = []
        for p in primes:
            t = e.c if e.c % p else e.b
            sq = {x * x % p for x in range(1, p)}
            sig.append(1 if t % p in sq else -1)
        out.add(tuple(sig))
    return len(out)


@pytest.mark.parametrize("n", [15, 30, 105, 210, 1155, 2310, 37])
def test_realized_labels_match_brute_force(n):
    assert len(realized_labels(n)) == brute_realized(n)
