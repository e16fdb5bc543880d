"""Conjugacy classes: closed form vs orbit enumeration, structure constants."""

import pytest

from terw import (
    GuardExceededError,
    class_products,
    conjugacy_classes,
    conjugacy_classes_bruteforce,
    dihedral,
    g2_group,
    make_abelian,
    make_d2,
    make_involution,
    structure_constant,
)
from terw.conjugacy import COSET, FIXED, PAIRED


def assert_same_classes(a, b):
    assert [c.elements for c in a] == [c.elements for c in b]
    assert [c.kind for c in a] == [c.kind for c in b]
    assert [c.rep for c in a] == [c.rep for c in b]


def test_s3_classes(s3):
    cl = conjugacy_classes(s3)
    assert cl.counts == (1, 1, 1)
    assert cl.sizes == (1, 2, 3)
    assert cl[0].elements == (((0,), 0),)
    assert cl[1].elements == (((1,), 0), ((2,), 0))
    assert set(cl[2].elements) == {((0,), 1), ((1,), 1), ((2,), 1)}
    assert_same_classes(cl, conjugacy_classes_bruteforce(s3))


def test_d4_classes(d4):
    cl = conjugacy_classes(d4)
    assert cl.counts == (2, 1, 2)
    assert cl.sizes == (1, 1, 2, 2, 2)
    # {e}, {a^2}, {a, a^3}, {b, a^2 b}, {a b, a^3 b}
    assert cl[1].rep == ((2,), 0)
    assert set(cl[3].elements) == {((0,), 1), ((2,), 1)}
    assert set(cl[4].elements) == {((1,), 1), ((3,), 1)}
    assert_same_classes(cl, conjugacy_classes_bruteforce(d4))


def test_q8_same_shape_as_d4(q8, d4):
    assert conjugacy_classes(q8).sizes == conjugacy_classes(d4).sizes
    assert_same_classes(conjugacy_classes(q8), conjugacy_classes_bruteforce(q8))


def test_sd16_classes(sd16):
    cl = conjugacy_classes(sd16)
    assert cl.counts == (2, 3, 2)
    assert cl.sizes == (1, 1, 2, 2, 2, 4, 4)
    assert_same_classes(cl, conjugacy_classes_bruteforce(sd16))


def test_class_equation_shape():
    for group in [
        dihedral([(2, 1), (3, 1)]),
        dihedral([(3, 2)]),
        g2_group(12, 5, 0),
        make_d2(
            make_abelian([(2, 2), (3, 1)]),
            make_involution(make_abelian([(2, 2), (3, 1)]), [3, 1]),
            [0, 0],
        ),
    ]:
        cl = conjugacy_classes(group)
        n, d = group.n, group.d
        assert cl.counts == (d, (n - d) // 2, d)
        assert sum(cl.sizes) == group.order
        assert sorted(cl.sizes) == sorted(
            [1] * d + [2] * ((n - d) // 2) + [n // d] * d
        )
        assert_same_classes(cl, conjugacy_classes_bruteforce(group))


def test_class_kinds_and_invariants(sd16):
    cl = conjugacy_classes(sd16)
    fx = sd16.fixed
    for c in cl:
        if c.kind == FIXED:
            assert c.size == 1
            assert fx.is_fixed(c.rep[0])
        elif c.kind == PAIRED:
            assert c.size == 2
            a = c.rep[0]
            assert not fx.is_fixed(a)
            assert set(c.elements) == {(a, 0), (sd16.twist.apply(a), 0)}
        else:
            assert c.kind == COSET
            assert c.size == sd16.n // sd16.d


def test_identity_class_is_first(s3, d4, q8, sd16):
    for group in (s3, d4, q8, sd16):
        cl = conjugacy_classes(group)
        assert cl[0].elements == (group.identity,)
        assert cl.index_of(group.identity) == 0


def test_class_of_lookup(s3, d4):
    cl3 = conjugacy_classes(s3)
    assert cl3.index_of(((2,), 0)) == 1
    cl4 = conjugacy_classes(d4)
    assert cl4.index_of(((3,), 1)) == 4


def test_guard_exceeded():
    group = dihedral([(2, 2), (3, 2)])  # order 72
    with pytest.raises(GuardExceededError):
        conjugacy_classes_bruteforce(group, guard=64)


def test_structure_constants_s3(s3):
    cl = conjugacy_classes(s3)
    # z, z' in {a, a^2} with z z' = e: exactly (a, a^2) and (a^2, a)
    assert structure_constant(s3, cl, 1, 1, 0) == 2
    for j in range(3):
        for k in range(3):
            assert structure_constant(s3, cl, 0, j, k) == (1 if j == k else 0)


def test_structure_constants_d4(d4):
    cl = conjugacy_classes(d4)
    assert structure_constant(d4, cl, 3, 3, 0) == 2  # b^2 = (a^2 b)^2 = e


def test_structure_constant_rep_independent(sd16, q8):
    for group in (sd16, q8):
        cl = conjugacy_classes(group)
        ell = len(cl)
        for i in range(ell):
            for j in range(ell):
                for k in range(ell):
                    vals = set()
                    for y in cl[k].elements:
                        count = sum(
                            1
                            for z in cl[i].elements
                            if cl.index_of(group.mul(y, group.inv(z))) == j
                        )
                        vals.add(count)
                    assert len(vals) == 1


def test_class_products_s3(s3):
    cl = conjugacy_classes(s3)
    assert class_products(s3, cl, 1, 1) == {0, 1}
    assert class_products(s3, cl, 2, 2) == {0, 1}
    assert class_products(s3, cl, 1, 2) == {2}


def test_triple_count_equals_nonzero_structure_constants(d4, sd16):
    for group in (d4, sd16):
        cl = conjugacy_classes(group)
        ell = len(cl)
        triples = sum(
            len(class_products(group, cl, i, j)) for i in range(ell) for j in range(ell)
        )
        nonzero = sum(
            1
            for i in range(ell)
            for j in range(ell)
            for k in range(ell)
            if structure_constant(group, cl, i, j, k) != 0
        )
        assert triples == nonzero


def test_paired_product_distinctness(sd16):
    # products of two paired classes split into exactly two distinct classes
    group = sd16
    cl = conjugacy_classes(group)
    paired = [c for c in cl if c.kind == PAIRED]
    for u in paired:
        for v in paired:
            y_r, y_j = u.rep[0], v.rep[0]
            one = cl.index_of((group.abelian.mul(y_r, y_j), 0))
            other = cl.index_of((group.abelian.mul(y_r, group.twist.apply(y_j)), 0))
            assert one != other
            assert class_products(group, cl, u.index, v.index) == {one, other}


def test_coset_products_partition_abelian_part(sd16, d4):
    for group in (sd16, d4):
        cl = conjugacy_classes(group)
        cosets = [c for c in cl if c.kind == COSET]
        abelian_classes = {c.index for c in cl if c.kind != COSET}
        for r in cosets:
            seen: set = set()
            covered = set()
            for j in cosets:
                prod = {
                    group.mul(u, v) for u in r.elements for v in j.elements
                }
                assert not (seen & prod)
                seen |= prod
                covered |= class_products(group, cl, r.index, j.index)
            assert len(seen) == group.n
            assert covered == abelian_classes
