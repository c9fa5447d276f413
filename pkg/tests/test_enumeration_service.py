import pytest

from monoid_duality.errors import OrderTooLarge
from monoid_duality.models import CayleyTable


@pytest.mark.parametrize('order, count', [(1, 1), (2, 2), (3, 5), (4, 19)])
def test_commutative_monoid_counts(enumeration_service, order, count):
    assert enumeration_service.enumerate_commutative_monoids(order).count == count


@pytest.mark.slow
def test_commutative_monoid_count_order_5(enumeration_service):
    report = enumeration_service.enumerate_commutative_monoids(5)
    assert report.count == 78
    assert report.catalog_labels is None


def test_order_2_representatives(enumeration_service):
    report = enumeration_service.enumerate_commutative_monoids(2)
    assert report.representatives == (CayleyTable(((0, 1), (1, 0))), CayleyTable(((0, 1), (1, 1))))
    assert report.catalog_labels == ('M2', 'M1')


def test_order_3_labels(enumeration_service):
    assert enumeration_service.enumerate_commutative_monoids(3).catalog_labels == ('M5', 'M3', 'M4', 'M6', 'M7')


def test_every_order_4_class_has_its_own_catalog_entry(enumeration_service, catalog_repository):
    labels = enumeration_service.enumerate_commutative_monoids(4).catalog_labels
    assert sorted(labels) == sorted(entry.label for entry in catalog_repository.get_by_order(4))


def test_split_search_gives_the_same_report(enumeration_service):
    assert enumeration_service.enumerate_commutative_monoids(3, workers=2) == \
        enumeration_service.enumerate_commutative_monoids(3, workers=1)


@pytest.mark.parametrize('order', [2, 3])
def test_naive_enumeration_agrees(enumeration_service, order):
    assert enumeration_service.enumerate_commutative_monoids_naive(order) == \
        enumeration_service.enumerate_commutative_monoids(order)


def test_order_limits(enumeration_service):
    with pytest.raises(OrderTooLarge):
        enumeration_service.enumerate_commutative_monoids(6)
    with pytest.raises(OrderTooLarge):
        enumeration_service.enumerate_monoids_with_absorbing(5)


def test_absorbing_order_2_is_m1(enumeration_service):
    report = enumeration_service.enumerate_monoids_with_absorbing(2)
    assert report.catalog_labels == ('M1',)


def test_absorbing_order_3_all_commutative(enumeration_service):
    assert enumeration_service.enumerate_monoids_with_absorbing(3, commutative=False).count == 0


def test_noncommutative_absorbing_order_4(enumeration_service):
    report = enumeration_service.enumerate_monoids_with_absorbing(4, commutative=False)
    assert sorted(report.catalog_labels) == ['N1', 'N2']


@pytest.mark.parametrize('label, mult_labels', [
    ('M1', ['M1']),
    ('M2', ['M1']),
    ('M5', []),
    ('M6', ['M4']),
    ('M7', ['M5']),
])
def test_semiring_multiplications(enumeration_service, catalog_repository, label, mult_labels):
    found = enumeration_service.enumerate_semiring_multiplications(catalog_repository.get(label).monoid)
    assert sorted(c.mult_label for c in found) == mult_labels
    assert all(c.additive_label == label for c in found)


def test_semiring_multiplications_match_listed_tables(enumeration_service, catalog_repository, algebra_service):
    add = catalog_repository.get('M4').monoid
    found = enumeration_service.enumerate_semiring_multiplications(add)
    listed = [
        algebra_service.validate_semiring(add.op, item.mul) for item in catalog_repository.get_semirings('M4')
    ]
    assert len(found) == len(listed) == 3
    assert all(enumeration_service.is_listed_semiring(c.semiring, listed) for c in found)
