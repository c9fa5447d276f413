from dataclasses import replace

import pytest

from monoid_duality.errors import (
    Condition1Fail,
    NotCommutative,
    NotIsomorphism,
    OrderTooLarge,
    SizeBudgetExceeded
)


def test_hom_set_m6(homdual_service, monoid):
    adjoint = homdual_service.hom_set(monoid('M6'), monoid('M6'))
    assert adjoint.base == ((0, 0, 0), (0, 1, 2), (0, 2, 2))
    assert adjoint.index_of_zero == 0
    assert adjoint.op.rows() == '012 121 212'


def test_hom_set_m1(homdual_service, monoid):
    assert homdual_service.hom_set(monoid('M1'), monoid('M1')).base == ((0, 0), (0, 1))


def test_hom_set_into_m2_from_m1_is_trivial(homdual_service, monoid):
    assert homdual_service.hom_set(monoid('M1'), monoid('M2')).base == ((0, 0),)


def test_hom_set_needs_commutative_target(homdual_service, monoid):
    with pytest.raises(NotCommutative):
        homdual_service.hom_set(monoid('M1'), monoid('N1'))


def test_hom_set_budget(homdual_service, monoid):
    with pytest.raises(SizeBudgetExceeded):
        homdual_service.hom_set(monoid('M25'), monoid('M25'), budget=10)


def test_reflexive_and_evaluation_duality(homdual_service, monoid):
    assert homdual_service.is_reflexive(monoid('M1'), monoid('M1'))
    psi = homdual_service.evaluation_duality(monoid('M1'), monoid('M1'))
    assert psi.verified.passed


def test_evaluation_duality_on_m6_is_psi6(homdual_service, monoid):
    psi = homdual_service.evaluation_duality(monoid('M6'), monoid('M6'))
    labelled = homdual_service.label_duality(psi)
    assert labelled.name == 'psi6'
    assert labelled.table == ((0, 0, 0), (0, 1, 2), (0, 2, 2))


def test_adjoint_embedding_is_injective_for_m6(homdual_service, monoid):
    embedding = homdual_service.adjoint_embedding(monoid('M6'), monoid('M6'))
    assert len(set(embedding)) == 3


def test_every_listed_duality_verifies(homdual_service, catalog_repository):
    for named in catalog_repository.get_dualities():
        psi = homdual_service.verify_duality(homdual_service.duality_from_named(named))
        assert psi.verified.passed, named.name


def test_check_duality_reports_witnesses(homdual_service):
    psi = replace(homdual_service.duality_from_named('psi1'), table=((0, 0), (0, 0)))
    record = homdual_service.check_duality(psi)
    assert not record.passed
    assert not record.rows_distinct
    assert not record.columns_distinct
    codes = [failure.code for failure in record.failures]
    assert 'condition_1_fail' in codes
    with pytest.raises(Condition1Fail):
        homdual_service.verify_duality(psi)


def test_transpose_of_verified_psi5(homdual_service):
    psi = homdual_service.verify_duality(homdual_service.duality_from_named('psi5'))
    transposed = homdual_service.transpose(psi)
    assert transposed.verified.passed
    assert (transposed.s_label, transposed.r_label) == ('M6', 'M5')
    assert homdual_service.equivalent_duality(psi, transposed)


def test_psi5_real_table(homdual_service):
    psi = homdual_service.transpose(homdual_service.duality_from_named('psi5'))
    assert psi.real_table() == ((1.0, 1.0, 1.0), (1.0, -1.0, 0.0), (1.0, 1.0, 0.0))


def test_candidate_duality_needs_isomorphism(homdual_service, monoid):
    m6 = monoid('M6')
    with pytest.raises(NotIsomorphism):
        homdual_service.candidate_duality(m6, m6, m6, (0, 2, 1))
    psi = homdual_service.candidate_duality(m6, m6, m6, (0, 1, 2))
    assert psi.verified.passed


def test_order_2_quadruples_reduce_to_psi1_and_psi2(homdual_service):
    quadruples = homdual_service.find_all_duality_quadruples(2)
    assert [(q.s_label, q.r_label, q.t_label) for q in quadruples] == [('M1', 'M1', 'M1'), ('M2', 'M2', 'M2')]
    classes = homdual_service.reduce_duality_quadruples(quadruples)
    assert [c.name for c in classes] == ['psi1', 'psi2']
    assert all(homdual_service.is_minimal(c.representative) for c in classes)


def test_adjoint_census_order_2(homdual_service):
    census = {(e.s_label, e.t_label): e for e in homdual_service.adjoint_census(2)}
    assert len(census) == 4
    assert census[('M1', 'M1')].r_label == 'M1'
    assert census[('M2', 'M2')].r_label == 'M2'
    assert census[('M1', 'M2')].hom_count == 1


def test_census_order_cap(homdual_service):
    with pytest.raises(OrderTooLarge):
        homdual_service.find_all_duality_quadruples(5)


@pytest.mark.slow
def test_full_duality_census(homdual_service, catalog_repository):
    candidates = list(homdual_service.iter_duality_candidates(4))
    assert all(psi.verified.passed for psi in candidates)
    quadruples = homdual_service.find_all_duality_quadruples(4)
    assert len(quadruples) == 110
    assert all(q.psi.s.order == q.psi.r.order for q in quadruples)

    classes = homdual_service.reduce_duality_quadruples(quadruples)
    assert len(classes) == 22
    assert sorted(c.name for c in classes) == sorted(item.name for item in catalog_repository.get_dualities())
    assert sorted(c.name for c in classes if c.t_label == 'M1') == ['psi1', 'psi11', 'psi15', 'psi4']
    for c in classes:
        psi = c.representative
        assert psi.t.order <= min(psi.s.order, psi.r.order)


SMALL_LABELS = ['M%d' % i for i in range(27)]


@pytest.mark.parametrize('label', SMALL_LABELS)
def test_is_reflexive_on_every_small_monoid(homdual_service, monoid, label):
    m = monoid(label)
    reflexive = homdual_service.is_reflexive(m, m)
    assert isinstance(reflexive, bool)
    if reflexive:
        assert homdual_service.evaluation_duality(m, m).verified.passed


def test_adjoint_embedding_of_m15(homdual_service, monoid):
    m15 = monoid('M15')
    assert homdual_service.hom_set(m15, m15).order == 20
    embedding = homdual_service.adjoint_embedding(m15, m15)
    assert len(set(embedding)) == 4


def test_listed_dualities_have_reflexive_carriers(homdual_service, catalog_repository, monoid):
    for named in catalog_repository.get_dualities():
        t = monoid(named.t_label)
        assert homdual_service.is_reflexive(monoid(named.s_label), t), named.name
        assert homdual_service.is_reflexive(monoid(named.r_label), t), named.name


@pytest.mark.parametrize('s_label, t_label, expected', [
    ('M2', 'M2', True),
    ('M1', 'M2', False),
    ('M4', 'M1', True),
    ('M6', 'M5', True),
])
def test_is_reflexive_examples(homdual_service, monoid, s_label, t_label, expected):
    assert homdual_service.is_reflexive(monoid(s_label), monoid(t_label)) is expected


def test_m23_module_maps_are_its_endomorphisms(homdual_service, product_service, algebra_service, catalog_repository, monoid):
    m23 = monoid('M23')
    endomorphisms = list(homdual_service.hom_set(m23, m23).base)
    assert len(endomorphisms) == 4
    for entry in catalog_repository.get_semirings('M23'):
        semiring = algebra_service.validate_semiring(m23.op, entry.mul)
        left = product_service.module_maps(semiring, 1, 'left')
        right = product_service.module_maps(semiring, 1, 'right')
        assert left == right == endomorphisms
