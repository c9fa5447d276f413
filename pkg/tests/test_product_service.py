import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from monoid_duality.errors import MalformedTable, NoDual, SizeBudgetExceeded
from monoid_duality.models import DualityFunction, Lattice, SiteMap, SiteSpace
from monoid_duality.services.product_service import ProductService, configuration_array, is_hom

M6_HOMS = ((0, 0, 0), (0, 1, 2), (0, 2, 2))
PRODUCT = ProductService()


@pytest.fixture(scope='module')
def psi5(homdual_service):
    '''psi5 with M6 as the row monoid.'''
    return homdual_service.transpose(homdual_service.verify_duality(homdual_service.duality_from_named('psi5')))


@pytest.fixture(scope='module')
def f4(algebra_service, catalog_repository):
    return algebra_service.validate_semiring(catalog_repository.get('M25').table, catalog_repository.get('F4-mult').table)


def m6_site_map(indices) -> SiteMap:
    space = SiteSpace(PRODUCT.catalog_repository.get('M6').monoid, 2)
    return SiteMap(space, ((M6_HOMS[indices[0]], M6_HOMS[indices[1]]), (M6_HOMS[indices[2]], M6_HOMS[indices[3]])))


@pytest.mark.parametrize('factors, label', [
    (('M1', 'M1'), 'M11'),
    (('M2', 'M2'), 'M25'),
    (('M1', 'M2'), 'M23'),
])
def test_direct_product_labels(product_service, algebra_service, monoid, factors, label):
    product = product_service.direct_product([monoid(f) for f in factors])
    assert algebra_service.catalog_label(product) == label


def test_direct_product_budget(product_service, monoid):
    with pytest.raises(SizeBudgetExceeded):
        product_service.direct_product([monoid('M1'), monoid('M1')], budget=10)


def test_configuration_order():
    assert configuration_array((2, 3)).tolist() == [[0, 0], [0, 1], [0, 2], [1, 0], [1, 1], [1, 2]]


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_hom_tuples_and_global_homs_correspond(data):
    labels = data.draw(st.lists(st.sampled_from(['M1', 'M2', 'M4', 'M6']), min_size=1, max_size=3))
    target = PRODUCT.catalog_repository.get(data.draw(st.sampled_from(['M1', 'M3', 'M6']))).monoid
    sources = [PRODUCT.catalog_repository.get(label).monoid for label in labels]
    fs = tuple(data.draw(st.sampled_from(PRODUCT.homdual_service.hom_set(s, target).base)) for s in sources)
    values = PRODUCT.hom_tuple_to_global(sources, target, fs)
    assert is_hom(PRODUCT.direct_product(sources), target, values)
    assert PRODUCT.global_to_hom_tuple(sources, target, values) == fs


def test_product_homs_count(product_service, monoid):
    homs = product_service.product_homs([monoid('M6'), monoid('M6')], monoid('M6'))
    assert len(homs) == 9
    assert len(set(homs)) == 9


@settings(max_examples=30, deadline=None)
@given(
    st.lists(st.integers(0, 2), min_size=4, max_size=4),
    st.lists(st.lists(st.integers(0, 2), min_size=2, max_size=2), min_size=1, max_size=8),
)
def test_site_map_array_form_agrees_with_call(indices, configs):
    m = m6_site_map(indices)
    images = PRODUCT.apply_site_map(m, configs)
    assert [tuple(int(v) for v in row) for row in images] == [m(tuple(x)) for x in configs]


def test_matrix_form_recovered_from_homomorphism(product_service):
    m = m6_site_map((1, 2, 0, 1))
    assert product_service.global_hom_set_matrix_check(m.space, m) == m
    assert product_service.global_hom_set_matrix_check(m.space, lambda x: (1, 1)) is None


def test_validate_site_map(product_service, monoid):
    space = SiteSpace(monoid('M6'), 1)
    with pytest.raises(NoDual):
        product_service.validate_site_map(SiteMap(space, (((0, 2, 1),),)))
    with pytest.raises(MalformedTable):
        product_service.validate_site_map(SiteMap(space, (((0, 1),),)))


def test_local_dual(product_service, homdual_service, psi5):
    assert product_service.local_dual(psi5, (0, 1, 2)) == (0, 1, 2)
    assert product_service.local_dual(psi5, (0, 0, 0)) == (0, 0, 0)
    original = homdual_service.duality_from_named('psi5')
    with pytest.raises(NoDual):
        product_service.local_dual(original, (0, 2, 1))


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=4, max_size=4))
def test_dual_map_agrees_with_search(indices):
    homdual = PRODUCT.homdual_service
    psi = homdual.transpose(homdual.verify_duality(homdual.duality_from_named('psi5')))
    lifted = PRODUCT.lift_duality(psi, 2)
    m = m6_site_map(indices)
    dual = PRODUCT.dual_map(lifted, m)
    table = PRODUCT.lifted_table(lifted)
    search = PRODUCT.find_dual_by_search(table, PRODUCT.global_index_map(m))
    assert search == [[int(v)] for v in PRODUCT.global_index_map(dual)]


def test_dual_matrix_is_transposed(product_service, psi5):
    lifted = product_service.lift_duality(psi5, 2)
    m = m6_site_map((0, 1, 2, 0))
    dual = product_service.dual_map(lifted, m)
    for i in range(2):
        for j in range(2):
            assert dual.matrix[j][i] == product_service.local_dual(psi5, m.matrix[i][j])


def test_non_homomorphisms_have_no_dual(product_service, psi5):
    lifted = product_service.lift_duality(psi5, 2)
    table = product_service.lifted_table(lifted)
    product = product_service.product_monoid(psi5.s, 2)
    rng = np.random.default_rng(1)
    tried = 0
    while tried < 10:
        index_map = rng.integers(0, 9, size=9)
        if is_hom(product, product, index_map):
            continue
        tried += 1
        assert not all(product_service.find_dual_by_search(table, index_map))


def test_sampled_dual_identity(product_service, psi5):
    lifted = product_service.lift_duality(psi5, 2)
    m = m6_site_map((1, 1, 0, 2))
    dual = product_service.dual_map(lifted, m)
    checked = product_service.check_dual_identity(lifted, m, dual, budget=1)
    assert checked == product_service.settings.SAMPLE_PAIRS


def test_lifts_match_closed_forms(product_service, homdual_service):
    psi1 = homdual_service.duality_from_named('psi1')
    psi2 = homdual_service.duality_from_named('psi2')
    assert np.array_equal(product_service.lifted_table(product_service.lift_duality(psi1, 3)),
                          np.array(product_service.additive_duality(3).table))
    assert np.array_equal(product_service.lifted_table(product_service.lift_duality(psi2, 3)),
                          np.array(product_service.cancellative_duality(3).table))
    assert homdual_service.verify_duality(product_service.additive_duality(2)).verified.passed


def test_heterogeneous_lift(product_service, homdual_service):
    psis = [homdual_service.duality_from_named(name) for name in ('psi1', 'psi4')]
    lifted = product_service.lift_heterogeneous(psis, verify=True)
    assert lifted.sites == 2
    assert not lifted.is_homogeneous()


def test_f4_additive_maps_without_dual(product_service, homdual_service, f4):
    field_psi = DualityFunction(f4.add, f4.add, f4.add, f4.mul.table)
    without = 0
    for h in homdual_service.hom_set(f4.add, f4.add).base:
        try:
            product_service.local_dual(field_psi, h)
        except NoDual:
            without += 1
    assert without == 12


def test_module_maps(product_service, f4):
    left = product_service.module_maps(f4, 1, 'left')
    assert len(left) == 4
    assert (0, 1, 2, 3) in left
    assert product_service.module_maps(f4, 1, 'right') == left


def test_semiring_inner_duality(product_service, algebra_service, f4):
    f2 = algebra_service.validate_semiring('01 10', '00 01')
    lifted = product_service.semiring_inner_duality(f2, 2, verify=True)
    assert lifted.kind == 'semiring'
    assert product_service.semiring_inner_duality(f4, 1, verify=True).sites == 1


def test_semiring_dual_map_needs_linear_entries(product_service, f4):
    lifted = product_service.semiring_inner_duality(f4, 1)
    frobenius = SiteMap(SiteSpace(f4.add, 1), (((0, 1, 3, 2),),))
    with pytest.raises(NoDual):
        product_service.dual_map(lifted, frobenius)


@pytest.mark.parametrize('lattice, name', [
    (Lattice.chain(2), 'psi1'),
    (Lattice.chain(3), 'psi4'),
    (Lattice.diamond(), 'psi11'),
    (Lattice.chain(4), 'psi15'),
])
def test_lattice_duality_function(product_service, lattice, name):
    psi = product_service.lattice_duality_function(lattice)
    assert psi.verified.passed
    assert psi.t_label == 'M1'
    assert psi.name == name


def test_module_maps_on_two_sites_are_pairs_of_one_site_maps(product_service, f4):
    one_site = product_service.module_maps(f4, 1, 'left')
    two_sites = product_service.module_maps(f4, 2, 'left')
    assert len(two_sites) == 16
    pairs = sorted({
        tuple(int(v) for v in product_service.hom_tuple_to_global([f4.add, f4.add], f4.add, (f, g)))
        for f in one_site for g in one_site
    })
    assert two_sites == pairs


def test_module_maps_budget(product_service, f4):
    with pytest.raises(SizeBudgetExceeded):
        product_service.module_maps(f4, 2, 'left', budget=5)


@pytest.mark.parametrize('indices', [(0, 1, 2, 0), (1, 2, 0, 1), (2, 2, 1, 0), (1, 0, 0, 1)])
def test_dual_of_dual_map_is_the_original(product_service, homdual_service, psi5, indices):
    m = m6_site_map(indices)
    dual = product_service.dual_map(product_service.lift_duality(psi5, 2), m)
    back = product_service.dual_map(product_service.lift_duality(homdual_service.transpose(psi5), 2), dual)
    assert back.matrix == m.matrix
