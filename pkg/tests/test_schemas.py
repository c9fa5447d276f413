import pytest
from marshmallow import ValidationError

from monoid_duality.models import ExpectationEstimate
from monoid_duality.schemas import (
    CatalogEntrySchema,
    CayleyTableSchema,
    DualityFunctionSchema,
    EnumerationReportSchema,
    ExpectationEstimateSchema,
    RatesSchema,
    SemiringClassSchema,
    SiteMatrixSchema
)


def test_cayley_table_schema_validates_shape():
    assert CayleyTableSchema().load({'order': 2, 'table': [[0, 1], [1, 1]]}).rows() == '01 11'
    with pytest.raises(ValidationError):
        CayleyTableSchema().load({'order': 2, 'table': [[0, 1]]})
    with pytest.raises(ValidationError):
        CayleyTableSchema().load({'order': 2, 'table': [[0, 2], [1, 1]]})


def test_catalog_entry_dump(catalog_repository):
    data = CatalogEntrySchema().dump(catalog_repository.get('M1'))
    assert data['label'] == 'M1'
    assert data['table'] == {'order': 2, 'table': [[0, 1], [1, 1]]}
    assert (data['neutral'], data['commutative'], data['absorbing']) == (0, True, 1)
    assert CatalogEntrySchema().load(data) == catalog_repository.get('M1')


def test_enumeration_report_schema_loads_its_dump(enumeration_service):
    report = enumeration_service.enumerate_commutative_monoids(3)
    assert EnumerationReportSchema().load(EnumerationReportSchema().dump(report)) == report


def test_semiring_class_schema(enumeration_service, monoid):
    found = enumeration_service.enumerate_semiring_multiplications(monoid('M6'))
    data = SemiringClassSchema(many=True).dump(found)
    assert data[0]['mult_label'] == 'M4'
    assert data[0]['unit'] == found[0].semiring.unit
    assert SemiringClassSchema(many=True).load(data) == found


def test_duality_function_schema(homdual_service):
    psi = homdual_service.verify_duality(homdual_service.duality_from_named('psi5'))
    data = DualityFunctionSchema().dump(psi)
    assert data['verified']['passed'] is True
    assert data['verified']['failures'] == []
    loaded = DualityFunctionSchema().load(data)
    assert loaded.table == psi.table
    assert loaded.verified == psi.verified
    assert loaded.real_embedding == (1.0, -1.0, 0.0)


def test_site_matrix_schema():
    matrix = SiteMatrixSchema().load({'matrix': [[[0, 1], [0, 0]], [[0, 0], [0, 1]]]})
    assert matrix == (((0, 1), (0, 0)), ((0, 0), (0, 1)))
    with pytest.raises(ValidationError):
        SiteMatrixSchema().load({'matrix': [[[0, 1], [0, 0]]]})
    with pytest.raises(ValidationError):
        SiteMatrixSchema().load({'matrix': [[[0, 1], [0]], [[0, 0], [0, 1]]]})


def test_rates_schema_names_and_validates():
    rates = RatesSchema().load({'maps': [
        {'matrix': [[[0, 1]]], 'rate': 1.5},
        {'id': 'flip', 'matrix': [[[0, 0]]], 'rate': 0},
    ]})
    assert rates == [('m0', (((0, 1),),), 1.5), ('flip', (((0, 0),),), 0.0)]
    with pytest.raises(ValidationError):
        RatesSchema().load({'maps': [{'matrix': [[[0, 1]]], 'rate': -1}]})
    with pytest.raises(ValidationError):
        RatesSchema().load({'maps': [
            {'id': 'a', 'matrix': [[[0, 1]]], 'rate': 1},
            {'id': 'a', 'matrix': [[[0, 1]]], 'rate': 1},
        ]})


def test_expectation_estimate_schema_dumps_derived_fields():
    estimate = ExpectationEstimate(1.0, 100, 3, 0.5, 0.03, 0.52, 0.04, None)
    data = ExpectationEstimateSchema().dump(estimate)
    assert data['combined_se'] == pytest.approx(0.05)
    assert data['agree'] is True
    assert ExpectationEstimateSchema().load(data) == estimate
