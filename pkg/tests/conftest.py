import os

import pytest
from click.testing import CliRunner

from monoid_duality.repositories.catalog_repository import CatalogRepository
from monoid_duality.services.algebra_service import AlgebraService
from monoid_duality.services.enumeration_service import EnumerationService
from monoid_duality.services.homdual_service import HomDualService
from monoid_duality.services.product_service import ProductService
from monoid_duality.services.simulation_service import SimulationService

GOLDEN_DIR = os.path.join(os.path.dirname(__file__), 'golden')


@pytest.fixture
def golden():
    '''Contents of a file in tests/golden.'''
    def read(name: str) -> str:
        with open(os.path.join(GOLDEN_DIR, name)) as handle:
            return handle.read()
    return read


@pytest.fixture(scope='session')
def catalog_repository():
    return CatalogRepository()


@pytest.fixture(scope='session')
def algebra_service(catalog_repository):
    return AlgebraService(catalog_repository)


@pytest.fixture(scope='session')
def enumeration_service(algebra_service):
    return EnumerationService(algebra_service)


@pytest.fixture(scope='session')
def homdual_service(algebra_service):
    return HomDualService(algebra_service)


@pytest.fixture(scope='session')
def product_service(homdual_service):
    return ProductService(homdual_service)


@pytest.fixture(scope='session')
def simulation_service(product_service):
    return SimulationService(product_service)


@pytest.fixture
def monoid(catalog_repository):
    '''Catalog monoid by label.'''
    return lambda label: catalog_repository.get(label).monoid


@pytest.fixture
def runner():
    return CliRunner(mix_stderr=False)
