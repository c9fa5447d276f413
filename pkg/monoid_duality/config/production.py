import os


class ProductionConfig():
    def __init__(self) -> None:
        self.ENV = 'production'
        self.LOG_LEVEL = os.getenv('MONOID_DUALITY_LOG_LEVEL', 'WARNING')
        self.SIZE_BUDGET = int(os.getenv('MONOID_DUALITY_SIZE_BUDGET', 10**6))
        self.SAMPLE_PAIRS = int(os.getenv('MONOID_DUALITY_SAMPLE_PAIRS', 10**5))
        self.MAX_MONOID_ORDER = 5
        self.MAX_SEMIRING_ORDER = 4
        self.MAX_DUALITY_ORDER = 4
        self.MAX_UNIFORMIZATION_STATES = 10**4
        self.WORKERS = int(os.getenv('MONOID_DUALITY_WORKERS', os.cpu_count() or 1))
        self.REPLICATE_BLOCK = 1000
        self.EXPECTATION_REPLICATES = int(os.getenv('MONOID_DUALITY_EXPECTATION_REPLICATES', 10**5))
