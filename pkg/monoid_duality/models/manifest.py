from dataclasses import dataclass, field


@dataclass
class ReproductionCheck:
    '''
    One acceptance check of the reproduction run.

    ``depends_on`` lists the catalog labels the check reads, ``diff`` describes
    the mismatch when it fails.
    '''
    name: str
    description: str
    depends_on: tuple = ()
    slow: bool = False
    passed: bool = False
    skipped: bool = False
    diff: str = ''


@dataclass
class ReproductionManifest:
    checks: list = field(default_factory=list)

    @property
    def failed(self) -> list:
        return [check for check in self.checks if not check.passed and not check.skipped]

    @property
    def passed(self) -> bool:
        return not self.failed
