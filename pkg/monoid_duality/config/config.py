from monoid_duality.config.dev_config import DevConfig
from monoid_duality.config.production import ProductionConfig

class Config:
    def __init__(self) -> None:
        self.dev_config = DevConfig()
        self.production_config = ProductionConfig()

    def get(self, env: str):
        if env == 'production':
            return self.production_config
        return self.dev_config
