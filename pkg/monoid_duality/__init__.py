from dotenv import load_dotenv
from monoid_duality.config.config import Config
import os


# Load environment variables
load_dotenv()

# Creating config, development unless MONOID_DUALITY_ENV says otherwise
config = Config().get(os.getenv('MONOID_DUALITY_ENV', 'development'))
