from .main import SearchSetup
