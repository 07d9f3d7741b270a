import os

from dotenv import load_dotenv

load_dotenv()


class Settings:
    APP_NAME: str = "apolar"
    DEBUG: bool = os.getenv("DEBUG", "false").lower() == "true"

    # Arithmetic
    MODE: str = os.getenv("APOLAR_MODE", "rational")
    PRIME: int = int(os.getenv("APOLAR_PRIME", "2147483647"))

    # Resource ceilings
    CEILING: int = int(os.getenv("APOLAR_CEILING", "200000"))
    MAX_PIVOTS: int = int(os.getenv("APOLAR_MAX_PIVOTS", "50000"))
    DENSE_THRESHOLD: int = int(os.getenv("APOLAR_DENSE_THRESHOLD", "4096"))

    # Workers
    THREADS: int = int(os.getenv("APOLAR_THREADS", "1"))

    # Randomized checks
    SEED: int = int(os.getenv("APOLAR_SEED", "0"))

    # Logging
    LOG_LEVEL: str = os.getenv("APOLAR_LOG_LEVEL", "INFO")
    LOG_FILE: str = os.getenv("APOLAR_LOG_FILE", "")

    # Result store
    RESULTS_PATH: str = os.getenv("APOLAR_RESULTS_PATH", "apolar_results.json")


settings = Settings()
