"""
Configuration settings for the compressed quadtree toolkit
"""
import os
from dotenv import load_dotenv
from loguru import logger


def load_environment():
    """Load environment variables from .env files when present"""
    env_loaded = load_dotenv()
    if env_loaded:
        logger.debug("Loaded environment variables from .env file")

    for env_file in ['.env.local']:
        if os.path.exists(env_file):
            load_dotenv(env_file, override=True)
            logger.debug(f"Loaded additional environment from {env_file}")


load_environment()


def _env_bool(name: str, default: str) -> bool:
    return os.getenv(name, default).lower() == "true"


class Config:
    """Configuration class for builds, checks and benchmarks"""

    # Geometry defaults
    DIMENSION: int = int(os.getenv("QT_DIMENSION", "2"))
    RESOLUTION: int = int(os.getenv("QT_RESOLUTION", "31"))
    DUPLICATE_POLICY: str = os.getenv("QT_DUPLICATE_POLICY", "reject")

    # Randomness
    SEED: int = int(os.getenv("QT_SEED", "0"))

    # Validation
    VALIDATION_SAMPLES: int = int(os.getenv("QT_VALIDATION_SAMPLES", "1000"))
    LEMMA1_MAX_POINTS: int = int(os.getenv("QT_LEMMA1_MAX_POINTS", "12"))
    INTERSECTION_MAX_POINTS: int = 10
    DEFINING_SET_BOUND: int = 4

    # Experiments
    LEMMA2_POINTS: int = int(os.getenv("QT_LEMMA2_POINTS", "16"))
    LEMMA2_TRIALS: int = int(os.getenv("QT_LEMMA2_TRIALS", "5000"))
    LEMMA2_PRESENCE_FLOOR: int = 100
    PROFILE_N: int = int(os.getenv("QT_PROFILE_N", "4096"))
    PROFILE_TRIALS: int = int(os.getenv("QT_PROFILE_TRIALS", "50"))
    SCALING_TRIALS: int = int(os.getenv("QT_SCALING_TRIALS", "10"))

    # Execution
    MAX_WORKERS: int = int(os.getenv("QT_MAX_WORKERS", "1"))
    SHOW_PROGRESS: bool = _env_bool("QT_SHOW_PROGRESS", "true")

    # Logging Configuration
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "INFO")
    LOG_FILE: str = os.getenv("LOG_FILE", "")

    @classmethod
    def validate(cls) -> bool:
        """Validate configuration values, raising on the first bad group"""
        settings = {
            "QT_DIMENSION": cls.DIMENSION,
            "QT_RESOLUTION": cls.RESOLUTION,
            "QT_DUPLICATE_POLICY": cls.DUPLICATE_POLICY,
            "QT_SEED": cls.SEED,
            "QT_MAX_WORKERS": cls.MAX_WORKERS,
        }
        for name, value in settings.items():
            logger.debug(f"{name}: {value}")

        problems = []
        if cls.DIMENSION < 1:
            problems.append(f"QT_DIMENSION must be >= 1, got {cls.DIMENSION}")
        if not 1 <= cls.RESOLUTION <= 62:
            problems.append(f"QT_RESOLUTION must be in [1, 62], got {cls.RESOLUTION}")
        if cls.DUPLICATE_POLICY not in ("reject", "deduplicate"):
            problems.append(f"QT_DUPLICATE_POLICY must be reject|deduplicate, got {cls.DUPLICATE_POLICY}")
        if cls.MAX_WORKERS < 1:
            problems.append(f"QT_MAX_WORKERS must be >= 1, got {cls.MAX_WORKERS}")

        if problems:
            for problem in problems:
                logger.error(problem)
            raise ValueError(f"Invalid configuration: {'; '.join(problems)}")

        return True


# Global config instance
config = Config()
