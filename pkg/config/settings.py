"""Application settings and configuration"""

import os
from dotenv import load_dotenv

load_dotenv()


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    return default if raw in (None, "") else int(raw)


def _env_flag(name: str, default: bool = False) -> bool:
    raw = os.getenv(name)
    if raw in (None, ""):
        return default
    return raw.strip().lower() in ("1", "true", "yes", "on")


class Settings:
    """Application configuration"""

    # Size caps
    MAX_CELLS = _env_int("QPRIME_MAX_CELLS", 16)
    FILTER_LIMIT = _env_int("QPRIME_FILTER_LIMIT", 7)
    GRADED_LIMIT = _env_int("QPRIME_GRADED_LIMIT", 400)

    # Groebner completion; 0 means 2 * (m + n)
    DEGREE_GUARD = _env_int("QPRIME_DEGREE_GUARD", 0)

    # Runner
    JOBS = _env_int("QPRIME_JOBS", 1)
    OUTPUT_FORMAT = os.getenv("QPRIME_OUTPUT_FORMAT", "text")
    LOG_LEVEL = os.getenv("QPRIME_LOG_LEVEL", "WARNING")
    TIMING = _env_flag("QPRIME_TIMING")

    OUTPUT_FORMATS = ("text", "json", "dot")

    @classmethod
    def degree_guard_for(cls, m: int, n: int) -> int:
        """Configured guard, or 2 * (m + n) when unset"""
        return cls.DEGREE_GUARD if cls.DEGREE_GUARD > 0 else 2 * (m + n)
