"""Configuration module for qprime"""

from .settings import Settings

__all__ = ["Settings"]
