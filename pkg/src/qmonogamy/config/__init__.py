"""
Configuration package
"""

from .settings import NumericsConfig, NUMERICS

__all__ = ['NumericsConfig', 'NUMERICS']
