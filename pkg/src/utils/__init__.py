# Utilities module initialization
from .logger import setup_logging

__all__ = ['setup_logging']
