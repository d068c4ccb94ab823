"""Configuration package: table generation settings"""
from .config_manager import TableConfigManager

__all__ = [
    'TableConfigManager'
]
