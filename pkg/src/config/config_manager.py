"""
Table Configuration Manager Module
Loads table generation settings from YAML, falling back to the INI file
"""
import configparser
import logging
import os
from typing import Any, Dict

import yaml

from ..errors import ConfigurationError

logger = logging.getLogger(__name__)


class TableConfigManager:
    """Reads the [TABELAS] settings used by the table generator"""

    DEFAULTS: Dict[str, Any] = {
        'max_spin': '10',
        'mode': 'super',
        'classify': False,
        'output_dir': 'output',
        'workers': 1,
        'excel': False,
        'log_level': 'INFO',
        'chunk_size': 1,
    }

    BOOLEAN_KEYS = ('classify', 'excel')
    INTEGER_KEYS = ('workers', 'chunk_size')

    def __init__(self, config_path: str = os.path.join('config', 'tables.yaml'),
                 fallback_config_path: str = os.path.join('dados', 'config.ini')):
        self.config_path = config_path
        self.fallback_config_path = fallback_config_path

    def load_config(self) -> Dict[str, Any]:
        """Merged settings: file values over defaults"""
        config = dict(self.DEFAULTS)
        config.update(self._read_file())
        return self._normalize(config)

    def _read_file(self) -> Dict[str, Any]:
        # Try YAML config first
        if os.path.exists(self.config_path):
            try:
                with open(self.config_path, 'r', encoding='utf-8') as f:
                    data = yaml.safe_load(f) or {}
            except (OSError, yaml.YAMLError) as e:
                raise ConfigurationError(f"Cannot read {self.config_path}: {e}")
            logger.debug(f"Configuration loaded from {self.config_path}")
            section = data.get('tables', {}) if isinstance(data, dict) else None
            if not isinstance(section, dict):
                raise ConfigurationError(f"Section 'tables' in {self.config_path} must be a mapping")
            return section

        # Fallback to ini config
        if os.path.exists(self.fallback_config_path):
            parser = configparser.ConfigParser()
            try:
                parser.read(self.fallback_config_path, encoding='utf-8')
            except configparser.Error as e:
                raise ConfigurationError(f"Cannot read {self.fallback_config_path}: {e}")
            logger.debug(f"Configuration loaded from {self.fallback_config_path}")
            if 'TABELAS' in parser:
                return dict(parser['TABELAS'])

        logger.debug("No configuration file found, using defaults")
        return {}

    def _normalize(self, config: Dict[str, Any]) -> Dict[str, Any]:
        unknown = set(config) - set(self.DEFAULTS)
        if unknown:
            raise ConfigurationError(f"Unknown configuration keys: {', '.join(sorted(unknown))}")

        for key in self.BOOLEAN_KEYS:
            config[key] = self._as_bool(key, config[key])
        for key in self.INTEGER_KEYS:
            try:
                config[key] = int(config[key])
            except (TypeError, ValueError):
                raise ConfigurationError(f"'{key}' must be an integer, got {config[key]!r}")
            if config[key] < 1:
                raise ConfigurationError(f"'{key}' must be at least 1, got {config[key]}")

        config['max_spin'] = str(config['max_spin'])
        config['mode'] = str(config['mode']).lower()
        config['output_dir'] = str(config['output_dir'])
        config['log_level'] = str(config['log_level']).upper()
        return config

    @staticmethod
    def _as_bool(key: str, value: Any) -> bool:
        if isinstance(value, bool):
            return value
        text = str(value).strip().lower()
        if text in ('1', 'true', 'yes', 'on', 'sim'):
            return True
        if text in ('0', 'false', 'no', 'off', 'nao', 'não', ''):
            return False
        raise ConfigurationError(f"'{key}' must be a boolean, got {value!r}")
