"""
Configuration management for crclab.
"""

import os
import sys
from pathlib import Path
from typing import Dict, Any, Optional

from common_utils.config_manager import ConfigManager
from common_utils.parallel import get_thread_count

CONFIG_PATH_ENV_VAR = 'CRCLAB_CONFIG_PATH'

DEFAULT_COSET_TABLE_MAX_REDUNDANCY = 24
DEFAULT_GRAPH_MAX_REDUNDANCY = 20
DEFAULT_VIOLATION_CAP = 100


class Config:
    GUARDS_CONFIG_KEY = 'guards'
    REGULARITY_CONFIG_KEY = 'regularity'
    PARALLEL_CONFIG_KEY = 'parallel'
    OUTPUT_CONFIG_KEY = 'output'

    """
    Typed access to the crclab configuration.

    Every getter falls back to built-in defaults, so a Config without a
    backing file is fully usable.
    """

    def __init__(self, config_manager: Optional[ConfigManager] = None):
        """
        Initialize Config instance.

        Args:
            config_manager: Loaded ConfigManager, or None for built-in defaults
        """
        self._config_manager = config_manager

    def get_config(self) -> Dict[str, Any]:
        """
        Get loaded configuration.

        Returns:
            Dictionary containing configuration ({} when running on defaults)
        """
        if self._config_manager is None:
            return {}
        return self._config_manager.get_config()

    def _section(self, key: str) -> Dict[str, Any]:
        section = self.get_config().get(key, {})
        return section if isinstance(section, dict) else {}

    def get_guards_config(self) -> Dict[str, int]:
        """
        Get enumeration guards.

        Returns:
            Dictionary with coset_table_max_redundancy (bound on n-k for
            syndrome-space enumeration) and graph_max_redundancy (bound on
            n-k for explicit graphs)
        """
        guards = self._section(self.GUARDS_CONFIG_KEY)
        return {
            'coset_table_max_redundancy': int(guards.get('coset_table_max_redundancy', DEFAULT_COSET_TABLE_MAX_REDUNDANCY)),
            'graph_max_redundancy': int(guards.get('graph_max_redundancy', DEFAULT_GRAPH_MAX_REDUNDANCY)),
        }

    def get_regularity_config(self) -> Dict[str, int]:
        regularity = self._section(self.REGULARITY_CONFIG_KEY)
        return {
            'violation_cap': int(regularity.get('violation_cap', DEFAULT_VIOLATION_CAP)),
        }

    def get_parallel_config(self) -> Dict[str, int]:
        """
        Get parallelism settings.

        Returns:
            Dictionary with threads, already resolved against CRCLAB_THREADS
        """
        parallel = self._section(self.PARALLEL_CONFIG_KEY)
        configured = parallel.get('threads')
        return {
            'threads': get_thread_count(int(configured) if configured is not None else None),
        }

    def get_output_config(self) -> Dict[str, str]:
        """
        Get output configuration.

        Returns:
            Dictionary with output_dir and file patterns
        """
        output = self._section(self.OUTPUT_CONFIG_KEY)
        return {
            'output_dir': output.get('output_dir', './output'),
            'code_file_pattern': output.get('code_file_pattern', '{family}_{m}.code'),
            'graph_file_pattern': output.get('graph_file_pattern', '{family}_{m}.{ext}'),
        }


def _resolve_config_path(path: Optional[str]) -> Optional[str]:
    if path:
        return path
    env_path = os.getenv(CONFIG_PATH_ENV_VAR)
    if env_path:
        return env_path
    project_config = Path(__file__).parent.parent / 'config.yaml'
    if project_config.exists():
        return str(project_config)
    return None


# Default singleton instance
config_instance: Optional[Config] = None


def _get_default_config(path: Optional[str] = None) -> Config:
    global config_instance

    if config_instance is None or path is not None:
        resolved = _resolve_config_path(path)
        if resolved is None:
            config_instance = Config(None)
        else:
            print(f"Loading config from {resolved}", file=sys.stderr)
            config_instance = Config(ConfigManager(resolved))
    return config_instance
