#!/usr/bin/env python3
"""
Configuration for the surface obstruction engine.
Reads bounds for the coset enumerator, the quotient closure and the
theorem sweep from the environment (optionally via a .env file).
"""
import os
import logging
from typing import Dict, Any
from pathlib import Path
from dotenv import load_dotenv

logger = logging.getLogger(__name__)

DEFAULTS = {
    'sweep_bound': 10,
    'max_cosets': 100_000,
    'max_quotient_order': 100_000,
}


def load_config() -> Dict[str, Any]:
    """Loads, validates, and returns configuration from environment variables."""
    # .env in the working directory wins over server/.env
    env_path = Path('.env')
    if not env_path.exists():
        env_path = Path(__file__).parent / '.env'

    if env_path.exists():
        load_dotenv(dotenv_path=env_path)
        logger.info(f"✅ Loaded .env file from: {env_path.resolve()}")
    else:
        logger.debug("No .env file found, using shell environment and defaults")

    config = {
        'sweep_bound': _int_setting('SURFACE_SWEEP_BOUND', DEFAULTS['sweep_bound']),
        'max_cosets': _int_setting('SURFACE_MAX_COSETS', DEFAULTS['max_cosets']),
        'max_quotient_order': _int_setting('SURFACE_MAX_QUOTIENT_ORDER', DEFAULTS['max_quotient_order']),
        'log_level': os.getenv('LOG_LEVEL', 'INFO').upper(),
    }

    log_level = getattr(logging, config['log_level'], logging.INFO)
    logging.getLogger().setLevel(log_level)

    _validate_config(config)
    _log_config(config)
    return config


def _int_setting(name: str, default: int) -> Any:
    raw = os.getenv(name)
    if raw is None or raw.strip() == '':
        return default
    try:
        return int(raw)
    except ValueError:
        return raw


def _validate_config(config: Dict[str, Any]):
    """Every bound must be a positive integer."""
    bad = [key for key in DEFAULTS if not isinstance(config[key], int) or config[key] < 1]
    if bad:
        error_msg = (f"❌ Invalid configuration: {', '.join(f'{k}={config[k]!r}' for k in bad)}. "
                     "Bounds must be positive integers.")
        logger.error(error_msg)
        raise ValueError(error_msg)


def _log_config(config: Dict[str, Any]):
    logger.info("🔧 Engine configuration loaded:")
    logger.info(f"  - 🔁 Theorem sweep bound: {config['sweep_bound']}")
    logger.info(f"  - 🔢 Max cosets: {config['max_cosets']}")
    logger.info(f"  - 🧮 Max quotient order: {config['max_quotient_order']}")
