#!/usr/bin/env python3
"""
Configuration module for the surface client.
Output mode and trace display; command-line flags override these.
"""
import os
from typing import Dict, Any
from pathlib import Path
from dotenv import load_dotenv

OUTPUT_MODES = ('formatted', 'machine')


def load_client_config() -> Dict[str, Any]:
    """Load client configuration from client/.env or environment variables."""
    env_path = Path(__file__).parent.parent / '.env'
    if env_path.exists():
        load_dotenv(dotenv_path=env_path)

    output = os.getenv('SURFACE_OUTPUT', 'formatted').strip().lower()
    if output not in OUTPUT_MODES:
        raise ValueError(f"❌ SURFACE_OUTPUT must be one of {', '.join(OUTPUT_MODES)}, got {output!r}")

    return {
        'output': output,
        'show_trace': os.getenv('SURFACE_SHOW_TRACE', 'false').strip().lower() in ('1', 'true', 'yes'),
        'timestamp': os.getenv('SURFACE_TIMESTAMP', 'false').strip().lower() in ('1', 'true', 'yes'),
        'log_level': os.getenv('LOG_LEVEL', 'WARNING').upper(),
    }

