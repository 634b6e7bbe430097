import os
import json
import logging
from typing import Any, Optional

logger = logging.getLogger(__name__)

# --- Constants ---
DEFAULT_CONFIG_FILENAME = "hybrid_swap_config.json"

# --- Path Helpers ---

def get_package_dir() -> str:
    """
    Gets the absolute path to the hybrid_swap package directory.
    Works whether the package is installed or run from source.
    """
    # __file__ is something like /path/to/src/hybrid_swap/utils/common.py
    return os.path.abspath(os.path.dirname(os.path.dirname(__file__)))

def is_installed_package() -> bool:
    """Determine if this is running as an installed package rather than from a source checkout."""
    package_dir = get_package_dir()
    return 'site-packages' in package_dir or 'dist-packages' in package_dir

def get_project_root() -> str:
    """
    Gets the absolute path to the project root directory.
    - If run from a source checkout, returns the directory containing src/
    - If installed, returns the directory where the command was invoked
    """
    if is_installed_package():
        return os.getcwd()

    package_dir = get_package_dir()
    if os.path.basename(os.path.dirname(package_dir)) == 'src':
        return os.path.dirname(os.path.dirname(package_dir))
    return os.path.dirname(package_dir)

def get_default_config_path() -> str:
    """Gets the absolute path to hybrid_swap_config.json in the project root."""
    return os.path.join(get_project_root(), DEFAULT_CONFIG_FILENAME)

def get_default_dotenv_path() -> str:
    """Gets the absolute path to the default .env file in the project root."""
    return os.path.join(get_project_root(), '.env')

# --- File I/O Helpers ---

def ensure_parent_dir(file_path: str) -> None:
    dir_path = os.path.dirname(file_path)
    if dir_path:
        os.makedirs(dir_path, exist_ok=True)

def read_json_file(file_path: str) -> Optional[Any]:
    """Reads a JSON file and returns its content, or None on error."""
    if not os.path.exists(file_path):
        logger.debug(f"JSON file not found at: {file_path}")
        return None
    try:
        with open(file_path, 'r') as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        logger.error(f"Error decoding JSON from '{file_path}': {e}")
        return None
    except OSError as e:
        logger.error(f"Error reading file '{file_path}': {e}")
        return None

def write_json_file(file_path: str, data: Any) -> bool:
    """Writes data to a JSON file, returns True on success, False on error."""
    try:
        ensure_parent_dir(file_path)
        with open(file_path, 'w') as f:
            json.dump(data, f, indent=2)
        logger.info(f"Successfully wrote JSON data to {file_path}")
        return True
    except (OSError, TypeError) as e:
        logger.error(f"Error writing JSON to '{file_path}': {e}")
        return False
