import typer
import logging
import os
from dotenv import load_dotenv
from typing import Optional

from hybrid_swap.utils.common import get_default_dotenv_path

# --- Logging Setup ---
# Levels: DEBUG=10, INFO=20, WARNING=30, ERROR=40, CRITICAL=50
log_level_str = os.getenv("LOG_LEVEL", "WARNING").upper()
log_level = getattr(logging, log_level_str, logging.WARNING)
logging.basicConfig(level=log_level, format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)

_dotenv_path = get_default_dotenv_path()

def load_env(env_path: Optional[str] = None):
    """Loads a .env file, preferring an explicit path over the project default."""
    path = env_path or _dotenv_path
    if os.path.exists(path):
        loaded = load_dotenv(dotenv_path=path, override=True)
        if loaded:
            logger.info(f"Loaded environment variables from: {path} (override=True)")
        else:
            logger.warning(f"Attempted to load .env from {path}, but it might be empty.")
    elif env_path:
        logger.warning(f"Specified --env file not found: {env_path}. Using default environment.")
    else:
        logger.info(f"Default .env file not found at {path}. Using default environment.")

# Initial load using default path
load_env()

# --- Typer App Initialization ---
app = typer.Typer(
    name="hybrid-swap",
    help="Simulate hybrid DV-CV entanglement swapping with photon loss.",
    add_completion=False
)

# --- Global Options Callback ---
@app.callback()
def main_options(
    ctx: typer.Context,
    verbose: int = typer.Option(0, "--verbose", "-v", count=True, help="Increase verbosity level (-v for INFO, -vv for DEBUG)."),
    env: Optional[str] = typer.Option(None, "--env", help=f"Path to .env file (overrides default {_dotenv_path}).")
):
    """
    hybrid-swap main options.
    """
    if env:
        load_env(env_path=env)

    if verbose == 1:
        effective_log_level = logging.INFO
    elif verbose >= 2:
        effective_log_level = logging.DEBUG
    else:
        effective_log_level = getattr(logging, os.getenv("LOG_LEVEL", "WARNING").upper(), logging.WARNING)

    logging.getLogger().setLevel(effective_log_level)
    logging.getLogger('hybrid_swap').setLevel(effective_log_level)
    logger.info(f"Logging level set to {logging.getLevelName(effective_log_level)}")

    ctx.ensure_object(dict)
    ctx.obj["verbose"] = verbose
    ctx.obj["env_path"] = env


# --- Register Commands ---
from .commands.point import point_command
from .commands.sweep import sweep_command
from .commands.verify import verify_command
from .commands.herald import herald_command

app.command("point")(point_command)
app.command("sweep")(sweep_command)
app.command("verify")(verify_command)
app.command("herald")(herald_command)


if __name__ == "__main__":
    app()
