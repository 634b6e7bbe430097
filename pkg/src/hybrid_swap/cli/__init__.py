# Init file for the cli package

# Import the main Typer app object to make it accessible at the package level
from .main import app

__all__ = ["app"]
