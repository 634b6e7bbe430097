from setuptools import setup

# This file is only needed for tools that still expect it.
# Configuration is in pyproject.toml.
setup()
