"""Allow running the toolkit with python -m polyharm."""

from .cli import run

run()
