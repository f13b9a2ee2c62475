"""Run the command-line interface as ``python -m hamrel``."""

from .cli import main

main()
