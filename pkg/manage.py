#!/usr/bin/env python
"""Command-line entry point for the TwoQubit management commands"""
# Standard Library
import os
import sys


def main():
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "config.settings.local")
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "Django is not importable. Install the pinned stack with "
            "`pip install -r requirements/local.txt` inside your virtual environment."
        ) from exc
    execute_from_command_line(sys.argv)


if __name__ == "__main__":
    main()
