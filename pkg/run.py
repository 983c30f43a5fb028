#!/usr/bin/env python3
"""Simple script to run the command line without installing the package."""
import sys

from diamkit.main import main

if __name__ == "__main__":
    sys.exit(main())
