#!/usr/bin/env python3
"""
Entry point script for qdeform
"""

import sys

from src.qdeform.main import main

if __name__ == "__main__":
    sys.exit(main())
