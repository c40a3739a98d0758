#!/usr/bin/env python
"""
Run the qtsym command line from a source checkout
"""

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from qtsym.cli import main    # noqa: E402

if __name__ == '__main__':
    main()
