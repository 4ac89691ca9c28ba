"""
Process entry point: python main.py verify Cm 6 --all
"""

import sys

from crc_lab.cli import main


if __name__ == "__main__":
    sys.exit(main())
