"""
crc_lab: constructions and exhaustive verification of completely regular
binary codes C^(m), C^[m] and their coset graphs.
"""

__version__ = "0.1.0"
