"""
qmonogamy: Hamming-weight monogamy and polygamy bounds for quantum correlations
"""

__version__ = "0.1"
