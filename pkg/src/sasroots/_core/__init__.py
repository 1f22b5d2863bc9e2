"""Numerical kernels: compiled extension + pure-Python fallback.

The hot loops (polynomial/Jacobian evaluation, homotopy path tracking,
interval polynomial evaluation) live here in two interchangeable
implementations.  ``sasroots.backend`` picks one at import time.
"""
