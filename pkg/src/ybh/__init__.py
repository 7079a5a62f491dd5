"""Yang-Baxter homology of the normalized Jones R-matrix over Q[y, y^-1]."""

__version__ = "0.1.0"
