"""Exact, self-contained certificate that the 3-class Q-polynomial association
scheme on the blocks of the Witt 4-(11,5,1) design is determined by its
parameters."""

__version__ = "0.1.0"
