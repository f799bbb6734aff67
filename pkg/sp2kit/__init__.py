"""sp2kit: Sp(2) matrix decomposition, Wigner normal forms and transfer-matrix powers."""

__version__ = "0.1.0"
