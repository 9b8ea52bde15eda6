"""qsuper: exact computer algebra for quantum superalgebras."""

__version__ = "0.1.0"
