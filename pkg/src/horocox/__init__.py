"""Cox rings of complete rational complexity-one horospherical varieties."""

__version__ = "0.1.0"
