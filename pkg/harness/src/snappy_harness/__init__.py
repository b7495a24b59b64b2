"""Volume verification harness over exported planar-diagram files."""

__version__ = "0.1.0"
