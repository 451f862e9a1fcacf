"""Independent-set counting with the Kleitman–Winston method, with exact oracles."""

__version__ = "0.1.0"
