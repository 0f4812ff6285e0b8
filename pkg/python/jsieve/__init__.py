"""jsieve - blowup-tree sieve for plane polynomial map counterexample configurations."""

__version__ = "0.1.0"

from jsieve.engine import SieveEngine

__all__ = ["SieveEngine"]
