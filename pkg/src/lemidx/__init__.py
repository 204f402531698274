"""BWT-runs compressed string index with constant-time PLCP/phi queries
and long locally-maximal-exact-match enumeration."""

__version__ = "0.1.0"
