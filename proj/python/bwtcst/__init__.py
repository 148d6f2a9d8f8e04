"""LCP, PLCP, suffix-tree topology and BWT merging from a BWT."""

from ._bwtcst import bps, build_bwt, lcp, merge, naive_lcp, plcp, st_intervals

__all__ = ["bps", "build_bwt", "lcp", "merge", "naive_lcp", "plcp", "st_intervals"]
