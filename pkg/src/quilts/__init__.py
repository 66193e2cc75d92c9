"""Exhaustive enumeration of prime dissections of integer-sided squares.

A dissection cuts an n-by-n square into N integer-sided squares; it is
prime when the piece sizes are coprime.  The package enumerates every
prime dissection of a given order by generating plane triangulations,
layering two-coloured edge directions on them, and solving the linear
system each structure induces; an exact-cover recount over unit cells
confirms the results side by side.
"""

from .dissection import Dissection, canonicalize, is_prime
from .pipeline import OrderResult, count_table, run_order, run_orders
from .sequences import CountTable, NotDetermined, build_table

__all__ = [
    "CountTable",
    "Dissection",
    "NotDetermined",
    "OrderResult",
    "build_table",
    "canonicalize",
    "count_table",
    "is_prime",
    "run_order",
    "run_orders",
]
