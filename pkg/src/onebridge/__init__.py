from .braids import AllowableTuple, Braid, Slope
from .classify import fillings_of, filling_slopes, knots_for_slope, tuple_to_braid

__all__ = ["AllowableTuple", "Braid", "Slope", "fillings_of", "filling_slopes", "knots_for_slope", "tuple_to_braid"]
