"""Exact rational scalar used throughout the package.

gmpy2.mpq is noticeably faster than fractions.Fraction on the large
divided-difference computations; fall back to Fraction when gmpy2 is
missing so the package stays pure-stdlib-capable.
"""

try:
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover
    from fractions import Fraction as Q


def as_int(x) -> int:
    """Convert an integral rational to int, raising if it is not integral."""
    num, den = x.numerator, x.denominator
    if den != 1:
        raise ValueError(f"expected an integer, got {x}")
    return int(num)


def is_integer(x) -> bool:
    return x.denominator == 1
