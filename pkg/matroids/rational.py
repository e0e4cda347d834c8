from fractions import Fraction
from numbers import Rational

from matroids.errors import InvalidInputError


def to_rational(value):
    """
    Exact conversion of "p/q", "p" or an int into a Fraction.
    Floats are refused, they would break equality of weights.
    """

    if isinstance(value, bool):
        raise InvalidInputError("boolean is not a rational: {!r}".format(value))
    if isinstance(value, Rational):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as ex:
            raise InvalidInputError("bad rational {!r}: {}".format(value, ex)) from ex
    raise InvalidInputError("expected a rational as 'p/q' string, got {!r}".format(value))


def to_rationals(values):
    return tuple(to_rational(v) for v in values)


def format_rational(x):
    return str(Fraction(x))


def is_decimal(x):
    # finite decimal expansion iff the denominator has no prime factor but 2 and 5
    q = Fraction(x).denominator
    for p in (2, 5):
        while q % p == 0:
            q //= p
    return q == 1
