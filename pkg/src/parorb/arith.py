"""Small exact-arithmetic helpers: divisors, Möbius values, rational I/O.

Everything here works on plain ints and fractions.Fraction; no floats.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError


def divisors(n: int) -> list[int]:
    """All positive divisors of n, sorted ascending.

    >>> divisors(12)
    [1, 2, 3, 4, 6, 12]
    """
    if n < 1:
        raise ValueError("divisors() needs a positive integer, got %r" % (n,))
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def prime_factors(n: int) -> dict[int, int]:
    """Prime factorization as a {prime: exponent} map (trial division)."""
    if n < 1:
        raise ValueError("prime_factors() needs a positive integer, got %r" % (n,))
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def mobius(n: int) -> int:
    """Möbius function: (-1)^k on squarefree n with k prime factors, else 0.

    >>> [mobius(n) for n in range(1, 11)]
    [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]
    """
    factors = prime_factors(n)
    if any(e > 1 for e in factors.values()):
        return 0
    return -1 if len(factors) % 2 else 1


def is_squarefree(n: int) -> bool:
    """True when no prime square divides n."""
    return all(e == 1 for e in prime_factors(n).values())


def is_prime(n: int) -> bool:
    return n >= 2 and list(prime_factors(n)) == [n]


# --- exact rational serialization ------------------------------------------

def parse_rational(text: str) -> Fraction:
    """Parse a "p/q" (or bare integer) string into an exact Fraction.

    Raises ParseError on anything that is not an exact rational literal.
    """
    if not isinstance(text, str):
        raise ParseError("rational must be a string like \"1/3\", got %r" % (text,))
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError("bad rational literal %r: %s" % (text, exc)) from None
    return value


def format_rational(value: Fraction) -> str:
    """Render a Fraction as the canonical "p/q" string (q always printed)."""
    value = Fraction(value)
    return "%d/%d" % (value.numerator, value.denominator)
