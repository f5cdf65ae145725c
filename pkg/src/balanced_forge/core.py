"""Shared primitives: bit-indexed coalitions and exact combinatorial counts.

A coalition over players 1..n is an int bitmask with bit i-1 standing for
player i, so the canonical order of coalitions is plain numeric order and
player 1 is the least significant bit. Weights and worths elsewhere use
fractions.Fraction, which already keeps numerator/denominator reduced with
a positive denominator.
"""
from math import comb

MAX_PLAYERS = 20


def check_players(n: int) -> None:
    """Raise ValueError unless 1 <= n <= MAX_PLAYERS."""
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValueError("player count must be an int, got %r" % (n,))
    if not 1 <= n <= MAX_PLAYERS:
        raise ValueError("player count %d outside 1..%d" % (n, MAX_PLAYERS))


def full_mask(n: int) -> int:
    return (1 << n) - 1


def binomial(n: int, k: int) -> int:
    """C(n, k); zero when k > n or k < 0."""
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def rising_factorial(n: int, p: int) -> int:
    """n(n+1)...(n+p-1), exactly p factors; 1 when p = 0.

    The inline convention in the source text has p+1 factors, but its own
    worked numbers (3*4*5/3! = 10 from a 3-element ground set) force p
    factors; this is the convention used throughout counting.
    """
    out = 1
    for i in range(p):
        out *= n + i
    return out


def multiset_coefficient(m: int, p: int) -> int:
    """Number of p-multisets from m distinct items: C(m+p-1, p)."""
    if p == 0:
        return 1
    if m <= 0:
        return 0
    return comb(m + p - 1, p)


def coalitions_of(n: int) -> list:
    """All 2^n - 1 nonempty coalitions in ascending canonical order."""
    check_players(n)
    return list(range(1, 1 << n))


def players_of(mask: int) -> tuple:
    """1-based player ids of a coalition, ascending."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def coalition(players) -> int:
    """Bitmask of an iterable of 1-based player ids."""
    m = 0
    for p in players:
        if not 1 <= p <= MAX_PLAYERS:
            raise ValueError("player id %r outside 1..%d" % (p, MAX_PLAYERS))
        m |= 1 << (p - 1)
    return m


def format_coalition(mask: int) -> str:
    """Canonical text form, e.g. {1,3,4}."""
    return "{%s}" % ",".join(str(p) for p in players_of(mask))


def parse_coalition(text: str, n: int = 0) -> int:
    """Parse {1,3,4} (spaces tolerated) into a bitmask.

    With n > 0, player ids above n are rejected. The empty form {} parses
    to 0; callers that require nonempty coalitions must check.
    """
    s = text.strip()
    if not (s.startswith("{") and s.endswith("}")):
        raise ValueError("coalition must be brace-delimited: %r" % text)
    body = s[1:-1].strip()
    if not body:
        return 0
    mask = 0
    for part in body.split(","):
        p = int(part.strip())
        if p < 1 or (n and p > n) or p > MAX_PLAYERS:
            raise ValueError("player id %d out of range in %r" % (p, text))
        if mask >> (p - 1) & 1:
            raise ValueError("duplicate player %d in %r" % (p, text))
        mask |= 1 << (p - 1)
    return mask
