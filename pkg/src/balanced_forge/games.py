"""TU games, the core, and its nonemptiness by two independent routes.

core_lp minimizes total payment against the proper-coalition constraints
(solved exactly through the dual over balanced weight vectors, whose
vertices are minimal balanced collections, so an empty core hands back a
maximally violating collection for free). core_mbc instead scans a
catalog of minimal balanced collections for an efficiency above v(N),
the sharp criterion. The two must agree on every game.
"""
import json
from fractions import Fraction

from .core import check_players, full_mask, format_coalition, parse_coalition
from .balanced import BalancedCollection, efficiency
from ._simplex import simplex_min, solve_square

MASK64 = (1 << 64) - 1


def splitmix64(seed):
    """Yield the splitmix64 stream: 64-bit mixing, stable across platforms.

    x += 0x9E3779B97F4A7C15; z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB; output z ^ (z >> 31).
    """
    x = seed & MASK64
    while True:
        x = (x + 0x9E3779B97F4A7C15) & MASK64
        z = x
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        yield z ^ (z >> 31)


class Game:
    """Worth table over all 2^n coalitions, v(empty) = 0, exact rationals."""

    __slots__ = ("n", "v")

    def __init__(self, n, worths):
        check_players(n)
        table = [Fraction(0)] * (1 << n)
        items = dict(worths)
        empty = items.pop(0, None)
        if empty not in (None, 0) and Fraction(empty) != 0:
            raise ValueError("v(empty) must be 0, got %r" % (empty,))
        if len(items) != (1 << n) - 1:
            raise ValueError(
                "need worths for all %d nonempty coalitions, got %d"
                % ((1 << n) - 1, len(items))
            )
        for mask, val in items.items():
            m = int(mask)
            if not 1 <= m <= full_mask(n):
                raise ValueError("coalition %r outside players 1..%d" % (mask, n))
            table[m] = Fraction(val)
        self.n = n
        self.v = table

    def worth(self, mask):
        return self.v[mask]

    def __eq__(self, other):
        return isinstance(other, Game) and self.n == other.n and self.v == other.v

    def to_json(self):
        return json.dumps(
            {
                "n": self.n,
                "v": {
                    format_coalition(m): _num_or_str(self.v[m])
                    for m in range(1, 1 << self.n)
                },
            },
            separators=(",", ":"),
        )


def _num_or_str(f):
    return int(f) if f.denominator == 1 else str(f)


def game_from_json(text):
    obj = json.loads(text)
    n = obj["n"]
    check_players(n)
    vs = {}
    for key, val in obj["v"].items():
        mask = parse_coalition(key, n)
        if mask == 0:
            raise ValueError("the empty coalition does not belong in a game file")
        if mask in vs:
            raise ValueError("coalition %s appears twice" % key)
        vs[mask] = Fraction(str(val)) if isinstance(val, str) else Fraction(val)
    return Game(n, vs)


def random_game(n, seed, magnitude=100):
    """Integer worths uniform on 0..magnitude from a splitmix64 stream.

    Coalitions are filled in ascending canonical order, one draw each, so
    a (n, seed, magnitude) triple names the same game everywhere.
    """
    check_players(n)
    if n > 10:
        raise ValueError("random games capped at n <= 10, got %d" % n)
    if magnitude < 0:
        raise ValueError("magnitude must be >= 0")
    gen = splitmix64(seed)
    worths = {m: next(gen) % (magnitude + 1) for m in range(1, 1 << n)}
    return Game(n, worths)


class CoreVerdict:
    """Outcome of a core test plus its exact certificate.

    nonempty -> payment is a tuple of n rationals with sum v(N) meeting
    every coalition's worth; empty -> collection is a minimal balanced
    collection whose efficiency exceeds v(N).
    """

    __slots__ = ("nonempty", "payment", "collection", "efficiency")

    def __init__(self, nonempty, payment=None, collection=None, eff=None):
        self.nonempty = nonempty
        self.payment = payment
        self.collection = collection
        self.efficiency = eff

    def __repr__(self):
        if self.nonempty:
            return "CoreVerdict(nonempty, x=%s)" % (self.payment,)
        return "CoreVerdict(empty, %s, efficiency=%s)" % (
            self.collection.to_text(),
            self.efficiency,
        )


def core_lp(game):
    """Exact LP core test: min sum(x) under the proper-coalition constraints.

    The optimum z* never needs the grand coalition's row: the core is
    nonempty iff z* <= v(N), and then the optimal vertex plus an equal
    share of the surplus v(N) - z* per player lies in the core. When
    z* > v(N) the optimal dual vertex is a maximally violating minimal
    balanced collection; both certificates fall out of one solve.
    """
    n = game.n
    if n > 12:
        raise ValueError("core_lp capped at n <= 12, got %d" % n)
    vN = game.v[full_mask(n)]
    if n == 1:
        return CoreVerdict(True, payment=(vN,))
    proper = list(range(1, full_mask(n)))
    # dual of the payment LP: max sum v(S) y_S over balanced weights y
    a_rows = [[1 if s >> i & 1 else 0 for s in proper] for i in range(n)]
    b_vec = [1] * n
    cost = [-game.v[s] for s in proper]
    singleton_basis = [(1 << i) - 1 for i in range(n)]
    res = simplex_min(a_rows, b_vec, cost, basis=singleton_basis)
    if res.status != "optimal":
        raise RuntimeError("dual core LP failed: %s" % res.status)
    zstar = -res.objective
    if zstar > vN:
        weights = {proper[j]: res.x[j] for j in range(len(proper)) if res.x[j] > 0}
        bc = BalancedCollection(n, weights)
        return CoreVerdict(False, collection=bc, eff=zstar)
    rows = [[1 if proper[j] >> i & 1 else 0 for i in range(n)] for j in res.basis]
    rhs = [game.v[proper[j]] for j in res.basis]
    x = solve_square(rows, rhs)
    surplus = (vN - zstar) / n
    payment = tuple(xi + surplus for xi in x)
    return CoreVerdict(True, payment=payment)


def core_mbc(game, catalog):
    """Sharp criterion: scan minimal balanced collections for a violation.

    Nonempty iff every collection's efficiency is at most v(N); the
    maximally violating collection (ties broken canonically) certifies
    emptiness, and witness construction for the nonempty case is
    delegated to core_lp.
    """
    if catalog.n != game.n:
        raise ValueError(
            "catalog for n=%d used on a game with n=%d" % (catalog.n, game.n)
        )
    vN = game.v[full_mask(game.n)]
    worst = None
    worst_eff = None
    for bc in catalog:
        e = efficiency(bc, game)
        if e > vN and (worst_eff is None or e > worst_eff):
            worst = bc
            worst_eff = e
    if worst is not None:
        return CoreVerdict(False, collection=worst, eff=worst_eff)
    return core_lp(game)
