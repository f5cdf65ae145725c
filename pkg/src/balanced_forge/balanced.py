"""Balanced collections of coalitions and their weight systems.

Balancedness of a collection B is decided exactly by the LP

    maximize t  subject to  sum(S in B, S containing i) lambda(S) = 1,
                            lambda(S) >= t,

solved in rational arithmetic: B is balanced iff the optimum t* is > 0,
and the returned weights are the optimal vertex (a max-min-weight
solution) reached by Bland's rule, so outputs are deterministic.
Minimality has a fast route (balanced + linearly independent incidence
vectors, hence unique weights) and a literal oracle (no proper
subcollection balanced) kept around to guard the equivalence.
"""
from fractions import Fraction
from itertools import combinations
from math import lcm

from .core import check_players, full_mask, format_coalition, parse_coalition
from .hypergraph import Hypergraph
from ._simplex import simplex_min, rank_of_masks

_balanced_cache = {}


def _checked_masks(n, coalitions):
    check_players(n)
    masks = sorted(int(s) for s in coalitions)
    if not masks:
        raise ValueError("collection must be nonempty")
    full = full_mask(n)
    for s in masks:
        if s <= 0 or s > full:
            raise ValueError("coalition %r outside players 1..%d" % (s, n))
    for a, b in zip(masks, masks[1:]):
        if a == b:
            raise ValueError("duplicate coalition %s" % format_coalition(a))
    return tuple(masks)


def find_balancing_weights(n, coalitions):
    """Strictly positive exact weights for the collection, or None.

    None covers both failure modes: the per-player equations have no
    nonnegative solution at all, or every solution puts weight 0 on some
    coalition (optimum t* <= 0).
    """
    masks = _checked_masks(n, coalitions)
    cover = 0
    for s in masks:
        cover |= s
    if cover != full_mask(n):
        return None
    m = len(masks)
    # variables: mu_S per coalition, then t+ and t-; lambda = mu + t
    a_rows = []
    b_vec = []
    for i in range(n):
        d = sum(1 for s in masks if s >> i & 1)
        row = [1 if s >> i & 1 else 0 for s in masks]
        row.append(d)
        row.append(-d)
        a_rows.append(row)
        b_vec.append(1)
    cost = [0] * m + [-1, 1]
    res = simplex_min(a_rows, b_vec, cost)
    if res.status != "optimal":
        return None
    t = res.x[m] - res.x[m + 1]
    if t <= 0:
        return None
    return {s: res.x[j] + t for j, s in enumerate(masks)}


def is_balanced(n, coalitions):
    masks = _checked_masks(n, coalitions)
    key = (n, masks)
    hit = _balanced_cache.get(key)
    if hit is None:
        hit = find_balancing_weights(n, masks) is not None
        _balanced_cache[key] = hit
    return hit


def is_minimal_balanced(n, coalitions):
    """Balanced with linearly independent incidence vectors.

    Independence makes the weight system unique, which is equivalent to
    no proper subcollection being balanced; is_minimal_balanced_oracle
    checks that literal definition and the two are tested against each
    other exhaustively.
    """
    masks = _checked_masks(n, coalitions)
    if rank_of_masks(masks, n) != len(masks):
        return False
    return is_balanced(n, masks)


def is_minimal_balanced_oracle(n, coalitions):
    """Literal minimality: balanced and no proper subcollection balanced.

    Exponential in the collection size, so player counts above 5 are
    rejected. Subsets are scanned smallest-first so that non-minimal
    inputs exit on the first balanced subcollection found.
    """
    if n > 5:
        raise ValueError("oracle limited to n <= 5, got n=%d" % n)
    masks = _checked_masks(n, coalitions)
    if not is_balanced(n, masks):
        return False
    for size in range(1, len(masks)):
        for sub in combinations(masks, size):
            if is_balanced(n, sub):
                return False
    return True


class BalancedCollection:
    """A balanced collection with its exact weight map.

    Construction validates everything: distinct nonempty coalitions in
    canonical order, strictly positive weights, and the per-player sum
    identity. Equality and hashing cover the weights; catalogs
    deduplicate on .key (the coalition sets alone), which is enough for
    minimal collections since their weights are unique.
    """

    __slots__ = ("n", "coalitions", "weights")

    def __init__(self, n, weights):
        items = dict(weights)
        masks = _checked_masks(n, items.keys())
        w = {}
        for s in masks:
            f = Fraction(items[s])
            if f <= 0:
                raise ValueError(
                    "weight of %s must be positive, got %s" % (format_coalition(s), f)
                )
            w[s] = f
        for i in range(n):
            total = sum((w[s] for s in masks if s >> i & 1), Fraction(0))
            if total != 1:
                raise ValueError(
                    "player %d weight sum is %s, expected 1" % (i + 1, total)
                )
        self.n = n
        self.coalitions = masks
        self.weights = w

    @classmethod
    def _trusted(cls, n, coalitions, weights):
        """Skip validation; for enumeration kernels whose output is exact.

        The kernels emit weights straight from exact elimination, so the
        per-player identity holds by construction; revalidating 200k+
        collections at n=6 would double the enumeration time. Tests
        re-validate full catalogs for n <= 5 and samples beyond.
        """
        self = object.__new__(cls)
        self.n = n
        self.coalitions = tuple(coalitions)
        self.weights = dict(weights)
        return self

    @property
    def key(self):
        return (self.n, self.coalitions)

    def __eq__(self, other):
        return (
            isinstance(other, BalancedCollection)
            and self.n == other.n
            and self.coalitions == other.coalitions
            and self.weights == other.weights
        )

    def __hash__(self):
        return hash((self.n, self.coalitions, tuple(self.weights[s] for s in self.coalitions)))

    def __repr__(self):
        return "BalancedCollection(%d, %s)" % (self.n, self.to_text())

    def to_text(self):
        body = ", ".join(
            "%s:%s" % (format_coalition(s), self.weights[s]) for s in self.coalitions
        )
        return "n=%d; [%s]" % (self.n, body)


def parse_collection(text):
    """Parse `n=3; [{1,2}:1/2, {1,3}:1/2, {2,3}:1/2]`."""
    s = text.strip()
    left, _, right = s.partition(";")
    left = left.strip()
    if not left.startswith("n="):
        raise ValueError("collection line must start with n=: %r" % text)
    n = int(left[2:])
    right = right.strip()
    if not (right.startswith("[") and right.endswith("]")):
        raise ValueError("missing [...] body in %r" % text)
    body = right[1:-1].strip()
    if not body:
        raise ValueError("empty collection in %r" % text)
    weights = {}
    depth = 0
    start = 0
    parts = []
    for i, ch in enumerate(body):
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append(body[start:i])
            start = i + 1
    parts.append(body[start:])
    for part in parts:
        coal, sep, frac = part.strip().rpartition(":")
        if not sep:
            raise ValueError("missing weight in %r" % part)
        mask = parse_coalition(coal.strip(), n)
        if mask == 0:
            raise ValueError("empty coalition in %r" % text)
        weights[mask] = Fraction(frac.strip())
    return BalancedCollection(n, weights)


def from_regular_hypergraph(h):
    """Weights = edge multiplicity / regularity; needs a proper regular H."""
    if not h.is_proper:
        raise ValueError("hypergraph must be proper (spanning, no empty edges)")
    k = h.regularity()
    if k is None:
        raise ValueError("hypergraph is not regular")
    mult = {}
    for e in h.edges:
        mult[e] = mult.get(e, 0) + 1
    return BalancedCollection(h.n, {e: Fraction(c, k) for e, c in mult.items()})


def to_regular_hypergraph(b):
    """Inverse of from_regular_hypergraph: k = lcm of weight denominators."""
    k = lcm(*(b.weights[s].denominator for s in b.coalitions))
    edges = []
    for s in b.coalitions:
        edges.extend([s] * int(b.weights[s] * k))
    return Hypergraph(b.n, edges)


def efficiency(b, game):
    """Weighted sum of worths, sum(lambda(S) * v(S)).

    game is anything with a worth(mask) method over the same players.
    """
    if getattr(game, "n", b.n) != b.n:
        raise ValueError("collection on %d players, game on %d" % (b.n, game.n))
    return sum((b.weights[s] * game.worth(s) for s in b.coalitions), Fraction(0))
