"""Generation engines: minimal balanced collections three ways, and
exhaustive labeled enumeration of uniform multihypergraphs.

The direct engine and the duality engine share nothing but the theorem
they are checked against: direct works on incidence ranks and exact
weights, duality enumerates minimally regular exact k-covers (the duals
of minimally k-uniform hypergraphs, taken directly on the player set so
node relabelings of the primal side never materialize) and converts them
through from_regular_hypergraph. The brute-force oracle is the third,
definition-literal route.
"""
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from math import isqrt

from . import __version__
from .core import check_players, coalitions_of, full_mask, format_coalition, parse_coalition
from .hypergraph import Hypergraph, is_minimally_uniform
from .balanced import (
    BalancedCollection,
    find_balancing_weights,
    from_regular_hypergraph,
    is_minimal_balanced,
    is_minimal_balanced_oracle,
)
from ._kernel import direct_search, cover_search

TOOL = "balanced-forge/%s" % __version__

# known counts of minimal balanced collections by player count
TABLE1 = {1: 1, 2: 2, 3: 6, 4: 42, 5: 1292, 6: 200214, 7: 132422036}


def k_max(n):
    """Smallest integer at least (n+1)^((n+1)/2) / 2^n, computed exactly.

    Weight denominators of a minimal balanced collection divide the
    determinant of an n x n 0/1 matrix, and this Hadamard-type bound caps
    those determinants; sweeping regularities 1..k_max(n) in the duality
    route is therefore exhaustive. Values: 2, 2, 4, 7, 15 for n = 2..6.
    """
    check_players(n)
    a = (n + 1) ** (n + 1)
    return isqrt(a - 1) // (1 << n) + 1


class CatalogError(ValueError):
    """Malformed catalog file, version mismatch, or failed validation."""


class MbcCatalog:
    """Canonically sorted, duplicate-free list of minimal balanced collections."""

    __slots__ = ("n", "method", "collections", "generated", "tool", "diagnostics")

    METHODS = ("direct", "duality", "oracle")

    def __init__(self, n, method, collections, generated=None, tool=None, diagnostics=None):
        check_players(n)
        if method not in self.METHODS:
            raise ValueError("method must be one of %s" % (self.METHODS,))
        cols = sorted(collections, key=lambda b: b.coalitions)
        for a, b in zip(cols, cols[1:]):
            if a.coalitions == b.coalitions:
                raise ValueError("duplicate collection %s" % (a.to_text(),))
        for b in cols:
            if b.n != n:
                raise ValueError("collection %s does not live on %d players" % (b.to_text(), n))
        self.n = n
        self.method = method
        self.collections = cols
        self.generated = generated or time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime())
        self.tool = tool or TOOL
        self.diagnostics = diagnostics or {}

    @property
    def count(self):
        return len(self.collections)

    def coalition_sets(self):
        """Frozen set of the coalition tuples, the route-comparison key."""
        return frozenset(b.coalitions for b in self.collections)

    def __iter__(self):
        return iter(self.collections)

    def __len__(self):
        return len(self.collections)


def _direct_subtree(args):
    n, first = args
    return direct_search(n, first)


def _threads_default():
    raw = os.environ.get("BALANCED_FORGE_THREADS", "")
    if raw.strip():
        t = int(raw)
        if t < 1:
            raise ValueError("BALANCED_FORGE_THREADS must be >= 1, got %r" % raw)
        return t
    return os.cpu_count() or 1


def enumerate_mbc(n, threads=None):
    """All minimal balanced collections on n players, 2 <= n <= 7.

    Subtrees of the search split by the first chosen coalition and run on
    a process pool for n >= 6 (BALANCED_FORGE_THREADS or the thread
    argument caps workers); results are merged and sorted, so the catalog
    is identical however the work was scheduled.
    """
    check_players(n)
    if not 2 <= n <= 7:
        raise ValueError("enumerate_mbc supports 2 <= n <= 7, got %d" % n)
    if threads is None:
        threads = _threads_default()
    if n >= 6 and threads > 1:
        tasks = [(n, first) for first in range(1, 1 << n)]
        raw = []
        with ProcessPoolExecutor(max_workers=min(threads, len(tasks))) as pool:
            for chunk in pool.map(_direct_subtree, tasks):
                raw.extend(chunk)
    else:
        raw = direct_search(n)
    cols = [
        BalancedCollection._trusted(
            n, masks, {m: Fraction(num, den) for m, num in zip(masks, nums)}
        )
        for masks, nums, den in raw
    ]
    return MbcCatalog(n, "direct", cols)


def enumerate_mbc_oracle(n):
    """Definition-literal engine: test every coalition subset of size <= n.

    The size cap is the classical bound |B| <= n for minimal balanced
    collections (their incidence vectors are independent); the criterion
    itself is the proper-subcollection oracle, nothing rank-based.
    """
    if not 2 <= n <= 5:
        raise ValueError("oracle enumeration supports 2 <= n <= 5, got %d" % n)
    univ = coalitions_of(n)
    cols = []
    for size in range(1, n + 1):
        for combo in combinations(univ, size):
            if is_minimal_balanced_oracle(n, combo):
                w = find_balancing_weights(n, combo)
                cols.append(BalancedCollection(n, w))
    return MbcCatalog(n, "oracle", cols)


def enumerate_uniform(n, k, p, spanning):
    """All labeled multisets of p k-subsets of {1..n}; optionally spanning.

    Emitted in non-decreasing canonical edge order, each as a Hypergraph.
    """
    check_players(n)
    if not 1 <= k <= n:
        raise ValueError("edge size k=%d infeasible for n=%d" % (k, n))
    if p < 1:
        raise ValueError("size p must be >= 1, got %d" % p)
    edges = [m for m in range(1, 1 << n) if m.bit_count() == k]
    full = full_mask(n)
    out = []
    for combo in combinations_with_replacement(edges, p):
        if spanning:
            cover = 0
            for e in combo:
                cover |= e
            if cover != full:
                continue
        out.append(Hypergraph(n, combo))
    return out


def enumerate_minimally_uniform(n, k, p):
    """Spanning k-uniform multihypergraphs with no uniform induced part."""
    return [h for h in enumerate_uniform(n, k, p, True) if is_minimally_uniform(h)]


def mbc_via_duality(n, kmax=None):
    """Minimal balanced collections through the hypergraph duality route.

    For every regularity k = 1..kmax, enumerate the minimally regular
    exact k-covers of the player set (each is the dual of a minimally
    k-uniform hypergraph of size n, with the primal node count equal to
    the cover's multiset size), convert through from_regular_hypergraph,
    validate minimality, and deduplicate. kmax defaults to the k_max(n)
    bound, which makes the sweep exhaustive.

    Diagnostics on the returned catalog record how often any collection
    was produced more than once (multiplicity histogram; expected all-1,
    each collection arising only at k = lcm of its weight denominators)
    and how many covers failed the minimality validation (expected 0).
    """
    check_players(n)
    if not 2 <= n <= 6:
        raise ValueError("duality route supports 2 <= n <= 6, got %d" % n)
    if kmax is None:
        kmax = k_max(n)
    if kmax < 1:
        raise ValueError("kmax must be >= 1, got %r" % (kmax,))
    seen = {}
    times_produced = {}
    rejected = 0
    for k in range(1, kmax + 1):
        for masks, mults in cover_search(n, k):
            edges = []
            for m, c in zip(masks, mults):
                edges.extend([m] * c)
            bc = from_regular_hypergraph(Hypergraph(n, edges))
            if not is_minimal_balanced(n, bc.coalitions):
                rejected += 1
                continue
            key = bc.coalitions
            times_produced[key] = times_produced.get(key, 0) + 1
            if key not in seen:
                seen[key] = bc
    hist = {}
    for c in times_produced.values():
        hist[c] = hist.get(c, 0) + 1
    return MbcCatalog(
        n,
        "duality",
        list(seen.values()),
        diagnostics={"multiplicity_histogram": hist, "rejected": rejected, "k_max": kmax},
    )


HEADER_PREFIX = "mbc-catalog"
FORMAT_VERSION = "v1"


def save_catalog(catalog, path, fmt="text"):
    """Write `mbc-catalog v1` text (one collection per line) or its JSON mirror."""
    if fmt == "text":
        lines = [
            "%s %s n=%d method=%s count=%d"
            % (HEADER_PREFIX, FORMAT_VERSION, catalog.n, catalog.method, catalog.count)
        ]
        lines.append("# generated=%s tool=%s" % (catalog.generated, catalog.tool))
        lines.extend(b.to_text() for b in catalog.collections)
        data = "\n".join(lines) + "\n"
    elif fmt == "json":
        data = json.dumps(
            {
                "format": HEADER_PREFIX,
                "version": 1,
                "n": catalog.n,
                "method": catalog.method,
                "count": catalog.count,
                "generated": catalog.generated,
                "tool": catalog.tool,
                "collections": [
                    {
                        "coalitions": [format_coalition(s) for s in b.coalitions],
                        "weights": [str(b.weights[s]) for s in b.coalitions],
                    }
                    for b in catalog.collections
                ],
            },
            indent=0,
        )
    else:
        raise ValueError("fmt must be text or json, got %r" % (fmt,))
    with open(path, "w") as fh:
        fh.write(data)


def load_catalog(path):
    """Read either catalog format back, validating every invariant."""
    with open(path) as fh:
        data = fh.read()
    if data.lstrip().startswith("{"):
        return _load_catalog_json(data)
    return _load_catalog_text(data)


def _parse_collection_line(line, n):
    from .balanced import parse_collection

    bc = parse_collection(line)
    if bc.n != n:
        raise CatalogError("collection on %d players in an n=%d catalog" % (bc.n, n))
    return bc


def _load_catalog_text(data):
    lines = [ln for ln in data.splitlines() if ln.strip()]
    if not lines:
        raise CatalogError("empty catalog file")
    head = lines[0].split()
    if len(head) < 5 or head[0] != HEADER_PREFIX:
        raise CatalogError("bad header: %r" % lines[0])
    if head[1] != FORMAT_VERSION:
        raise CatalogError("unsupported catalog version %r" % head[1])
    fields = {}
    for tok in head[2:]:
        key, _, val = tok.partition("=")
        fields[key] = val
    try:
        n = int(fields["n"])
        count = int(fields["count"])
        method = fields["method"]
    except (KeyError, ValueError):
        raise CatalogError("bad header fields: %r" % lines[0])
    generated = tool = None
    body = []
    for ln in lines[1:]:
        if ln.startswith("#"):
            for tok in ln[1:].split():
                key, _, val = tok.partition("=")
                if key == "generated":
                    generated = val
                elif key == "tool":
                    tool = val
            continue
        body.append(_parse_collection_line(ln, n))
    if len(body) != count:
        raise CatalogError("header count=%d but %d collections" % (count, len(body)))
    for a, b in zip(body, body[1:]):
        if a.coalitions >= b.coalitions:
            raise CatalogError("collections out of canonical order")
    try:
        return MbcCatalog(n, method, body, generated=generated, tool=tool)
    except ValueError as exc:
        raise CatalogError(str(exc))


def _load_catalog_json(data):
    try:
        obj = json.loads(data)
    except json.JSONDecodeError as exc:
        raise CatalogError("bad JSON: %s" % exc)
    if obj.get("format") != HEADER_PREFIX:
        raise CatalogError("not a catalog document")
    if obj.get("version") != 1:
        raise CatalogError("unsupported catalog version %r" % obj.get("version"))
    n = obj["n"]
    body = []
    for item in obj["collections"]:
        weights = {}
        for coal, w in zip(item["coalitions"], item["weights"]):
            weights[parse_coalition(coal, n)] = Fraction(w)
        body.append(BalancedCollection(n, weights))
    if len(body) != obj["count"]:
        raise CatalogError("count field disagrees with collection list")
    for a, b in zip(body, body[1:]):
        if a.coalitions >= b.coalitions:
            raise CatalogError("collections out of canonical order")
    try:
        return MbcCatalog(
            n, obj["method"], body, generated=obj.get("generated"), tool=obj.get("tool")
        )
    except ValueError as exc:
        raise CatalogError(str(exc))
