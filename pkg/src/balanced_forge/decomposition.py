"""Partitions of a uniform hypergraph into minimally uniform blocks.

Every proper uniform hypergraph admits a partition of its node set such
that the subhypergraph induced on each block (empty intersections kept,
so the edge count is preserved) is minimally uniform. Such partitions
are not unique; decompose returns the lexicographically first one and
decompose_all enumerates them all.
"""
from .hypergraph import is_minimally_uniform


class IncompleteDecomposition(RuntimeError):
    """No partition into minimally uniform blocks was found.

    Raised instead of returning a partial answer: a uniform hypergraph
    without such a partition would be a counterexample to the existence
    theorem, so it must surface loudly rather than be masked.
    """


class UniformPartition:
    """Blocks partitioning the nodes, each inducing a minimally uniform
    subhypergraph of the same size as the original.

    Blocks are node bitmasks ordered by lowest member; degrees[i] is the
    uniformity of the subhypergraph induced on blocks[i] (blocks may
    carry different degrees), size is the common edge count.
    """

    __slots__ = ("n", "blocks", "degrees", "size")

    def __init__(self, h, blocks):
        blocks = sorted(blocks, key=lambda b: b & -b)
        union = 0
        degrees = []
        for b in blocks:
            if b == 0:
                raise ValueError("empty block")
            if union & b:
                raise ValueError("blocks overlap")
            union |= b
            nodes = [x + 1 for x in range(h.n) if b >> x & 1]
            sub, _ = h.subhypergraph(nodes)
            if not is_minimally_uniform(sub):
                raise ValueError(
                    "block {%s} does not induce a minimally uniform subhypergraph"
                    % ",".join(str(x) for x in nodes)
                )
            degrees.append(sub.uniformity())
        if union != (1 << h.n) - 1:
            raise ValueError("blocks do not cover all %d nodes" % h.n)
        self.n = h.n
        self.blocks = tuple(blocks)
        self.degrees = tuple(degrees)
        self.size = h.size

    def block_nodes(self):
        return tuple(
            tuple(x + 1 for x in range(self.n) if b >> x & 1) for b in self.blocks
        )

    def __eq__(self, other):
        return (
            isinstance(other, UniformPartition)
            and self.n == other.n
            and self.blocks == other.blocks
        )

    def __hash__(self):
        return hash((self.n, self.blocks))

    def __repr__(self):
        body = ", ".join("{%s}" % ",".join(str(x) for x in ns) for ns in self.block_nodes())
        return "UniformPartition(%s)" % body


def _block_uniform(edges, a):
    sizes = {(e & a).bit_count() for e in edges}
    return len(sizes) == 1


def _block_ok(edges, b):
    """Induced-subhypergraph minimal uniformity, on bitmasks directly.

    Uniformity of a restriction depends only on intersection sizes, so
    relabeling is irrelevant and no objects need building inside the
    search loop.
    """
    if not _block_uniform(edges, b):
        return False
    s = 0
    while True:
        s = (s - b) & b
        if s == b:
            return True
        if _block_uniform(edges, s):
            return False


def _partitions(edges, n):
    """Yield block-mask tuples in lexicographic DFS order.

    The open block always contains the lowest unassigned node, so each
    partition appears exactly once, blocks ordered by lowest member.
    """
    ok = {}
    full = (1 << n) - 1
    acc = []

    def rec(remaining):
        if remaining == 0:
            yield tuple(acc)
            return
        low = remaining & -remaining
        rest = remaining ^ low
        s = 0
        while True:
            block = low | s
            good = ok.get(block)
            if good is None:
                good = ok[block] = _block_ok(edges, block)
            if good:
                acc.append(block)
                yield from rec(remaining ^ block)
                acc.pop()
            if s == rest:
                break
            s = (s - rest) & rest

    yield from rec(full)


def _check_input(h):
    if not h.is_proper:
        raise ValueError("hypergraph must be spanning with nonempty edges")
    if h.uniformity() is None:
        raise ValueError("hypergraph must be uniform")


def decompose(h):
    """First partition of the nodes into minimally uniform blocks.

    Deterministic: candidate blocks are explored in ascending bitmask
    order, so the result is the lexicographically smallest partition.
    """
    _check_input(h)
    for blocks in _partitions(h.edges, h.n):
        return UniformPartition(h, blocks)
    raise IncompleteDecomposition(
        "no partition of %d nodes into minimally uniform blocks; "
        "this would be a counterexample to the existence theorem" % h.n
    )


def decompose_all(h):
    """Every partition into minimally uniform blocks, lexicographic order."""
    _check_input(h)
    if h.n > 10:
        raise ValueError("decompose_all capped at n <= 10, got %d" % h.n)
    return [UniformPartition(h, blocks) for blocks in _partitions(h.edges, h.n)]
