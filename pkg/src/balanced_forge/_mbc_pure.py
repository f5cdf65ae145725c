"""Interpreted search kernels; _speedups.pyx holds the compiled twins.

Both kernels return plain ints so the compiled and pure variants are
interchangeable: weights come back as (numerators, denominator) pairs or
(multiplicities, k), never as Fraction.

direct_search walks coalitions in ascending mask order, keeping the
chosen incidence rows in fraction-free integer echelon form together
with the residual of the all-ones vector against them. The residual
carries representation coefficients, so the moment it hits zero the
unique candidate weights can be read off; the subtree below such a node
is pruned either way, because any extension keeps the all-ones vector in
the span and forces weight zero on every later member.

cover_search enumerates exact k-covers (multisets of coalitions covering
every player exactly k times) in non-decreasing mask order and rejects
any multiset containing a nonempty proper uniform sub-multiset. The
sub-multiset test is a subset-sum bitset over coverage vectors encoded
in base k, grown incrementally with each copy added, so pruning and the
final minimality decision share one state.
"""
from math import gcd


def _normalize(row):
    g = 0
    for x in row:
        if x:
            g = gcd(g, x if x > 0 else -x)
    if g > 1:
        row = [x // g for x in row]
    return row


def direct_search(n, first=0):
    """Minimal balanced collections as (masks, numerators, denominator).

    With first > 0 only the subtree whose smallest member is `first` is
    searched; first = 0 runs the whole tree. Results are emitted with
    masks ascending within each tuple but in DFS order overall.
    """
    nmasks = 1 << n
    width = 2 * n + 1
    out = []

    def rec(cursor, chosen, rows, pivots, rho, depth, limit):
        for m in range(cursor, limit):
            row = [(m >> i) & 1 for i in range(n)] + [0] * (n + 1)
            row[n + 1 + depth] = 1
            for r, p in zip(rows, pivots):
                if row[p]:
                    a, b = r[p], row[p]
                    row = _normalize([a * x - b * y for x, y in zip(row, r)])
            p = -1
            for i in range(n):
                if row[i]:
                    p = i
                    break
            if p < 0:
                continue
            r2 = rho
            if r2[p]:
                a, b = row[p], r2[p]
                r2 = _normalize([a * x - b * y for x, y in zip(r2, row)])
            chosen.append(m)
            solved = True
            for i in range(n):
                if r2[i]:
                    solved = False
                    break
            if not solved:
                rows.append(row)
                pivots.append(p)
                rec(m + 1, chosen, rows, pivots, r2, depth + 1, nmasks)
                rows.pop()
                pivots.pop()
            else:
                s = r2[n]
                cs = r2[n + 1 : n + 2 + depth]
                if s < 0:
                    s = -s
                    cs = [-c for c in cs]
                if all(c < 0 for c in cs):
                    out.append((tuple(chosen), tuple(-c for c in cs), s))
            chosen.pop()

    rho0 = [1] * n + [1] + [0] * n
    assert len(rho0) == width
    if first:
        rec(first, [], [], [], rho0, 0, first + 1)
    else:
        rec(1, [], [], [], rho0, 0, nmasks)
    return out


def cover_search(n, k):
    """Minimally regular exact k-covers as (masks, multiplicities).

    Support size never exceeds n (a cover that survives the uniform
    sub-multiset filter is an instance of a minimal balanced collection,
    which has at most n members; pruning larger supports loses nothing
    because such candidates would be filtered afterwards anyway).
    """
    nmasks = 1 << n
    base = max(k, 2)
    place = [base ** i for i in range(n)]
    npos = base ** n

    # per-player bitset of encodings whose digit there is at most k-2,
    # i.e. positions safe to add one more copy of an edge containing it
    digit_ok = []
    for i in range(n):
        if k < 2:
            digit_ok.append(0)
            continue
        span = place[i]
        period = span * base
        unit = (1 << (span * (k - 1))) - 1
        m = 0
        for start in range(0, npos, period):
            m |= unit << start
        digit_ok.append(m)

    off = [0] * nmasks
    vm = [0] * nmasks
    allbits = (1 << npos) - 1
    for s in range(1, nmasks):
        o = 0
        v = allbits
        for i in range(n):
            if s >> i & 1:
                o += place[i]
                v &= digit_ok[i]
        off[s] = o
        vm[s] = v

    ones = sum(place)
    targets = 0
    for d in range(1, k):
        targets |= 1 << (d * ones)

    out = []

    def rec(cursor, rem, chosen, mults, dp):
        if not any(rem):
            out.append((tuple(chosen), tuple(mults)))
            return
        if len(chosen) >= n:
            return
        for s in range(cursor, nmasks):
            cmax = k + 1
            for i in range(n):
                if s >> i & 1 and rem[i] < cmax:
                    cmax = rem[i]
            if cmax <= 0:
                continue
            rem2 = list(rem)
            dp2 = dp
            chosen.append(s)
            for c in range(1, cmax + 1):
                for i in range(n):
                    if s >> i & 1:
                        rem2[i] -= 1
                dp2 |= (dp2 & vm[s]) << off[s]
                if dp2 & targets:
                    break
                mults.append(c)
                rec(s + 1, rem2, chosen, mults, dp2)
                mults.pop()
            chosen.pop()

    rec(1, [k] * n, [], [], 1)
    return out
