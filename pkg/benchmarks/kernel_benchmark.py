"""Times the pure and compiled search kernels on identical workloads.

Run from a checkout with the package installed:

    python3 benchmarks/kernel_benchmark.py [--heavy]

--heavy adds the n=5 cover searches at the top regularities, the part
that dominates the duality route; expect roughly two minutes for the
pure kernel there.
"""
import argparse
import time

from balanced_forge import _mbc_pure

try:
    from balanced_forge import _speedups
except ImportError:
    _speedups = None


def clock(fn, *args):
    t0 = time.monotonic()
    result = fn(*args)
    return time.monotonic() - t0, result


def row(label, pure_fn, fast_fn, *args):
    tp, rp = clock(pure_fn, *args)
    if fast_fn is None:
        print("%-28s pure %8.3fs   compiled      n/a   (%d results)" % (label, tp, len(rp)))
        return
    tf, rf = clock(fast_fn, *args)
    if rp != rf:
        raise SystemExit("kernel outputs differ on %s" % label)
    speedup = tp / tf if tf > 0 else float("inf")
    print(
        "%-28s pure %8.3fs   compiled %8.3fs   %5.1fx   (%d results)"
        % (label, tp, tf, speedup, len(rp))
    )


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--heavy", action="store_true", help="include the slow n=5 cover searches")
    args = ap.parse_args()

    fast_direct = _speedups.direct_search if _speedups else None
    fast_cover = _speedups.cover_search if _speedups else None
    if _speedups is None:
        print("compiled kernel not built; timing the pure kernel only")

    for n in (4, 5):
        row("direct_search n=%d" % n, _mbc_pure.direct_search, fast_direct, n)
    for n, k in ((4, 2), (4, 4), (5, 3), (5, 5)):
        row("cover_search n=%d k=%d" % (n, k), _mbc_pure.cover_search, fast_cover, n, k)
    if args.heavy:
        for k in (6, 7):
            row("cover_search n=5 k=%d" % k, _mbc_pure.cover_search, fast_cover, 5, k)


if __name__ == "__main__":
    main()
