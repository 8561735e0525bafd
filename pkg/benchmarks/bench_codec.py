#!/usr/bin/env python3
"""Benchmark the compiled codec kernels against the pure-Python fallback.

Usage:
    python3 benchmarks/bench_codec.py [--number N]

Times the byte-level hot paths (record pack/parse, TLV frame/parse,
both checksums) with identical inputs through both implementations and
prints the per-op timings plus the speedup factor.
"""

import argparse
import timeit

from nfcinv._kernels import _pure

try:
    from nfcinv._kernels import _speedups
except ImportError:
    _speedups = None

RECORD_ARGS = (1001, b"USB-C Cable", 1999, 100, 900, 150)
ENCODED = _pure.encode_record(*RECORD_ARGS)
AREA = _pure.tlv_wrap(ENCODED)
CODE39_PAYLOAD = "INVENTORY CONTROL 12345"
EAN_PAYLOAD = "400638133393"

CASES = [
    ("encode_record", lambda mod: mod.encode_record(*RECORD_ARGS)),
    ("decode_record_fields", lambda mod: mod.decode_record_fields(ENCODED)),
    ("tlv_wrap", lambda mod: mod.tlv_wrap(ENCODED)),
    ("tlv_unwrap", lambda mod: mod.tlv_unwrap(AREA)),
    ("code39_value_sum", lambda mod: mod.code39_value_sum(CODE39_PAYLOAD)),
    ("ean_weighted_sum", lambda mod: mod.ean_weighted_sum(EAN_PAYLOAD)),
]


def best_of(fn, number, repeat=5):
    timer = timeit.Timer(fn)
    return min(timer.repeat(repeat=repeat, number=number)) / number


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--number", type=int, default=200_000,
                        help="iterations per measurement (default 200000)")
    args = parser.parse_args()

    print(f"{'kernel':<22} {'pure (us)':>10} {'c (us)':>10} {'speedup':>8}")
    for name, call in CASES:
        pure_us = best_of(lambda: call(_pure), args.number) * 1e6
        if _speedups is None:
            print(f"{name:<22} {pure_us:>10.3f} {'n/a':>10} {'n/a':>8}")
            continue
        fast_us = best_of(lambda: call(_speedups), args.number) * 1e6
        print(f"{name:<22} {pure_us:>10.3f} {fast_us:>10.3f} "
              f"{pure_us / fast_us:>7.1f}x")
    if _speedups is None:
        print("\ncompiled extension not built; showing fallback only")


if __name__ == "__main__":
    main()
