"""Timing of direct decoding over the number field against decoding modulo an inert prime."""

from __future__ import annotations

import csv
import io
import random
import signal
import statistics
import time
from contextlib import contextmanager

from .decoding import decode
from .instances import BENCH_ROWS, corrupt, cyclotomic_code, random_error, random_message
from .residue import LiftAlphabet, make_residue_context, residue_decode_and_lift, size_of

CSV_COLUMNS = ["n", "k", "mode", "median_ms", "max_size_bits"]


class CellTimeout(Exception):
    pass


@contextmanager
def time_limit(seconds):
    if not seconds or not hasattr(signal, "setitimer"):
        yield
        return

    def handler(signum, frame):
        raise CellTimeout()

    old = signal.signal(signal.SIGALRM, handler)
    signal.setitimer(signal.ITIMER_REAL, seconds)
    try:
        yield
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, old)


def parse_rows(text: str):
    """``"paper"`` or a comma list of ``n:k`` pairs."""
    if text == "paper":
        return [(n, k) for n in sorted(BENCH_ROWS) for k in range(2, n + 1, 2)]
    rows = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        n, _, k = item.partition(":")
        n, k = int(n), int(k)
        if n not in BENCH_ROWS:
            raise ValueError(f"no field configured for length {n}; choose from {sorted(BENCH_ROWS)}")
        if not 1 <= k <= n:
            raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
        rows.append((n, k))
    return rows


def make_instances(n, k, repeats, seed):
    p, q = BENCH_ROWS[n]
    code = cyclotomic_code(p, n, k, check=False)
    rng = random.Random(f"{seed}:{n}:{k}")
    out = []
    for _ in range(repeats):
        f = random_message(code, rng, binary=True)
        e = random_error(code, code.t_max, rng, small=True)
        out.append((f, corrupt(code.encode(f), e)))
    return code, q, out


def run_cell(n, k, mode, repeats, seed=0, timeout=None, direct_method="wb-df"):
    code, q, instances = make_instances(n, k, repeats, seed)
    row = {"n": n, "k": k, "mode": mode, "median_ms": "", "max_size_bits": ""}
    if repeats == 0:
        return row
    times = []
    try:
        with time_limit(timeout):
            if mode == "residue":
                ctx = make_residue_context(code.field, q, code.theta)
                alphabet = LiftAlphabet([0, 1], ctx.q)
                for f, y in instances:
                    t0 = time.perf_counter()
                    g = residue_decode_and_lift(code, y, ctx.q, alphabet)
                    times.append(time.perf_counter() - t0)
                    if g != f:
                        raise AssertionError(f"residue decoding returned a wrong message at n={n}, k={k}")
            else:
                for f, y in instances:
                    t0 = time.perf_counter()
                    res = decode(code, y, direct_method)
                    times.append(time.perf_counter() - t0)
                    if res.f != f:
                        raise AssertionError(f"direct decoding returned a wrong message at n={n}, k={k}")
                if direct_method == "wb-df":
                    sizes = []
                    decode(code, instances[0][1], direct_method,
                           trace=lambda stage, s: sizes.append(size_of([s["N0"], s["W0"], s["N1"], s["W1"]])))
                    row["max_size_bits"] = f"{max(sizes):.1f}"
    except CellTimeout:
        row["median_ms"] = "timeout"
        return row
    row["median_ms"] = f"{statistics.median(times) * 1000:.3f}"
    return row


def run_bench(rows, repeats, mode="both", seed=0, timeout=None, direct_method="wb-df", progress=None):
    modes = ["direct", "residue"] if mode == "both" else [mode]
    out = []
    for m in modes:
        for n, k in rows:
            r = run_cell(n, k, m, repeats, seed, timeout, direct_method)
            out.append(r)
            if progress is not None:
                progress(r)
    return out


def to_csv(results) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    w.writeheader()
    for r in results:
        w.writerow(r)
    return buf.getvalue()


def to_tables(results) -> str:
    """One ``n x k`` table of median times (ms) per mode."""
    out = []
    for mode in ("direct", "residue"):
        cells = {(r["n"], r["k"]): r["median_ms"] for r in results if r["mode"] == mode}
        if not cells:
            continue
        ns = sorted({n for n, _ in cells})
        ks = sorted({k for _, k in cells})
        out.append(f"median decoding time in ms, mode={mode}")
        out.append("n\\k".ljust(6) + "".join(str(k).rjust(12) for k in ks))
        for n in ns:
            out.append(str(n).ljust(6) + "".join(str(cells.get((n, k), "")).rjust(12) for k in ks))
        out.append("")
    return "\n".join(out)
