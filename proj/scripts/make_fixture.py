#!/usr/bin/env python3
"""Generate the synthetic MSFT-like daily OHLC fixture.

Produces data/msft_synthetic.csv: one row per NASDAQ trading day from
2003-07-18 through 2006-07-18 (756 rows), prices rounded to cents.
The generator is seeded and calibrated so that the fixture's average
open-to-close spread (s_av) and low-to-high spread (q_av) land near
reference blue-chip levels: s_av ~= 0.706059344 %, q_av ~= 1.57655549 %.

Exact post-rounding ground truth is what tests assert against; recompute
it with scripts/oracle.py fixture-truth.
"""

import datetime as dt
import random
from decimal import Decimal, ROUND_HALF_EVEN
from fractions import Fraction
from pathlib import Path

START = dt.date(2003, 7, 18)
END = dt.date(2006, 7, 18)

# NYSE/NASDAQ observed holidays inside the window (includes 2004-06-11,
# the Reagan day of mourning).
HOLIDAYS = {
    dt.date.fromisoformat(s)
    for s in [
        "2003-09-01", "2003-11-27", "2003-12-25",
        "2004-01-01", "2004-01-19", "2004-02-16", "2004-04-09",
        "2004-05-31", "2004-06-11", "2004-07-05", "2004-09-06",
        "2004-11-25", "2004-12-24",
        "2005-01-17", "2005-02-21", "2005-03-25", "2005-05-30",
        "2005-07-04", "2005-09-05", "2005-11-24", "2005-12-26",
        "2006-01-02", "2006-01-16", "2006-02-20", "2006-04-14",
        "2006-05-29", "2006-07-04",
    ]
}

TARGET_S = Fraction(706059344, 10**9)   # percent
TARGET_Q = Fraction(157655549, 10**8)   # percent

CENT = Decimal("0.01")


def trading_days():
    d = START
    while d <= END:
        if d.weekday() < 5 and d not in HOLIDAYS:
            yield d
        d += dt.timedelta(days=1)


def round_cents(x: float) -> Decimal:
    return Decimal(repr(x)).quantize(CENT, rounding=ROUND_HALF_EVEN)


def generate(cs: float, cw: float, seed: int = 20030718):
    """One full pass: returns list of (date, o, h, l, c) with Decimal cents."""
    rng = random.Random(seed)
    rows = []
    close_prev = 26.50
    import math
    anchor = math.log(26.50)
    for day in trading_days():
        # overnight gap with a weak pull back toward the anchor level
        gap = 0.0025 * rng.gauss(0.0, 1.0) + 0.02 * (anchor - math.log(close_prev))
        o = close_prev * (1.0 + gap)
        # open-to-close move: half-normal magnitude, direction biased toward anchor
        p_up = min(0.62, max(0.38, 0.5 + 0.8 * (anchor - math.log(o))))
        direction = 1.0 if rng.random() < p_up else -1.0
        s = cs * abs(rng.gauss(0.0, 1.0))
        s = min(s, 4.0)
        c = o * (1.0 + direction * s / 100.0)
        # wicks beyond the open/close body
        upper = cw * abs(rng.gauss(0.0, 1.0))
        lower = cw * abs(rng.gauss(0.0, 1.0))
        h = max(o, c) * (1.0 + upper / 100.0)
        l = min(o, c) * (1.0 - lower / 100.0)

        od, hd, ld, cd = (round_cents(v) for v in (o, h, l, c))
        hd = max(hd, od, cd)
        ld = min(ld, od, cd)
        rows.append((day, od, hd, ld, cd))
        close_prev = float(cd)
    return rows


def exact_means(rows):
    s_sum = Fraction(0)
    q_sum = Fraction(0)
    for _, o, h, l, c in rows:
        of, hf, lf, cf = (Fraction(v) for v in (o, h, l, c))
        s_sum += abs((cf - of) / of * 100)
        q_sum += (hf - lf) / lf * 100
    n = len(rows)
    return s_sum / n, q_sum / n


def main():
    cs, cw = 0.885, 0.55
    rows = []
    for it in range(40):
        rows = generate(cs, cw)
        s_av, q_av = exact_means(rows)
        ds = float(TARGET_S - s_av)
        dq = float(TARGET_Q - q_av)
        print(f"iter {it}: cs={cs:.6f} cw={cw:.6f} "
              f"s_av={float(s_av):.9f} q_av={float(q_av):.9f}")
        if abs(ds) < 0.002 and abs(dq) < 0.004:
            break
        cs *= float(TARGET_S / s_av)
        # wick sizes drive q_av - s_av-ish; adjust by the excess-range gap
        excess_target = TARGET_Q - TARGET_S
        excess_now = q_av - s_av
        cw *= float(excess_target / excess_now)

    out = Path(__file__).resolve().parent.parent / "data" / "msft_synthetic.csv"
    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, "w", newline="") as f:
        f.write("date,open,high,low,close\n")
        for day, o, h, l, c in rows:
            f.write(f"{day.isoformat()},{o},{h},{l},{c}\n")

    s_av, q_av = exact_means(rows)
    print(f"wrote {out} ({len(rows)} rows)")
    print(f"exact s_av = {float(s_av):.15f}")
    print(f"exact q_av = {float(q_av):.15f}")


if __name__ == "__main__":
    main()
