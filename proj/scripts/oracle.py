#!/usr/bin/env python3
"""Arbitrary-precision oracles for the test suites.

Subcommands:
  anchors                 exact compounded-projection reference values
  fixture-truth [csv]     exact spread averages of a quote CSV (Fraction math)
  break-even SPREAD N M   brute-force minimal winning-day count

Values printed here are frozen into tests/; rerun after regenerating the
fixture to refresh them.
"""

import sys
from fractions import Fraction

from mpmath import mp, mpf

mp.dps = 50


def project(spread, alpha, horizon, margin):
    s = mpf(spread) / 100
    k = mpf(margin) / 100
    return (1 + k * s) ** alpha * (1 - k * s) ** (horizon - alpha) * 100


def break_even(spread, horizon, margin):
    for alpha in range(horizon + 1):
        if project(spread, alpha, horizon, margin) >= 100:
            return alpha
    return None


def anchors():
    s_ref = "0.706059344"
    q_ref = "1.57655549"
    print("project(%s, a=30, n=30, M=100) = %s" % (s_ref, project(s_ref, 30, 30, 100)))
    print("project(%s, a=15, n=30, M=100) = %s" % (s_ref, project(s_ref, 15, 30, 100)))
    print("project(%s, a=30, n=30, M=200) = %s" % (s_ref, project(s_ref, 30, 30, 200)))
    print("project(%s, a=30, n=30, M=100) = %s" % (q_ref, project(q_ref, 30, 30, 100)))
    print("break_even(%s, 30, 100) = %s" % (s_ref, break_even(s_ref, 30, 100)))
    print("break_even(%s, 30, 100) = %s" % (q_ref, break_even(q_ref, 30, 100)))


def fixture_truth(path):
    s_sum = Fraction(0)
    q_sum = Fraction(0)
    n = 0
    with open(path) as f:
        header = f.readline()
        assert header.strip().startswith("date,open,high,low,close"), header
        for line in f:
            line = line.strip()
            if not line:
                continue
            _, o, h, l, c = line.split(",")[:5]
            of, hf, lf, cf = (Fraction(v) for v in (o, h, l, c))
            s_sum += abs((cf - of) / of * 100)
            q_sum += (hf - lf) / lf * 100
            n += 1
    s_av = s_sum / n
    q_av = q_sum / n
    print("n    =", n)
    print("s_av =", mpf(s_av.numerator) / s_av.denominator)
    print("q_av =", mpf(q_av.numerator) / q_av.denominator)
    to_mpf = lambda fr: mpf(fr.numerator) / fr.denominator
    print("break_even(s_av, 30, 100) =", break_even(to_mpf(s_av), 30, 100))
    print("break_even(q_av, 30, 100) =", break_even(to_mpf(q_av), 30, 100))


def main(argv):
    if len(argv) >= 2 and argv[1] == "anchors":
        anchors()
    elif len(argv) >= 2 and argv[1] == "fixture-truth":
        path = argv[2] if len(argv) > 2 else "data/msft_synthetic.csv"
        fixture_truth(path)
    elif len(argv) >= 2 and argv[1] == "break-even":
        print(break_even(argv[2], int(argv[3]), argv[4]))
    else:
        print(__doc__)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
