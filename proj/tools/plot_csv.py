#!/usr/bin/env python3
"""Plot merid CSV outputs.

Usage:
    plot_csv.py coherence coherence.csv [out.png]
    plot_csv.py diagram   diagram.csv   [out.png]
    plot_csv.py pattern   pattern_*.csv [out.png]
    plot_csv.py optomech  optomech.csv  [out.png]

The tool itself never plots; this script is the documented consumer of its
CSV files. Requires matplotlib.
"""

import csv
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt


def read_csv(path):
    rows = []
    with open(path, newline="") as f:
        for row in csv.reader(f):
            if not row or row[0].startswith("#"):
                continue
            rows.append(row)
    header, data = rows[0], rows[1:]
    return header, data


def fnum(s):
    return float(s) if s not in ("", "inf") else None


def plot_coherence(path, out):
    _, data = read_csv(path)
    t = [float(r[0]) for r in data]
    xi = [float(r[1]) for r in data]
    xi_s = [float(r[2]) for r in data]
    plt.loglog(t, xi, label="xi(t)")
    plt.loglog(t, xi_s, "--", label="xi_s(t)")
    plt.xlabel("t [s]")
    plt.ylabel("coherence length [m]")
    plt.legend()
    plt.savefig(out, dpi=150, bbox_inches="tight")


def plot_diagram(path, out):
    _, data = read_csv(path)
    D = [float(r[0]) * 1e9 for r in data]

    def band(lo_i, hi_i, color, label):
        lo = [fnum(r[lo_i]) for r in data]
        hi = [fnum(r[hi_i]) for r in data]
        xs = [d for d, a, b in zip(D, lo, hi) if a is not None and b is not None]
        los = [a * 1e9 for a, b in zip(lo, hi) if a is not None and b is not None]
        his = [b * 1e9 for a, b in zip(lo, hi) if a is not None and b is not None]
        if xs:
            plt.fill_between(xs, los, his, alpha=0.4, color=color, label=label)

    band(1, 2, "gray", "standard decoherence")
    band(3, 4, "tab:blue", "with collapse source")
    band(5, 6, "tab:green", "falsification region")
    plt.xscale("log")
    plt.yscale("log")
    plt.xlabel("sphere diameter D [nm]")
    plt.ylabel("slit separation d [nm]")
    plt.legend()
    plt.savefig(out, dpi=150, bbox_inches="tight")


def plot_pattern(path, out):
    _, data = read_csv(path)
    x = [float(r[0]) * 1e9 for r in data]
    p = [float(r[1]) for r in data]
    plt.plot(x, p)
    plt.xlabel("x [nm]")
    plt.ylabel("probability density [1/m]")
    plt.savefig(out, dpi=150, bbox_inches="tight")


def plot_optomech(path, out):
    _, data = read_csv(path)
    D = [float(r[0]) * 1e9 for r in data]
    t1 = [float(r[4]) * 1e3 for r in data]
    chi = [float(r[6]) for r in data]
    fig, (a, b) = plt.subplots(2, 1, sharex=True)
    a.loglog(D, t1)
    a.set_ylabel("t1 bound [ms]")
    b.loglog(D, chi)
    b.set_ylabel("chi_max")
    b.set_xlabel("sphere diameter D [nm]")
    fig.savefig(out, dpi=150, bbox_inches="tight")


def main():
    if len(sys.argv) < 3:
        print(__doc__)
        return 2
    kind, path = sys.argv[1], sys.argv[2]
    out = sys.argv[3] if len(sys.argv) > 3 else path.rsplit(".", 1)[0] + ".png"
    plotters = {
        "coherence": plot_coherence,
        "diagram": plot_diagram,
        "pattern": plot_pattern,
        "optomech": plot_optomech,
    }
    if kind not in plotters:
        print(__doc__)
        return 2
    plotters[kind](path, out)
    print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
