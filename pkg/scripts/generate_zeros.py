#!/usr/bin/env python3
"""Regenerate the bundled table of nontrivial-zero ordinates.

Writes the imaginary parts t_1..t_COUNT of the first zeros on the critical
line at DIGITS decimal digits, via mpmath's zetazero at boosted precision.
Run from the repository root:

    python scripts/generate_zeros.py [out_path]
"""

import sys
from pathlib import Path

import mpmath
from mpmath import mp

COUNT = 100
DIGITS = 50
GUARD = 10


def main() -> None:
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else (
        Path(__file__).resolve().parents[1]
        / "src" / "likeiper" / "data" / "zeros.tsv"
    )
    lines = [
        "# Ordinates t_k of the first nontrivial zeta zeros (zeta(1/2 + i t_k) = 0),",
        "#   strictly increasing, t_1 = 14.13472514...",
        f"# source: mpmath {mpmath.__version__} mp.zetazero, working dps {DIGITS + GUARD}",
        f"# digits: {DIGITS}",
        f"# count: {COUNT}",
    ]
    with mp.workdps(DIGITS + GUARD):
        for k in range(1, COUNT + 1):
            rho = mpmath.zetazero(k)
            t = mpmath.im(rho)
            text = mpmath.nstr(
                t, DIGITS, strip_zeros=False, min_fixed=-mpmath.inf, max_fixed=mpmath.inf
            )
            lines.append(f"{k}\t{text}")
            if k % 10 == 0:
                print(f"zero #{k} done", flush=True)
    out.write_text("\n".join(lines) + "\n")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
