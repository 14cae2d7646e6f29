#!/usr/bin/env python3
"""Emit the three bound-comparison figures as CSV files (figure1.csv, ...)."""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from leecodes.report import FIGURE_SPECS, figure_csv


def main():
    out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(".")
    out_dir.mkdir(parents=True, exist_ok=True)
    for fig_id, (m, k1) in FIGURE_SPECS.items():
        path = out_dir / f"figure{fig_id}.csv"
        path.write_text(figure_csv(fig_id))
        print(f"wrote {path}  ({m}, free rank {k1}, length 2K)")


if __name__ == "__main__":
    main()
