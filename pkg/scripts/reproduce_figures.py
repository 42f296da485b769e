"""
Write both figure tables and report the curve ordering
"""

import sys

from qmonogamy.verify import figure1_data, figure2_data, make_grid
from utils.logger import setup_logging


def main(out_dir: str = ".") -> int:
    setup_logging()
    tables = {
        "fig1.csv": figure1_data(make_grid(2.0, 5.0, 0.05)),
        "fig2.csv": figure2_data(make_grid(0.0, 1.0, 0.01)),
    }
    broken = 0
    for name, table in tables.items():
        table.to_frame(with_gaps=True).to_csv(f"{out_dir}/{name}", index=False)
        bad = table.ordering_violations()
        broken += len(bad)
        print(f"{name}: {len(table.rows)} rows, ordering broken at {len(bad)} rows")
    return 1 if broken else 0


if __name__ == "__main__":
    sys.exit(main(*sys.argv[1:2]))
