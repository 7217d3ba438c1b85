"""Run both bundled scenarios and print their text reports and CSV metrics.

    python scripts/run_paper_scenarios.py [--out DIR]
"""
import argparse
from pathlib import Path

from spectralign import emit_csv, emit_text, load_scenario, run
from spectralign.simulator import BUNDLED


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", type=Path, default=None, help="also write <name>.csv files here")
    args = parser.parse_args()

    for name in BUNDLED:
        records = run(load_scenario(name))
        print(f"=== {name} ===")
        print(emit_text(records))
        print(emit_csv(records))
        if args.out is not None:
            args.out.mkdir(parents=True, exist_ok=True)
            (args.out / f"{name}.csv").write_text(emit_csv(records))


if __name__ == "__main__":
    main()
