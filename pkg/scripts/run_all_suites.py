#!/usr/bin/env python3
"""Run every verification suite and write JSON + markdown reports.

Usage: python scripts/run_all_suites.py [seed] [outdir]
"""

import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from tensorcomplex.suites import SUITE_NAMES, SuiteConfig, run_suite  # noqa: E402


def main() -> int:
    seed = int(sys.argv[1]) if len(sys.argv) > 1 else 7
    outdir = Path(sys.argv[2]) if len(sys.argv) > 2 else Path("reports")
    outdir.mkdir(parents=True, exist_ok=True)

    failures = 0
    for suite in SUITE_NAMES:
        cfg = SuiteConfig(suite=suite, seed=seed)
        t0 = time.monotonic()
        report = run_suite(cfg)
        elapsed = time.monotonic() - t0
        (outdir / f"{suite}.json").write_text(report.to_json())
        (outdir / f"{suite}.md").write_text(report.to_markdown())
        s = report.counts
        failures += s["fail"] + s["error"]
        print(
            f"{suite:20s} {s['pass']:3d} pass {s['fail']:2d} fail {s['error']:2d} error"
            f"   ({elapsed:5.1f}s)"
        )
    print(f"reports written to {outdir}/")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
