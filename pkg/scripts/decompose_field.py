#!/usr/bin/env python3
"""Decompose a field read from a text file (or stdin) and print the parts.

Usage: python scripts/decompose_field.py {cc,dd,cd,short-cc,short-dd,short-cd} [file]

The input uses the plain-text field format, e.g.

    kind: symmetric
    1 1 : 1 * x1^2 x2^0 x3^0
    ...
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from tensorcomplex.decompose import DECOMPOSITION_NAMES, decompose  # noqa: E402
from tensorcomplex.fields import field_from_text  # noqa: E402


def main() -> int:
    if len(sys.argv) < 2 or sys.argv[1] not in DECOMPOSITION_NAMES:
        print(__doc__, file=sys.stderr)
        return 2
    text = Path(sys.argv[2]).read_text() if len(sys.argv) > 2 else sys.stdin.read()
    dec = decompose(sys.argv[1], field_from_text(text))
    print(dec.to_text())
    print(f"\nexact reconstruction: {dec.is_exact}")
    return 0 if dec.is_exact else 1


if __name__ == "__main__":
    sys.exit(main())
