#!/usr/bin/env python3
"""Run the acceptance checks and print one verdict line per criterion.

Exit code 0 when every criterion passes, 1 otherwise.  This is the same set
of checks as tests/test_acceptance.py, packaged for direct runs.
"""

import subprocess
import sys
from pathlib import Path


def main() -> int:
    test_file = Path(__file__).resolve().parent.parent / "tests" / "test_acceptance.py"
    result = subprocess.run(
        [sys.executable, "-m", "pytest", str(test_file), "-s", "-q", "--no-header"],
        check=False,
    )
    return result.returncode


if __name__ == "__main__":
    sys.exit(main())
