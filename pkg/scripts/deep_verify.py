#!/usr/bin/env python3
"""Nightly profile: every verification suite at its deep range caps.

Prints one line per suite and a final summary; exit code 1 on any violation.
Set STAIRCASE_LAB_THREADS to fan suites with independent cases out over a
thread pool.
"""

import sys

from staircase_lab import suites

DEEP_CAPS = {
    "special-chi": {"max_colength": 200},
    "pyramid-oracle": {"max_frame": 9},
    "pyramid-oracle-full": {"max_frame": 5},
    "prop-4-1": {"max_frame_closed": 256, "max_frame_oracle": 9},
    "pyramid-monotonic": {"max_frame": 96},
    "endpoint": {"max_frame": 64, "max_n": 12},
    "gstar-crosscheck": {"max_colength": 16},
    "gstar-monotonic": {"max_colength": 14},
    "regularity-bound": {"max_colength": 16},
    "hf-ideal-agreement": {"max_colength": 10},
    "lemma-2-4": {"max_colength": 18},
    "corollary-2-2": {"max_colength": 22},
    "chain-invariants": {"max_colength": 18},
    "form-agreement": {"max_colength": 14},
    "ineq": {"max_c": 80, "max_r": 7, "m_span": 40},
    "genus-negativity": {"max_c": 40, "m_extent": 40, "nu_extent": 15},
    "ch14": {"max_e": 20},
    "ch7-catalog": {"max_m": 14},
    "bang": {"max_m": 14},
    "stabilization": {"max_colength": 10, "extra_levels": 4},
    "sandwich": {"max_m": 10},
    "pyramid-alpha-link": {"max_colength": 10},
    "a-bound": {"max_r": 2, "max_c": 3},
    "borel": {"max_colength": 10},
}


def main() -> int:
    failures = 0
    for name in suites.SUITES:
        report = suites.run_suite(name, **DEEP_CAPS.get(name, {}))
        status = "ok" if report.ok else f"{len(report.violations)} VIOLATION(S)"
        print(f"{name:22s} cases={report.cases_run:8d} elapsed={report.elapsed:7.2f}s {status}")
        if not report.ok:
            failures += 1
            for violation in report.violations[:5]:
                print(f"    {violation}")
    print("all suites ok" if failures == 0 else f"{failures} suite(s) failed")
    return 0 if failures == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
