#!/usr/bin/env python3
"""Solve CPLEX-LP files with HiGHS and print one "<path> <optimum>" line per file.

Exit status 4 means no MILP solver is available, so callers can skip.
"""
import sys

try:
    import highspy
except ImportError:
    sys.exit(4)


def solve(path):
    h = highspy.Highs()
    h.setOptionValue("output_flag", False)
    h.setOptionValue("mip_rel_gap", 0.0)
    if h.readModel(path) != highspy.HighsStatus.kOk:
        raise RuntimeError(f"cannot read {path}")
    h.run()
    if h.getModelStatus() != highspy.HighsModelStatus.kOptimal:
        raise RuntimeError(f"{path}: {h.modelStatusToString(h.getModelStatus())}")
    return round(h.getInfo().objective_function_value)


def main(paths):
    for p in paths:
        print(p, solve(p))
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
