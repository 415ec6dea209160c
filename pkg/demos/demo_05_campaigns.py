"""
Campaigns from the command line
===============================

The ``hypermc`` command wraps everything above.  This script drives it in
a scratch directory and prints what it writes.
"""

import json
import tempfile
from pathlib import Path

from hypermc.cli import main

work = Path(tempfile.mkdtemp())

main(["gen", "extremal-example", "--n", "10", "--r", "3", "--out", str(work / "ex10_3")])
print((work / "ex10_3.hg").read_text().splitlines()[:3])

main(["mc", "--file", str(work / "ex10_3.hg"), "--r", "4", "--mode", "heuristic",
      "--seed", "3", "--out", str(work / "h.json")])
print(json.loads((work / "h.json").read_text())["value"])

###############################################################################
# Random colorings of complete 3-graphs
# -------------------------------------
main(["verify", "--n", "8..12", "--r", "3", "--trials", "200", "--seed", "42",
      "--out", str(work / "v.json")])
report = json.loads((work / "v.json").read_text())
print(report["certificates"], "certificates,", report["failures"], "failures,",
      report["branches"])

###############################################################################
# Parameter scans
# ---------------
spec = {"family": "random-min-degree", "n": [8, 9], "r": 3, "targets": [4, 5],
        "seeds": [1]}
(work / "scan.json").write_text(json.dumps(spec))
main(["scan", "--spec", str(work / "scan.json"), "--out", str(work / "scan.csv")])
print((work / "scan.csv").read_text())
