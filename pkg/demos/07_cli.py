"""
The command line
================

``forcealg <command> [document]`` prints one JSON report. This script runs a
few commands on the documents in ``problems/``.
"""

import subprocess
import sys
from pathlib import Path

here = Path(__file__).parent / "problems"
runs = [
    ["normal", here / "non_normal.json"],
    ["normal", here / "quadric.json"],
    ["fiber", "--point", "x=0,y=0", here / "empty_fiber.json"],
    ["regseq", here / "not_regular.json"],
    ["verify-decomposition", here / "symmetric_matrix.json"],
    ["verify-enlightening", "--pretty"],
]
for args in runs:
    cmd = [sys.executable, "-m", "forcealg", *map(str, args)]
    out = subprocess.run(cmd, capture_output=True, text=True)
    print("$ forcealg", " ".join(str(a).replace(str(here), "problems") for a in args))
    print(out.stdout or out.stderr)
