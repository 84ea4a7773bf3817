"""
Driving the command-line interface
==================================

The same entry point the ``gentrig`` console script uses, called in process.
"""

import tempfile
from pathlib import Path

from gentrig.cli import main

main(["eval", "--fn", "sin_p", "--p", "3", "--x", "1"])
main(["const", "--name", "c_p", "--p", "2"])
main(["oracle-diff", "--kinds", "arcsin_p", "--p", "1.5,3", "--x", "0.5,0.9"])

# a sweep writes CSV and returns 0 only when nothing failed
with tempfile.TemporaryDirectory() as d:
    out = Path(d) / "bounds.csv"
    code = main(["check", "--suite", "bounds", "--out", str(out)])
    print("exit code", code)
    print(out.read_text().splitlines()[1])
