"""
The command-line tool
=====================

Every command produces a JSON report; the text view is rendered from it.
"""

import json
import pathlib

from sympow.cli import run

fixtures = pathlib.Path(__file__).resolve().parent.parent / "tests" / "fixtures"

code, out = run(["analyze", str(fixtures / "bad.txt")])
print(out)

code, out = run(["waldschmidt", "--cycle", "5", "--t", "3", "--format", "json"])
report = json.loads(out)
print(report["payload"]["waldschmidt"], report["payload"]["cross_checks"])

# exit code 3: the bad-triple classifier disagrees with the actual square
code, out = run(["symbolic", str(fixtures / "uncomplemented.txt"), "--compare"])
print("exit code", code)
