"""
The lllcert command
===================

Every check is also available from the shell.  Output is JSON by default
(``--output table`` for a plain table) and the exit status is 0 when the
condition holds, 1 when it does not, 2 on bad input.
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

from lllcert import petersen_graph

tmp = Path(tempfile.mkdtemp())
graph = tmp / "petersen.json"
graph.write_text(json.dumps(petersen_graph().to_json()))


def run(*args):
    cmd = [sys.executable, "-m", "lllcert", *args]
    res = subprocess.run(cmd, capture_output=True, text=True)
    print("$ lllcert", " ".join(args).replace(str(tmp) + "/", ""))
    print(res.stdout.rstrip() or res.stderr.rstrip())
    print(f"[exit {res.returncode}]\n")


run("check-shearer", "--graph", str(graph), "--p", "1/10")
run("check-shearer", "--graph", str(graph), "--p", "1/4")
run("compare", "--graph", str(graph), "--p", "1/10", "--output", "table")
run("thresholds", "--d", "2..5", "--output", "table")
run("verify", "--graph", str(graph), "--seed", "3", "--output", "table")
run("check-shearer", "--graph", str(graph), "--p", "3/2")
