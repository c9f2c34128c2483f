#!/usr/bin/env python3
"""Rewrite tests/golden/<case>.json from the current CLI output.

Run after an intentional output change, then review the diff before committing.
"""

import io
import json
import sys
from pathlib import Path

from expoweyl.cli import main

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"


def run_case(argv):
    argv = [a.replace("{configs}", str(GOLDEN / "configs")) for a in argv]
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def main_script():
    cases = json.loads((GOLDEN / "cases.json").read_text())
    for name, argv in sorted(cases.items()):
        code, out, err = run_case(argv)
        if code != 0:
            sys.exit(f"{name}: exit {code}: {err.strip()}")
        (GOLDEN / f"{name}.json").write_text(out)
        print(f"wrote {name}.json")


if __name__ == "__main__":
    main_script()
