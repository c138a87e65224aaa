"""
Running the verification suites
===============================

Each suite returns counts plus the first few counterexamples.  The same
suites are available as ``borelreg verify --suite <name>``.
"""

import json

from borelreg.suites import SUITES, run_suite

print(sorted(SUITES))

res = run_suite("bound", count=200, seed=1)
print(json.dumps(res.to_json(), indent=2))

res = run_suite("intersection", count=100, seed=2)
print("passed:", res.passed, "notes:", res.notes)
