"""
Scanning a corpus
=================

Run the whole pipeline on every 3x3 semigroup table and a batch of random
small semigroups, and look for a non-zero determinant alongside a
non-vanishing star product across idempotents.
"""

import io
import json

from ecomdet import parse_corpus, scan
from ecomdet.corpus import format_corpus
from ecomdet.generate import order3_records, random_records

records = order3_records() + random_records(seed=7, count=50)
print(len(records), "records")

# the corpus format is plain text and round-trips
text = format_corpus(records[:2])
print(text)
assert [r.table for r in parse_corpus(text)] == [r.table for r in records[:2]]

out = io.StringIO()
results, summary = scan(records, jobs=2, out=out)
print(json.dumps(summary.counts, indent=1, sort_keys=True))
print("conjecture counterexamples:", summary.conjecture_counterexamples)
print("first result line:", out.getvalue().splitlines()[0][:120], "...")

nonzero = [r for r in results if r.theta_nonzero and r.diamond is True]
print(len(nonzero), "records with a non-zero determinant and matching blocks")
