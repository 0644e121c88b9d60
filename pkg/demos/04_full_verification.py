#!/usr/bin/env python3
"""Run the whole identity-checking harness and summarize the outcome.

Each registered claim is an executable mathematical statement checked by
exact arithmetic over a range of weights.  The same sweep is available
from the command line:

    compoundbasis verify --claims all --max-n 8

Run with:  python3 demos/04_full_verification.py
"""

import time
from collections import defaultdict

from compoundbasis import check_all, claim_ids


def main():
    print(f"registered claims: {len(claim_ids())}")
    for cid in claim_ids():
        print(f"  - {cid}")
    print()

    start = time.perf_counter()
    reports = check_all(max_n=8)
    elapsed = time.perf_counter() - start

    by_claim = defaultdict(list)
    for rep in reports:
        by_claim[rep.claim_id].append(rep)

    print(f"{'claim':26s} {'weights':10s} {'status':7s} {'time':>8s}")
    for cid, reps in sorted(by_claim.items()):
        ns = f"1..{max(r.n for r in reps)}"
        ok = "pass" if all(r.passed for r in reps) else "FAIL"
        ms = sum(r.elapsed_ms for r in reps)
        print(f"{cid:26s} {ns:10s} {ok:7s} {ms:7.1f}ms")

    total = len(reports)
    passed = sum(1 for r in reports if r.passed)
    print()
    print(f"{passed}/{total} checks passed in {elapsed:.2f}s")


if __name__ == "__main__":
    main()
