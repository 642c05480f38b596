"""Run every campaign at its desk-scale default and write one JSONL file per campaign.

    python scripts/reproduce_all.py [outdir] [--jobs K]
"""

import argparse
from pathlib import Path

from relclass import campaigns
from relclass.store import ResultRecord, persist

RUNS = [
    ("verify46", lambda j: campaigns.verify_theorem_1_1(10**4, jobs=j)),
    ("sweep31", lambda j: campaigns.sweep_theorem_3_1(45, jobs=j)),
    ("scan-mdy", lambda j: campaigns.scan_m_divides_y(60000, jobs=j)),
    ("cohn", lambda j: campaigns.cohn_tower(5)),
    ("crosscheck", lambda j: campaigns.cross_check_forms(20000, jobs=j)),
    ("aac", lambda j: campaigns.scan_aac(10**4, jobs=j)),
    ("stephens", lambda j: campaigns.stephens_evidence(10**3, jobs=j)),
]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("outdir", nargs="?", default="results")
    ap.add_argument("--jobs", type=int, default=campaigns.default_jobs())
    args = ap.parse_args()
    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    ok = True
    for name, run in RUNS:
        res = run(args.jobs)
        print(res.summary())
        ok &= res.passed
        path = out / f"{name}.jsonl"
        path.unlink(missing_ok=True)
        base = {"campaign": res.name, **res.params}
        persist([ResultRecord.make("campaign_item", {**base, **it}) for it in res.items], path)
    raise SystemExit(0 if ok else 1)


if __name__ == "__main__":
    main()
