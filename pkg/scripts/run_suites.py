"""Run verification suites and write a JSON report.

    python scripts/run_suites.py --seed 0 --out report.json
    python scripts/run_suites.py --suites homeo duality
"""

import argparse
import json
import platform
from dataclasses import asdict, dataclass, field

from cyclicreal.verify import SUITES, run_suite


@dataclass
class RunConfig:
    seed: int = 0
    suites: list[str] = field(default_factory=lambda: list(SUITES))
    out: str | None = None


def run(cfg: RunConfig) -> dict:
    results = []
    for name in cfg.suites:
        rep = run_suite(name, seed=cfg.seed)
        print(rep.summary())
        results.append({
            "suite": rep.name,
            "ok": rep.ok,
            "cases": rep.cases,
            "failures": len(rep.failures),
            "examples": rep.failures[:5],
            "seconds": round(rep.wall_time, 3),
        })
    report = {"config": asdict(cfg), "python": platform.python_version(), "results": results}
    if cfg.out:
        with open(cfg.out, "w") as fh:
            json.dump(report, fh, indent=2)
    return report


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--suites", nargs="*", default=list(SUITES))
    ap.add_argument("--out")
    args = ap.parse_args()
    report = run(RunConfig(args.seed, args.suites, args.out))
    bad = [r["suite"] for r in report["results"] if not r["ok"]]
    print(f"{len(report['results']) - len(bad)}/{len(report['results'])} suites clean" + (f"; failing: {', '.join(bad)}" if bad else ""))


if __name__ == "__main__":
    main()
