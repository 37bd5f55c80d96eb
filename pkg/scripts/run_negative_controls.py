"""Run the full battery on every documented Ising mutation.

Prints, per mutation, the failing checks and whether each witness replays.
Run:  python3 scripts/run_negative_controls.py
"""
from mtcheck.checks import replay_witness, run_all
from mtcheck.controls import MUTATIONS, mutate
from mtcheck.modular_data import CheckConfig
from mtcheck.verdicts import Status


def main() -> int:
    cfg = CheckConfig()
    missed = 0
    for name, fn in MUTATIONS.items():
        md = mutate(name)
        report = run_all(md, cfg)
        fails = [v for v in report.checks if v.status is Status.FAIL]
        replays = [replay_witness(md, v) for v in fails]
        print(f"{name:22s} overall={report.overall:9s} {fn.__doc__.strip()}")
        for v, ok in zip(fails, replays):
            print(f"    {v.check_name:24s} replay={'ok' if ok else 'NO'}")
        if report.overall != "fail" or not all(replays):
            missed += 1
    print(f"{len(MUTATIONS) - missed}/{len(MUTATIONS)} mutations rejected with replayable witnesses")
    return 1 if missed else 0


if __name__ == "__main__":
    raise SystemExit(main())
