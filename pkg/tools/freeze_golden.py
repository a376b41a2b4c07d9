"""Recompute the frozen nested-extraction values with the dense reference oracle.

Run from the repository root:  python3 tools/freeze_golden.py
Writes tests/golden/nested.json.  The library's sparse reducer is not used
for the expected numbers; only net selection and Rips construction are.
"""

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "tests"))

import oracles  # noqa: E402
from fixtures import NESTED  # noqa: E402
from ripsnerve.nested import example_space, select_nested_samples  # noqa: E402
from ripsnerve.metric import rips  # noqa: E402


def freeze() -> dict:
    out = {}
    for name, (build, r, eps1, eps2, degrees) in NESTED.items():
        X = build()
        pair = select_nested_samples(X, r, eps1, eps2)
        small = list(rips(X.restrict(pair.idx1), r, "open", max(degrees) + 1).relabel(pair.idx1))
        large = list(rips(X.restrict(pair.idx2), r, "open", max(degrees) + 1).relabel(pair.idx2))
        top = max(degrees)
        out[name] = {
            "points": X.n,
            "scale": r, "eps1": eps1, "eps2": eps2,
            "net_sizes": [len(pair.idx1), len(pair.idx2)],
            "betti_small": list(oracles.betti(small, top, 2)),
            "betti_large": list(oracles.betti(large, top, 2)),
            "rank": {str(k): oracles.image_rank(small, large, k, 2) for k in degrees},
        }
        print(name, out[name], flush=True)
    # dense sample of the gapped-circle space below the gap width
    X = example_space(0.05, 4.0, 40)
    c = list(rips(X, 0.04, "open", 2))
    out["example_space_dense"] = {"density": 40, "points": X.n, "scale": 0.04, "betti": list(oracles.betti(c, 1, 2))}
    print("example_space_dense", out["example_space_dense"])
    return out


if __name__ == "__main__":
    path = ROOT / "tests" / "golden" / "nested.json"
    path.write_text(json.dumps(freeze(), indent=2, sort_keys=True) + "\n")
    print("wrote", path)
