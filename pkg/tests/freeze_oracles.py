"""Regenerate tests/data/oracle_values.json from the sympy model.

    python3 tests/freeze_oracles.py

The library is never imported here; the frozen values are pure sympy output.
"""
from __future__ import annotations

import json
import sys
from pathlib import Path

import sympy as sp

sys.path.insert(0, str(Path(__file__).parent))
import sym_oracle as so  # noqa: E402

OUT = Path(__file__).parent / "data" / "oracle_values.json"

NORMAL_FORM_INPUTS = [
    "u11*u22", "u11**2*u22", "u12*u21", "u11**3*u22**2*u12", "(u11 + u22)**3",
    "u11**2*u22**2*u21", "(u11 - I*u12)*(u22 + u21)**2", "u11**4*u22**4",
]
DERIVATION_INPUTS = ["u11", "u12", "u21", "u22", "u11**2*u21", "u12*u22**2", "u11*u12*u21"]
HAAR_MONOMIALS = [
    (0, 0, 0, 0), (1, 0, 0, 1), (0, 1, 1, 0), (1, 0, 0, 0), (2, 0, 0, 2), (0, 2, 2, 0),
    (1, 1, 1, 1), (2, 1, 1, 2), (3, 0, 0, 3), (0, 3, 3, 0), (2, 0, 0, 1), (1, 2, 0, 0),
]


def compute() -> dict:
    env = {"u11": so.u11, "u12": so.u12, "u21": so.u21, "u22": so.u22, "I": sp.I}
    out: dict = {}
    out["normal_forms"] = [{"input": s, "terms": so.terms(so.reduce(sp.sympify(s, locals=env)))}
                           for s in NORMAL_FORM_INPUTS]
    deriv = []
    for side in ("right", "left"):
        for n in (1, 2, 3):
            d = so.derivation(side, n)
            for s in DERIVATION_INPUTS:
                deriv.append({"side": side, "n": n, "input": s,
                              "terms": so.terms(d(sp.sympify(s, locals=env)))})
    out["derivations"] = deriv
    out["haar"] = [{"m": list(m), "value": so._frac(so.haar_integral(
        so.u11 ** m[0] * so.u12 ** m[1] * so.u21 ** m[2] * so.u22 ** m[3]))} for m in HAAR_MONOMIALS]
    one = sp.eye(2)
    seed = so.ntrace((one + sp.I * so.T[3]) * (one + sp.I * so.T[3]) * so.U)
    out["seed"] = so.terms(seed)
    out["seed_norm"] = so._frac(so.inner(seed, seed))
    out["seed_H"] = so._frac(sp.simplify(so.hamiltonian(seed) / seed))
    out["seed_R3"] = so._frac(sp.simplify(so.quantum("R", 3)(seed) / seed))
    out["seed_L3"] = so._frac(sp.simplify(so.quantum("L", 3)(seed) / seed))
    out["seed_sq_H"] = so._frac(sp.simplify(so.hamiltonian(so.reduce(seed ** 2)) / so.reduce(seed ** 2)))
    return out


if __name__ == "__main__":
    OUT.parent.mkdir(exist_ok=True)
    OUT.write_text(json.dumps(compute(), indent=1, sort_keys=True) + "\n")
    print(f"wrote {OUT}")
