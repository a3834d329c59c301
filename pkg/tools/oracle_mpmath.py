"""Independent high-precision oracle for the vertex multiplication goldens.

Recomputes U = Vinv (j diag(dw)^-1 log S) V for the demo graphs with mpmath at
60 digits, without importing vertexmult: its own eigensolver, its own
frequency ordering, phase rule, and log of the cyclic shift (summed directly
from the DFT modes).  Writes tests/data/golden_<name>.json.

    python tools/oracle_mpmath.py
"""

import json
from pathlib import Path

import mpmath as mp

mp.mp.dps = 60
OUT = Path(__file__).resolve().parent.parent / "tests" / "data"
TWO_PI = 2 * mp.pi


def shift(n):
    S = mp.zeros(n, n)
    for i in range(n):
        S[i, (i - 1) % n] = 1
    return S


def demo(kind, n):
    S = shift(n)
    if kind == "G2":
        A = S.copy()
        A[2, 0] = 1
        return A
    return S + S * S


def log_shift(n):
    # entry (i, m) = (1/n) sum_k exp(2j pi k (i-m)/n) * (-2j pi k / n)
    L = mp.zeros(n, n)
    for i in range(n):
        for m in range(n):
            L[i, m] = mp.fsum(
                mp.expjpi(mp.mpf(2 * k * (i - m)) / n) * (-2j * mp.pi * k / n) for k in range(n)
            ) / n
    return L


def freq(lam):
    w = (-mp.arg(lam)) % TWO_PI
    return mp.mpf(0) if w >= TWO_PI else w


def vm(A, zero_policy="error"):
    n = A.rows
    E, ER = mp.eig(A)
    lams = list(E)
    omegas = [None if abs(l) < mp.mpf("1e-30") else freq(l) for l in lams]
    if zero_policy == "midpoint":
        for i, w in enumerate(omegas):
            if w is None:
                known = sorted(x for x in omegas if x is not None)
                gaps = [known[k + 1] - known[k] for k in range(len(known) - 1)]
                gaps.append(known[0] + TWO_PI - known[-1])
                # first maximal gap wins ties
                best = max(gaps)
                k = next(g for g in range(len(gaps)) if gaps[g] > best - mp.mpf("1e-40"))
                omegas[i] = (known[k] + gaps[k] / 2) % TWO_PI
    assert all(w is not None for w in omegas), "zero eigenvalue under error policy"
    order = sorted(range(n), key=lambda i: omegas[i])
    w = [omegas[i] for i in order]
    V = mp.zeros(n, n)
    for c, i in enumerate(order):
        v = [ER[r, i] for r in range(n)]
        nrm = mp.sqrt(mp.fsum(abs(x) ** 2 for x in v))
        v = [x / nrm for x in v]
        mods = [abs(x) for x in v]
        top = max(mods)
        p = next(r for r in range(n) if mods[r] >= top - mp.mpf("1e-12"))
        ph = mp.conj(v[p]) / mods[p]
        for r in range(n):
            V[r, c] = v[r] * ph
    dw = [w[0] - (w[-1] - TWO_PI)] + [w[k] - w[k - 1] for k in range(1, n)]
    L = log_shift(n)
    D = mp.zeros(n, n)
    for i in range(n):
        for m in range(n):
            D[i, m] = 1j * L[i, m] / dw[i]
    U = mp.inverse(V) * D * V
    return U, w


def dump(name, U, w, policy, extra=None):
    n = U.rows
    doc = {
        "n": n,
        "policy": policy,
        "U": {
            "rows": n,
            "cols": n,
            "re": [[float(mp.re(U[i, j])) for j in range(n)] for i in range(n)],
            "im": [[float(mp.im(U[i, j])) for j in range(n)] for i in range(n)],
        },
        "omegas": [float(x) for x in w],
        "coords_l1": [float(mp.fsum(abs(U[i, j]) for i in range(n))) for j in range(n)],
    }
    doc.update(extra or {})
    OUT.mkdir(parents=True, exist_ok=True)
    (OUT / f"golden_{name}.json").write_text(json.dumps(doc, indent=1) + "\n")
    print("wrote", name)


if __name__ == "__main__":
    U, w = vm(demo("G2", 8))
    dump("g2_n8", U, w, "error")
    U, w = vm(demo("G3", 8), "midpoint")
    dump("g3_n8_midpoint", U, w, "midpoint")
    eps = mp.mpf("1e-3")
    U, w = vm(demo("G3", 8) + eps * shift(8))
    dump("g3_n8_perturb", U, w, "perturb", {"perturb_eps": 1e-3})
