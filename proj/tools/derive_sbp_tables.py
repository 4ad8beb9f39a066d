#!/usr/bin/env python3
"""Regenerate src/sbp_tables.inc: diagonal-norm SBP first-derivative operators.

For each half-order p in 1..4 this derives the (2p, p) operator: interior
central stencil of order 2p, a 2p x 3p boundary closure of order p, and the
first 2p diagonal norm weights (the interior weight is 1). The defining
identity Q + Q^T = B is built into the parameterization (strict lower
triangle of the corner block is minus the upper; Q_00 = -1/2), so only the
accuracy conditions are solved:

    sum_j Q_ij j^k = H_i k i^(k-1)   for k = 0..p, rows i = 0..2p-1.

The solution manifold is exact-rational. Remaining free parameters are fixed
by zeroing the outermost corner entries (largest column first, then largest
distance from the diagonal). For p = 4 that choice inflates the spectral
radius of D @ D to ~257/dx^2, two orders above the interior symbol bound, so
its three parameters are instead pinned to rationals found by a Nelder-Mead
minimization of rho(D @ D) (TAU8 below; final radius ~2.97/dx^2, at the
interior symbol bound). Rerun with --scan-p4 to reproduce that search
(requires numpy + scipy).

Every emitted table is verified symbolically before writing: row exactness,
the full-matrix SBP identity on a small grid, positivity of the weights.

Offline tool: the build never runs this; the emitted tables are committed.
Requires sympy (and numpy/scipy for --scan-p4 / --check-radius).
"""
import argparse
import sys
from fractions import Fraction
from pathlib import Path

import sympy as sp
from sympy import Rational as R

INTERIOR = {
    1: [R(1, 2)],
    2: [R(2, 3), R(-1, 12)],
    3: [R(3, 4), R(-3, 20), R(1, 60)],
    4: [R(4, 5), R(-1, 5), R(4, 105), R(-1, 280)],
}

# Pinned free parameters of the (8,4) closure (see module docstring).
TAU8 = [R(31, 61), R(-5, 99), R(49, 66)]


def solve_family(p):
    """Accuracy-condition solution: (sigma, corner values, free parameters)."""
    r, w = 2 * p, 3 * p
    a = INTERIOR[p]

    def astencil(off):
        m = abs(off)
        if m == 0 or m > p:
            return R(0)
        return a[m - 1] if off > 0 else -a[m - 1]

    Hs = list(sp.symbols(f"H0:{r}", positive=True))
    corner = {}
    for i in range(r):
        for j in range(i + 1, r):
            corner[(i, j)] = sp.Symbol(f"q_{i}_{j}")
    unknowns = Hs + list(corner.values())

    def Q(i, j):
        if j < r:
            if i == j:
                return R(-1, 2) if i == 0 else R(0)
            return corner[(i, j)] if i < j else -corner[(j, i)]
        return astencil(j - i)

    eqs = []
    for i in range(r):
        for k in range(0, p + 1):
            lhs = sum(Q(i, j) * R(j) ** k for j in range(w))
            rhs = Hs[i] if k == 1 else (R(0) if k == 0 else Hs[i] * k * R(i) ** (k - 1))
            eqs.append(lhs - rhs)

    A, b = sp.linear_eq_to_matrix(eqs, unknowns)
    sol, params, _ = A.gauss_jordan_solve(b, freevar=True)
    idx = {u: k for k, u in enumerate(unknowns)}
    sigma = [sol[idx[h]] for h in Hs]
    for s in sigma:
        assert not s.free_symbols, "norm weights must be parameter-free"
    upper = {ij: sol[idx[s]] for ij, s in corner.items()}
    return sigma, upper, list(params), a


def fix_parameters(p, upper, params):
    """Values for the free parameters: pinned rationals for p=4, greedy
    zeroing of outer corner entries otherwise."""
    if not params:
        return {}
    if p == 4:
        assert len(params) == len(TAU8)
        return dict(zip(params, TAU8))
    fixed = {}
    order = sorted(upper.keys(), key=lambda ij: (-ij[1], -(ij[1] - ij[0])))
    for ij in order:
        if len(fixed) == len(params):
            break
        expr = sp.expand(upper[ij].subs(fixed))
        free = [t for t in params if t not in fixed and expr.has(t)]
        if not free:
            continue
        t = free[0]
        solt = sp.solve(sp.Eq(expr, 0), t)
        if not solt or solt[0].free_symbols - set(params):
            continue
        fixed[t] = sp.expand(solt[0].subs(fixed))
        fixed = {k: sp.expand(v.subs({t: fixed[t]})) for k, v in fixed.items()}
    assert len(fixed) == len(params), f"could not fix all parameters (p={p})"
    return fixed


def derive(p):
    r, w = 2 * p, 3 * p
    sigma, upper, params, a = solve_family(p)
    fixed = fix_parameters(p, upper, params)
    vals = {ij: sp.together(e.subs(fixed)) for ij, e in upper.items()}
    for s in sigma:
        assert s.is_Rational and s > 0, f"sigma not positive rational: {s}"

    Qm = sp.zeros(r, w)
    for i in range(r):
        Qm[i, i] = R(-1, 2) if i == 0 else R(0)
        for j in range(i + 1, r):
            Qm[i, j] = vals[(i, j)]
            Qm[j, i] = -vals[(i, j)]
        for j in range(r, w):
            off = j - i
            Qm[i, j] = a[off - 1] if off <= p else R(0)

    # Row exactness of the closure.
    for i in range(r):
        for k in range(0, p + 1):
            lhs = sum(Qm[i, j] * R(j) ** k for j in range(w))
            rhs = sigma[i] if k == 1 else (R(0) if k == 0 else sigma[i] * k * R(i) ** (k - 1))
            assert sp.simplify(lhs - rhs) == 0, f"exactness fail p={p} row {i} k {k}"

    # Full-matrix identity Q + Q^T = B and per-row accuracy on a small grid.
    n = 3 * w
    Qf = sp.zeros(n, n)
    for i in range(r):
        for j in range(w):
            Qf[i, j] = Qm[i, j]
            Qf[n - 1 - i, n - 1 - j] = -Qm[i, j]
    for i in range(r, n - r):
        for off in range(1, p + 1):
            Qf[i, i + off] = a[off - 1]
            Qf[i, i - off] = -a[off - 1]
    Bm = sp.zeros(n, n)
    Bm[0, 0] = -1
    Bm[n - 1, n - 1] = 1
    assert (Qf + Qf.T - Bm).is_zero_matrix, f"SBP identity fail p={p}"
    Hf = [sigma[i] if i < r else (sigma[n - 1 - i] if i >= n - r else R(1)) for i in range(n)]
    for i in range(n):
        kmax = p if (i < r or i >= n - r) else 2 * p
        for k in range(0, kmax + 1):
            lhs = sum(Qf[i, j] * R(j) ** k for j in range(n))
            rhs = Hf[i] * k * R(i) ** (k - 1) if k >= 1 else R(0)
            assert sp.simplify(lhs - rhs) == 0, f"accuracy fail p={p} row {i} k {k}"

    drows = [[sp.together(Qm[i, j] / sigma[i]) for j in range(w)] for i in range(r)]
    return sigma, drows, a


def spectral_radius(p, sigma, drows, a, n_intervals=48):
    import numpy as np

    n = n_intervals + 1
    r, w = 2 * p, 3 * p
    D = np.zeros((n, n))
    rows = [[float(Fraction(int(x.p), int(x.q))) for x in row] for row in drows]
    af = [float(Fraction(int(x.p), int(x.q))) for x in a]
    for i in range(r):
        D[i, :w] = rows[i]
        D[n - 1 - i, n - w:] = [-c for c in rows[i][::-1]]
    for i in range(r, n - r):
        for off in range(1, p + 1):
            D[i, i + off] = af[off - 1]
            D[i, i - off] = -af[off - 1]
    del sigma
    return float(np.max(np.abs(np.linalg.eigvals(D @ D))))


def scan_p4():
    """Reproduce the TAU8 search: minimize rho(D @ D) over the 3 parameters."""
    import numpy as np
    from scipy.optimize import minimize

    sigma, upper, params, a = solve_family(4)
    affine = {}
    for ij, e in upper.items():
        e = sp.expand(e)
        c0 = float(e.subs({t: 0 for t in params}))
        affine[ij] = (c0, [float(sp.diff(e, t)) for t in params])

    def radius(tvals):
        fixed = dict(zip(params, [R(v).limit_denominator(10**12) for v in tvals]))
        vals = {ij: upper[ij].subs(fixed) for ij in upper}
        drows = [
            [sp.together((vals.get((i, j)) if i < j else (-vals[(j, i)] if j < i else (R(-1, 2) if i == 0 else R(0)))) / sigma[i]) if j < 8 else sp.together((a[j - i - 1] if 0 < j - i <= 4 else R(0)) / sigma[i]) for j in range(12)]
            for i in range(8)
        ]
        return spectral_radius(4, sigma, drows, a)

    rng = np.random.default_rng(12345)
    starts = [np.zeros(3)] + [rng.uniform(-3, 3, 3) for _ in range(24)]
    best = None
    for s in starts:
        res = minimize(radius, s, method="Nelder-Mead",
                       options={"maxiter": 4000, "xatol": 1e-10, "fatol": 1e-12})
        if best is None or res.fun < best.fun:
            best = res
    print(f"minimal rho(D@D) = {best.fun:.6f} at t = {best.x}")
    for dmax in (10, 100, 1000):
        tq = [Fraction(x).limit_denominator(dmax) for x in best.x]
        print(f"  rationalized (denominator <= {dmax}): {tq}")
    print(f"pinned TAU8 = {TAU8}")


def dbl(x):
    return repr(float(Fraction(int(x.p), int(x.q))))


def emit(p, sigma, drows, a, out):
    r, w = 2 * p, 3 * p
    out.append(f"// Interior order {2 * p}, boundary order {p}: closure width {r}, row width {w}.")
    out.append(f"constexpr double kSigma{2 * p}[{r}] = {{")
    out.append("    " + ", ".join(dbl(s) for s in sigma) + "};")
    out.append(f"constexpr double kInterior{2 * p}[{p}] = {{" + ", ".join(dbl(c) for c in a) + "};")
    out.append(f"constexpr double kClosure{2 * p}[{r}][{w}] = {{")
    for i in range(r):
        out.append("    {" + ", ".join(dbl(c) for c in drows[i]) + "},")
    out.append("};")
    out.append("")


def main():
    default_out = Path(__file__).resolve().parent.parent / "src" / "sbp_tables.inc"
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("-o", "--output", type=Path, default=default_out,
                    help=f"output path (default {default_out})")
    ap.add_argument("--check-radius", action="store_true",
                    help="also print rho(D@D) per operator (needs numpy)")
    ap.add_argument("--scan-p4", action="store_true",
                    help="rerun the (8,4) parameter search instead of emitting")
    args = ap.parse_args()

    if args.scan_p4:
        scan_p4()
        return 0

    lines = []
    for p in (1, 2, 3, 4):
        sigma, drows, a = derive(p)
        emit(p, sigma, drows, a, lines)
        msg = f"(2p,p) = ({2 * p},{p}): verified"
        if args.check_radius:
            msg += f", rho(D@D) = {spectral_radius(p, sigma, drows, a):.4f}/dx^2"
        print(msg)
    args.output.write_text("\n".join(lines) + "\n")
    print(f"wrote {args.output}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
