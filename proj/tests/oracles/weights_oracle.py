#!/usr/bin/env python3
"""Independent oracle for vanishing-order data on generalized Fermat curves.

Works with dense power series over Q (fractions.Fraction) and obtains the set
of achievable vanishing orders from the column rank profile of the Taylor
coefficient matrix: order o is achievable iff rank(M[:, :o+1]) > rank(M[:, :o]).
k-th roots are computed by Newton iteration, not by the binomial series.

Only rational lambda and "generic" points (root constants stripped) are
supported; that is all the frozen test values need.

Usage:
  weights_oracle.py fixed K N AXIS LAMBDA...        canonical gaps + weight
  weights_oracle.py perj K N LAMBDA...              per-j orders on the quotient
  weights_oracle.py deg1 K N AXIS LAMBDA...         degree-1 orders at a fixed point
"""
import sys
from fractions import Fraction as Fr
from itertools import combinations_with_replacement


def smul(a, b, T):
    out = [Fr(0)] * T
    for i, x in enumerate(a[:T]):
        if x == 0:
            continue
        for j in range(0, T - i):
            y = b[j]
            if y:
                out[i + j] += x * y
    return out


def spow(a, e, T):
    r = [Fr(1)] + [Fr(0)] * (T - 1)
    for _ in range(e):
        r = smul(r, a, T)
    return r


def sinv(a, T):
    # a[0] != 0
    out = [Fr(0)] * T
    out[0] = 1 / a[0]
    for n in range(1, T):
        s = sum(a[i] * out[n - i] for i in range(1, n + 1) if i < len(a))
        out[n] = -s / a[0]
    return out


def kth_root_newton(f, k, T):
    """y with y^k = f, y(0) = 1, f(0) = 1; Newton: y <- y - (y^k - f)/(k y^(k-1))."""
    y = [Fr(1)] + [Fr(0)] * (T - 1)
    prec = 1
    while prec < T:
        prec = min(2 * prec, T)
        yk1 = spow(y, k - 1, prec)
        yk = smul(yk1, y, prec)
        num = [yk[i] - f[i] for i in range(prec)]
        den = [k * c for c in yk1]
        corr = smul(num, sinv(den, prec), prec)
        y = [y[i] - corr[i] for i in range(prec)] + [Fr(0)] * (T - prec)
    return y[:T]


def rank_profile(rows, T):
    """Achievable orders via column rank increments (fraction Gaussian elimination)."""
    basis = {}  # pivot column -> reduced row
    orders = []
    # process columns left to right, maintaining the row space restricted to columns < c
    # easier: rank of M[:, :c] for all c via incremental echelon on columns
    mat = [list(r[:T]) for r in rows]
    ncols = T
    rank = 0
    rows_used = [False] * len(mat)
    # column-by-column elimination: rank of first c+1 columns
    m = [r[:] for r in mat]
    r0 = 0
    for c in range(ncols):
        piv = None
        for i in range(r0, len(m)):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r0], m[piv] = m[piv], m[r0]
        inv = 1 / m[r0][c]
        for i in range(r0 + 1, len(m)):
            if m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [m[i][t] - f * m[r0][t] for t in range(ncols)]
        orders.append(c)
        r0 += 1
        if r0 == len(m):
            break
    return orders


def normal_monomials(nvars, deg, k, free):
    """Monomials of degree deg in nvars variables with e_i < k for i >= free."""
    out = []
    for combo in combinations_with_replacement(range(nvars), deg):
        e = [0] * nvars
        for v in combo:
            e[v] += 1
        if all(e[i] < k for i in range(free, nvars)):
            out.append(tuple(e))
    return sorted(out)


def genus(k, n):
    return (k ** (n - 1) * ((n - 1) * (k - 1) - 2) + 2) // 2


def coord_powers_fixed(k, n, lam, axis, T):
    """Dense series (root constant stripped) for x_i at the fixed point x_axis = 0.

    Uses the defining equations directly: X_i = x_i^k,
    X_0 + X_1 + X_2 = 0, lam_{i-2} X_0 + X_1 + X_i = 0.
    Chart: normaliser c (0, or 1 when axis == 0) has x_c = 1, z = x_axis.
    """
    lams = [Fr(1)] + [Fr(x) for x in lam]  # lams[i-2] is coefficient for x_i, i>=2
    c = 0 if axis != 0 else 1
    # X_j as affine functions of W = z^k: represented as (const, coef)
    X = {}
    if axis == 0:
        X[0] = (Fr(0), Fr(1))
        X[1] = (Fr(1), Fr(0))
    elif axis == 1:
        X[0] = (Fr(1), Fr(0))
        X[1] = (Fr(0), Fr(1))
    else:
        X[0] = (Fr(1), Fr(0))
        # lams[axis-2]*1 + X1 + W = 0
        X[1] = (-lams[axis - 2], Fr(-1))
    for i in range(2, n + 1):
        a0, b0 = X[0]
        a1, b1 = X[1]
        X[i] = (-lams[i - 2] * a0 - a1, -lams[i - 2] * b0 - b1)
    series = []
    for i in range(n + 1):
        if i == axis:
            s = [Fr(0)] * T
            if T > 1:
                s[1] = Fr(1)
            series.append(s)
            continue
        a, b = X[i]
        assert a != 0
        f = [Fr(0)] * T
        f[0] = Fr(1)
        if k < T:
            f[k] = b / a
        series.append(kth_root_newton(f, k, T))
    return series


def coord_series_fiber(k, n, lam, value, T):
    """Dense series at a point of the fibre rho = value, chart zeta = rho - value.

    x_0 = 1, X_1 = -rho, X_i = -lam_{i-2} - X_1 (i >= 2), with lam_0 = 1.
    """
    lams = [Fr(1)] + [Fr(x) for x in lam]
    v = Fr(value)
    X = {0: (Fr(1), Fr(0)), 1: (-v, Fr(-1))}
    for i in range(2, n + 1):
        X[i] = (-lams[i - 2] - X[1][0], -X[1][1])
    series = []
    for i in range(n + 1):
        a, b = X[i]
        assert a != 0
        f = [Fr(0)] * T
        f[0] = Fr(1)
        if T > 1:
            f[1] = b / a
        series.append(kth_root_newton(f, k, T))
    return series


def eval_rows(series, monos, T):
    cache = {}

    def pw(i, e):
        key = (i, e)
        if key not in cache:
            cache[key] = spow(series[i], e, T)
        return cache[key]

    rows = []
    for m in monos:
        r = [Fr(1)] + [Fr(0)] * (T - 1)
        for i, e in enumerate(m):
            if e:
                r = smul(r, pw(i, e), T)
        rows.append(r)
    return rows


def fixed_canonical(k, n, axis, lam):
    g = genus(k, n)
    r = (n - 1) * (k - 1) - 2
    T = 2 * g + 2
    ser = coord_powers_fixed(k, n, lam, axis, T)
    monos = normal_monomials(n + 1, r, k, 2)
    assert len(monos) == g, (len(monos), g)
    orders = rank_profile(eval_rows(ser, monos, T), T)
    assert len(orders) == g
    gaps = [o + 1 for o in orders]
    w = sum(a - i for i, a in enumerate(gaps, start=1))
    return gaps, w


def deg1_fixed(k, n, axis, lam):
    T = (n + 1) * k + 2
    ser = coord_powers_fixed(k, n, lam, axis, T)
    monos = normal_monomials(n + 1, 1, k, 2)
    return rank_profile(eval_rows(ser, monos, T), T)


def perj(k, n, lam):
    """Orders of Q(r-j) on the quotient curve at the branch fibre rho = lam_{n-2}."""
    r = (n - 1) * (k - 1) - 2
    qlam = lam[:-1]
    value = lam[-1]
    out = []
    for j in range(k):
        m = r - j
        monos = normal_monomials(n, m, k, 2)
        T = m * k ** (n - 2) + 2
        ser = coord_series_fiber(k, n - 1, qlam, value, T)
        orders = rank_profile(eval_rows(ser, monos, T), T)
        assert len(orders) == len(monos)
        out.append(orders)
    return out


def main():
    cmd = sys.argv[1]
    k, n = int(sys.argv[2]), int(sys.argv[3])
    if cmd == "fixed":
        axis = int(sys.argv[4])
        lam = [Fr(x) for x in sys.argv[5:]]
        gaps, w = fixed_canonical(k, n, axis, lam)
        print("gaps", gaps)
        print("weight", w)
    elif cmd == "deg1":
        axis = int(sys.argv[4])
        lam = [Fr(x) for x in sys.argv[5:]]
        print("orders", deg1_fixed(k, n, axis, lam))
    elif cmd == "perj":
        lam = [Fr(x) for x in sys.argv[4:]]
        for j, o in enumerate(perj(k, n, lam)):
            flag = o != list(range(len(o)))
            print("j", j, "hyperosc", flag, "orders", o)
    else:
        raise SystemExit(__doc__)


if __name__ == "__main__":
    main()
