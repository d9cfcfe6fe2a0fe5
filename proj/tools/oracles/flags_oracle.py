#!/usr/bin/env python3
"""Brute-force flag/grading/group counts for sl2(F5) and sl3(F5).

Everything here works directly on structure constants and subspace
enumeration, independent of the C++ library's code paths.
"""
import itertools
from fractions import Fraction

P = 5

# ---------------------------------------------------------------- F5 linear algebra


def inv(a):
    return pow(a, P - 2, P)


def rref(rows):
    m = [list(r) for r in rows]
    nr, nc = len(m), len(m[0]) if m else 0
    piv = []
    r = 0
    for c in range(nc):
        pr = next((i for i in range(r, nr) if m[i][c] % P), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        iv = inv(m[r][c])
        m[r] = [x * iv % P for x in m[r]]
        for i in range(nr):
            if i != r and m[i][c] % P:
                f = m[i][c]
                m[i] = [(a - f * b) % P for a, b in zip(m[i], m[r])]
        piv.append(c)
        r += 1
        if r == nr:
            break
    return [tuple(row) for row in m[:r]], piv


def span_key(rows):
    rr, _ = rref(rows)
    return tuple(rr)


def subspace_dim(rows):
    rr, _ = rref(rows)
    return len(rr)


def in_span(rows, v):
    return subspace_dim(list(rows) + [v]) == subspace_dim(rows)


def all_vectors(n):
    return list(itertools.product(range(P), repeat=n))


def mat_mul(A, B):
    n, k, m = len(A), len(B), len(B[0])
    return tuple(
        tuple(sum(A[i][t] * B[t][j] for t in range(k)) % P for j in range(m))
        for i in range(n)
    )


def mat_vec(A, v):
    return tuple(sum(A[i][t] * v[t] for t in range(len(v))) % P for i in range(len(A)))


# ---------------------------------------------------------------- Lie algebras

# sl2 basis (e, h, f): [h,e]=2e, [h,f]=-2f, [e,f]=h
def sl2_bracket(x, y):
    e1, h1, f1 = x
    e2, h2, f2 = y
    # [x,y] coords in (e,h,f)
    e = (h1 * e2 - e1 * h2) * 2 + 0
    # e-coeff: from [h,e]=2e terms: 2*(h1*e2 - h2*e1); [e,f]=h contributes h only
    ec = 2 * (h1 * e2 - h2 * e1)
    hc = e1 * f2 - f1 * e2
    fc = -2 * (h1 * f2 - h2 * f1)
    return (ec % P, hc % P, fc % P)


def ad_matrix(bracket, dim, x):
    cols = []
    for j in range(dim):
        ej = tuple(1 if i == j else 0 for i in range(dim))
        cols.append(bracket(x, ej))
    return tuple(tuple(cols[j][i] % P for j in range(dim)) for i in range(dim))


def is_euler(bracket, dim, x):
    d = ad_matrix(bracket, dim, x)
    d3 = mat_mul(mat_mul(d, d), d)
    return d3 == d


def eigenspace(d, lam, dim):
    rows = []
    for v in all_vectors(dim):
        if mat_vec(d, v) == tuple(x * lam % P for x in v):
            rows.append(v)
    rr, _ = rref(rows)
    return rr


def plus_flag(bracket, dim, E):
    d = ad_matrix(bracket, dim, E)
    g1 = eigenspace(d, 1, dim)
    g0 = eigenspace(d, 0, dim)
    f1 = span_key(list(g1))
    f0 = span_key(list(g1) + list(g0))
    return (f1, f0)


def sum_dim(a, b):
    return subspace_dim(list(a) + list(b))


def intersect_zero(a, b):
    return subspace_dim(list(a) + list(b)) == len(a) + len(b)


def transversal(e, f, dim):
    e1, e0 = e
    f1, f0 = f
    ok1 = len(e1) + len(f0) == dim and intersect_zero(e1, f0)
    ok2 = len(f1) + len(e0) == dim and intersect_zero(f1, e0)
    return ok1 and ok2


def five_conditions(bracket, dim, f1rows, f0rows):
    def closed(rows, target):
        for a in rows:
            for b in rows:
                if not in_span(target, bracket(a, b)):
                    return False
        return True

    # f1 <= f0
    for v in f1rows:
        if not in_span(f0rows if f0rows else [(0,) * dim], v):
            return False
    # f0 subalgebra
    if f0rows and not closed(f0rows, f0rows):
        return False
    # f1 abelian subalgebra
    for a in f1rows:
        for b in f1rows:
            if bracket(a, b) != (0,) * dim:
                return False
    # [f0,f1] <= f1
    for a in f0rows:
        for b in f1rows:
            if not in_span(f1rows if f1rows else [(0,) * dim], bracket(a, b)):
                return False
    # [g,f1] <= f0
    basis = [tuple(1 if i == j else 0 for i in range(dim)) for j in range(dim)]
    for a in basis:
        for b in f1rows:
            if not in_span(f0rows if f0rows else [(0,) * dim], bracket(a, b)):
                return False
    return True


def all_subspaces(dim):
    out = {}
    for d in range(dim + 1):
        seen = set()
        if d == 0:
            seen.add(())
        else:
            for combo in itertools.combinations(all_vectors(dim)[1:], d):
                key = span_key(list(combo))
                if len(key) == d:
                    seen.add(key)
        out[d] = sorted(seen)
    return out


def main_sl2():
    dim = 3
    subs = all_subspaces(dim)
    # inner flags: from all Euler operators
    inner = set()
    euler_of = {}
    for x in all_vectors(dim):
        if is_euler(sl2_bracket, dim, x):
            fl = plus_flag(sl2_bracket, dim, x)
            inner.add(fl)
            euler_of.setdefault(fl, x)
    proper = [f for f in inner if len(f[0]) > 0]
    print("sl2(F5): inner flags total =", len(inner), " proper =", len(proper))

    # filtration-condition flags (all (f1,f0) pairs)
    filt = []
    for d1 in range(dim + 1):
        for f1 in subs[d1]:
            for d0 in range(d1, dim + 1):
                for f0 in subs[d0]:
                    if five_conditions(sl2_bracket, dim, list(f1), list(f0)):
                        filt.append((f1, f0))
    print("sl2(F5): flags satisfying the 5 conditions =", len(filt))
    print("sl2(F5): condition-flags that are inner =", len([f for f in filt if f in inner]))

    # transversal pairs among inner
    pairs = [(e, f) for e in inner for f in inner if transversal(e, f, dim)]
    print("sl2(F5): transversal ordered pairs (incl degenerate) =", len(pairs))
    prop_pairs = [(e, f) for e, f in pairs if len(e[0]) > 0 and len(f[0]) > 0]
    print("sl2(F5): transversal ordered pairs (proper only) =", len(prop_pairs))

    # transversal count to a fixed proper flag
    f_star = plus_flag(sl2_bracket, dim, (0, 2 * inv(2) % P, 0))  # E=h/2? use E=(0,3,0): 2*3=6=1 -> ad has eigev 2*3?
    # careful: use E with ad(E)^3=ad(E): E = h/2 means coords (0, inv(2), 0) = (0,3,0)
    E = (0, inv(2), 0)
    assert is_euler(sl2_bracket, dim, E)
    f_star = plus_flag(sl2_bracket, dim, E)
    cnt = sum(1 for e in proper if transversal(e, f_star, dim))
    print("sl2(F5): proper flags transversal to f+(ad h/2) =", cnt)

    # PE group on sl2(F5): generated by exp(ad(c*e)), exp(ad(c*f))
    def expm(d):
        # 1 + d + d^2/2   (d^3 = 0 for ad of homogeneous)
        n = len(d)
        d2 = mat_mul(d, d)
        half = inv(2)
        return tuple(
            tuple(((1 if i == j else 0) + d[i][j] + half * d2[i][j]) % P for j in range(n))
            for i in range(n)
        )

    gens = []
    for c in range(1, P):
        gens.append(expm(ad_matrix(sl2_bracket, dim, (c, 0, 0))))
        gens.append(expm(ad_matrix(sl2_bracket, dim, (0, 0, c))))
    ident = tuple(tuple(1 if i == j else 0 for j in range(dim)) for i in range(dim))
    group = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = mat_mul(s, g)
                if h not in group:
                    group.add(h)
                    nxt.append(h)
        frontier = nxt
    print("sl2(F5): |PE group (adjoint image)| =", len(group))

    # flag action, orbit of f-
    Em = tuple((-x) % P for x in E)
    o_plus_base = plus_flag(sl2_bracket, dim, Em)  # f^- = f^+(-E)
    f_plus = plus_flag(sl2_bracket, dim, E)

    def act_flag(g, fl):
        f1 = span_key([mat_vec(g, v) for v in fl[0]]) if fl[0] else ()
        f0 = span_key([mat_vec(g, v) for v in fl[1]]) if fl[1] else ()
        return (f1, f0)

    orbit = {act_flag(g, o_plus_base) for g in group}
    print("sl2(F5): orbit of f^- =", len(orbit))
    orbit_grad = {act_flag(g, o_plus_base) + act_flag(g, f_plus) for g in group}
    print("sl2(F5): orbit of grading (pairs) =", len(orbit_grad))

    # H, P+, P-, Omega+
    H = [g for g in group if act_flag(g, f_plus) == f_plus and act_flag(g, o_plus_base) == o_plus_base]
    Pp = [g for g in group if act_flag(g, f_plus) == f_plus]
    Pm = [g for g in group if act_flag(g, o_plus_base) == o_plus_base]
    omega = [g for g in group if transversal(act_flag(g, o_plus_base), f_plus, dim)]
    print("sl2(F5): |H| =", len(H), " |P+| =", len(Pp), " |P-| =", len(Pm), " |Omega+| =", len(omega))

    # non-isotropic count for the swap involution theta: e<->f, h->-h
    theta = ((0, 0, 1), (0, -1 % P, 0), (1, 0, 0))
    non_iso = [fl for fl in orbit if transversal(act_flag(theta, fl), fl, dim)]
    print("sl2(F5): non-isotropic flags under swap involution =", len(non_iso))

    # quasi-inverse definedness count over F5 (scalar pair, action of exp(ad(y*f)) on x*e chart)
    defined = 0
    for x in range(P):
        for y in range(P):
            g = expm(ad_matrix(sl2_bracket, dim, (0, 0, y)))
            flag = act_flag(g, act_flag(expm(ad_matrix(sl2_bracket, dim, (x, 0, 0))), o_plus_base))
            if transversal(flag, f_plus, dim):
                defined += 1
    print("sl2(F5): quasi-inverse defined inputs of 25 =", defined)


def main_sl3():
    # sl3 with (1,2) block grading; basis: matrix units eij (i != j) and
    # h1 = e11 - e22, h2 = e22 - e33; dim 8.
    units = [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)]
    names = ["E01", "E02", "E10", "E12", "E20", "E21", "h1", "h2"]

    def to_mat(c):
        m = [[0] * 3 for _ in range(3)]
        for k, (i, j) in enumerate(units):
            m[i][j] = c[k]
        m[0][0] += c[6]
        m[1][1] += -c[6] + c[7]
        m[2][2] += -c[7]
        return m

    def from_mat(m):
        c = [m[i][j] % P for (i, j) in units]
        # diag = a,b,-(a+b) with a = c6, b = -c6+c7
        a = m[0][0] % P
        b = m[1][1] % P
        c6 = a
        c7 = (b + a) % P
        assert (-(c7)) % P == m[2][2] % P, (m, a, b)
        return tuple(c + [c6, c7])

    def bracket(x, y):
        mx, my = to_mat(x), to_mat(y)
        mm = [[sum(mx[i][t] * my[t][j] - my[i][t] * mx[t][j] for t in range(3)) % P for j in range(3)] for i in range(3)]
        return from_mat(mm)

    dim = 8
    # Euler for (1,2) block inside gl3 is diag(1,0,0); trace-zero rep over F5: diag(1,0,0) - (1/3)I
    # 1/3 mod 5 = 2; diag(1,0,0) - 2I = diag(-1,-2,-2) = diag(4,3,3)
    Ediag = [[4, 0, 0], [0, 3, 0], [0, 0, 3]]
    E = from_mat(Ediag)
    assert is_euler(bracket, dim, E)
    d = ad_matrix(bracket, dim, E)
    Em = tuple((-x) % P for x in E)
    fminus = plus_flag(bracket, dim, Em)
    # orbit BFS on flags with unipotent generators
    g1 = eigenspace(d, 1, dim)
    gm1 = eigenspace(d, P - 1, dim)

    def expm(dm):
        n = len(dm)
        d2 = mat_mul(dm, dm)
        half = inv(2)
        return tuple(
            tuple(((1 if i == j else 0) + dm[i][j] + half * d2[i][j]) % P for j in range(n))
            for i in range(n)
        )

    gens = []
    for b in list(g1) + list(gm1):
        for c in range(1, P):
            gens.append(expm(ad_matrix(bracket, dim, tuple(c * t % P for t in b))))

    def act_flag(g, fl):
        f1 = span_key([mat_vec(g, v) for v in fl[0]]) if fl[0] else ()
        f0 = span_key([mat_vec(g, v) for v in fl[1]]) if fl[1] else ()
        return (f1, f0)

    orbit = {fminus}
    frontier = [fminus]
    while frontier:
        nxt = []
        for fl in frontier:
            for s in gens:
                h = act_flag(s, fl)
                if h not in orbit:
                    orbit.add(h)
                    nxt.append(h)
        frontier = nxt
    print("sl3(F5) (1,2)-block: orbit of f^- =", len(orbit))


if __name__ == "__main__":
    main_sl2()
    main_sl3()
