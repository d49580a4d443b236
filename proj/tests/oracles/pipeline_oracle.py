"""Independent high-precision model of the bound pipeline.

Uses mpmath floats and plain enumeration only; shares no code with the C++
library. Run directly to print the reference values frozen into the C++ tests.
"""
import sys
from fractions import Fraction
from itertools import product

import mpmath as mp

mp.mp.dps = 60


def nonresidue(p):
    if p % 4 == 3:
        return p - 1
    for x in range(2, p):
        if pow(x, (p - 1) // 2, p) == p - 1:
            return x


def subgroup(p, d):
    return sorted(x for x in range(1, p) if pow(x, (p - 1) // d, p) == 1)


def cosets(p, H):
    reps, seen = [], set()
    for x in range(1, p):
        if x not in seen:
            reps.append(x)
            seen.update(x * h % p for h in H)
    return reps


def coset_index(p, H, reps, v):
    for i, r in enumerate(reps):
        if any(r * h % p == v for h in H):
            return i
    raise ValueError


class Ctx:
    def __init__(self, p, d):
        self.p, self.d = p, d
        self.xi = nonresidue(p)
        self.H = subgroup(p, d)
        self.reps = cosets(p, self.H)
        self.xi_inv = pow(self.xi, p - 2, p)

    def qform(self, x, y):
        return (x * x - self.xi_inv * y * y) % self.p

    def orbit(self, i):
        p = self.p
        return [(x, y) for x in range(p) for y in range(p)
                if (x, y) != (0, 0) and coset_index(p, self.H, self.reps, self.qform(x, y)) == i]

    def cusps(self):
        p = self.p
        out = []
        for a in range(1, (p - 1) // 2 + 1):
            if a == 1:
                out.append((a, (1, 0, 0, 1)))
                continue
            for m in product(range(p), repeat=4):
                if (m[0] * m[3] - m[1] * m[2]) % p != 1:
                    continue
                n = (m[0] ** 2 - self.xi * m[2] ** 2) % p
                if n in (a, p - a):
                    out.append((a, m))
                    break
        return out


def translate(S, m, p):
    return [((x * m[0] + y * m[2]) % p, (x * m[1] + y * m[3]) % p) for x, y in S]


def ord_at(S, p):
    tot = Fraction(0)
    for x, _ in S:
        a1 = Fraction(x, p)
        tot += (a1 * a1 - a1 + Fraction(1, 6)) / 2
    v = 12 * p * p * tot
    assert v.denominator == 1
    return int(v)


def log_gamma(S, p):
    return 12 * p * sum(mp.log(abs(2 * mp.sin(mp.pi * y / p))) for x, y in S if x == 0)


def gamma_count(S):
    return sum(1 for x, _ in S if x == 0)


def log_abs_xi(j, a, p):
    k = j + 1
    return mp.log(abs(mp.sin(mp.pi * a * k / p) / mp.sin(mp.pi * a / p)))


def log_abs_eta(ctx, j, s):
    p = ctx.p
    return sum(log_abs_xi(j, s * h % p, p) for h in ctx.H if h <= (p - 1) // 2)


def log_abs_mu(ctx, s):
    p = ctx.p
    return sum(mp.log(abs(2 * mp.sin(mp.pi * s * h / p))) for h in ctx.H)


def height_from_logs(logs):
    return sum(max(mp.mpf(0), v) for v in logs) / len(logs)


def all_logs_eta(ctx, j):
    return [log_abs_eta(ctx, j, a) for a in range(1, ctx.p)]


def choose_eta(ctx):
    """Greedy: keep eta_j when the Gram determinant of the kept log vectors stays nonzero."""
    d = ctx.d
    chosen = []
    for j in range(1, (ctx.p - 3) // 2 + 1):
        trial = chosen + [j]
        M = mp.matrix(d - 1, len(trial))
        for k in range(1, d):
            for c, jj in enumerate(trial):
                M[k - 1, c] = log_abs_eta(ctx, jj, ctx.reps[k])
        if abs(mp.det(M.T * M)) > mp.mpf(10) ** -30:
            chosen = trial
        if len(chosen) == d - 1:
            return chosen
    raise ValueError("no independent subset")


def theorem1(p, d):
    return mp.mpf(30) ** (d + 5) * mp.mpf(d) ** (-2 * d + 4.5) * mp.mpf(p) ** (6 * d + 5) * mp.log(p) ** 2


def theorem2(p):
    return 41993 * mp.mpf(13) ** p * mp.mpf(p) ** (2 * p + 7.5) * mp.log(p) ** 2


def C1(d):
    return min(mp.e / 2 * mp.mpf(d) ** 4.5 * mp.mpf(30) ** (d + 3), mp.mpf(2) ** (6 * d + 20))


def lambda_zero(p):
    p = mp.mpf(p)
    b1 = p ** 2 * mp.log(48 * p ** 12 + 48 * p ** 8) + p * mp.log(96 * p ** 2 * (p ** 5 + p + 1)) + mp.log(2)
    b2 = p * mp.log(96 * p ** 2 * (p ** 5 + p)) + mp.log(2)
    return max(b1, b2)


def assemble(p, d, delta, beta, kappa, m, Omega):
    lam = 12 * mp.mpf(p) ** 7 * m
    h = mp.mpf(p - 1) / 2
    core = C1(d) * Omega * h ** 2 * (1 + mp.log(h))
    K1 = delta * p * core
    K2 = K1 + beta + 2 * mp.mpf(p) ** 3 * m * kappa + delta * p * mp.log(lam)
    B0 = 2 * (K1 * mp.log(K1) + K2)
    bound = p * core * (1 + mp.log(B0)) + p * mp.log(lam) + mp.log(2)
    return dict(K1=K1, K2=K2, B0=B0, bound=bound, lam=lam)


def worst_case(p, d):
    P, L = mp.mpf(p), mp.log(p)
    m = P ** (mp.mpf(p + 1) / 4) * L ** (mp.mpf(p - 3) / 2)
    delta = P ** (mp.mpf(3 * p - 3) / 4) * L ** (mp.mpf(p - 5) / 2)
    beta = 36 * P ** (mp.mpf(3 * p - 7) / 4) * L ** (mp.mpf(p - 3) / 2)
    kappa = P ** (mp.mpf(3 * p - 11) / 4) * L ** (mp.mpf(p - 5) / 2) / m
    Omega = 36 * P ** (6 * d + 1) / mp.mpf(d) ** (2 * d)
    r = assemble(p, d, delta, beta, kappa, m, Omega)
    r.update(delta=delta, beta=beta, kappa=kappa, m=m, Omega=Omega)
    return r


def rigorous(p, d, m_ub=None):
    ctx = Ctx(p, d)
    orbits = [ctx.orbit(i) for i in range(d)]
    cusps = ctx.cusps()
    P = p
    chosen = choose_eta(ctx)
    A = mp.matrix(d - 1, d - 1)
    for k in range(1, d):
        for l in range(1, d):
            A[k - 1, l - 1] = log_abs_eta(ctx, chosen[l - 1], ctx.reps[k])
    Ainv = A ** -1
    det = mp.det(A)
    if m_ub is None:
        hplus_m = mp.mpf(p) ** (mp.mpf(p - 3) / 4) * mp.log(p) ** (mp.mpf(p - 3) / 2) * (p - 1) / (2 * d)
        m_ub = mp.mpf(int(mp.floor(abs(det) / mp.mpf('0.32'))))
        if chosen == list(range(1, d)):
            m_ub = min(m_ub, hplus_m)
    kappa = max(mp.mpf(1), max(sum(abs(Ainv[k, l]) for l in range(d - 1)) for k in range(d - 1)))
    # U = u_{O_1}; O sigma_l = orbit label l
    h_mu = height_from_logs([log_abs_mu(ctx, a) for a in range(1, p)])
    h_eta = [None] + [height_from_logs(all_logs_eta(ctx, j)) for j in chosen]
    delta = beta = mp.mpf(0)
    Omega = mp.mpf(0)
    ords_all = {}
    for (a, m) in cusps:
        ords, lu, hg = [], [], []
        for l in range(d):
            S = translate(orbits[l], m, p)
            ords.append(ord_at(S, p))
            lg = log_gamma(S, p)
            lu.append(lg - 12 * p * log_abs_mu(ctx, ctx.reps[l]))
            # exact height of gamma via log+ over all embeddings
            logs = []
            for b in range(1, p):
                logs.append(12 * p * sum(mp.log(abs(2 * mp.sin(mp.pi * b * y / p))) for x, y in S if x == 0))
            hg.append(height_from_logs(logs))
        ords_all[a] = ords
        for k in range(d - 1):
            dk = m_ub / p * sum(Ainv[k, l - 1] * ords[l] for l in range(1, d))
            bk = m_ub * sum(Ainv[k, l - 1] * lu[l] for l in range(1, d))
            delta = max(delta, abs(dk))
            beta = max(beta, abs(bk))
        hU = [hg[l] + 12 * p * h_mu for l in range(d)]
        half = mp.mpf(p - 1) / 2
        if ords[0] == 0:
            Ak = [max(half * h_eta[k], abs(log_abs_eta(ctx, chosen[k - 1], 1)), mp.mpf(0.16)) for k in range(1, d)]
            Ad = max(half * hU[0], abs(lu[0]), mp.mpf(0.16))
            Om = mp.fprod(Ak) * Ad
        else:
            best = None
            for s in range(1, d):
                n, n2 = ords[0], ords[s]
                Ak = []
                for k in range(1, d):
                    j = chosen[k - 1]
                    logs = [n2 * log_abs_eta(ctx, j, b) - n * log_abs_eta(ctx, j, b * ctx.reps[s] % p) for b in range(1, p)]
                    Ak.append(max(half * height_from_logs(logs), abs(logs[0]), mp.mpf(0.16)))
                hd = abs(n2) * hU[0] + abs(n) * hU[s]
                ld = abs(n2 * lu[0] - n * lu[s])
                Ad = max(half * hd, ld, mp.mpf(0.16))
                Om = mp.fprod(Ak) * Ad
                best = Om if best is None else min(best, Om)
            Om = best
        Omega = max(Omega, Om)
    r = assemble(p, d, delta, beta, kappa, m_ub, Omega)
    r.update(delta=delta, beta=beta, kappa=kappa, m=m_ub, Omega=Omega, det=det, ords=ords_all)
    return r


def frozen():
    """Values pasted into tests/test_baker.cpp (16 significant digits)."""
    for p, d in [(7, 3), (11, 5), (13, 3), (13, 6)]:
        r, w = rigorous(p, d), worst_case(p, d)
        vals = [r[k] for k in ("det", "m", "delta", "beta", "kappa", "Omega", "K1", "B0", "bound")] + [w["bound"]]
        print("{%d, %d, {%s}}," % (p, d, ", ".join('"%s"' % mp.nstr(v, 16) for v in vals)))
    print("theorem1(7,3) =", mp.nstr(theorem1(7, 3), 20))


if __name__ == "__main__" and "--frozen" in sys.argv:
    frozen()
elif __name__ == "__main__":
    for p, d in [(7, 3), (11, 5), (13, 3), (13, 6)]:
        w = worst_case(p, d)
        r = rigorous(p, d)
        print(f"p={p} d={d}")
        for key in ["delta", "beta", "kappa", "m", "Omega", "K1", "B0", "bound"]:
            print(f"  {key:6s} wc={mp.nstr(w[key], 8):>14s} rig={mp.nstr(r[key], 8):>14s}")
        print("  det", mp.nstr(r["det"], 12), "chosen", choose_eta(Ctx(p, d)), "ords", r["ords"])
        print("  thm1", mp.nstr(theorem1(p, d), 10), "thm2", mp.nstr(theorem2(p), 10))
    print("lambda0(7)", mp.nstr(lambda_zero(7), 15))
    print("C1(3)", mp.nstr(C1(3), 15))
