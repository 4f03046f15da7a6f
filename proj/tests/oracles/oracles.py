"""High-precision reference values frozen into the unit tests.

Everything here is computed from the defining formulas with mpmath at 40
digits, independently of the C++ code: shock loci from the Rankine-Hugoniot
equations solved directly for q_R, rarefactions with mpmath's Taylor ODE
solver, the middle state with mpmath's root finder.

Run: python3 tests/oracles/oracles.py
"""

import mpmath as mp

mp.mp.dps = 40


def G(u, q):
    return (2 * u - 1) * q + u**2 / 2 - 2 * u**3 / 3


def lam(u, q, fam):
    d = mp.sqrt(8 * q - 4 * u**2 + 1)
    return ((2 * u - 1) - d) / 2 if fam == 1 else ((2 * u - 1) + d) / 2


def shock_qr(ul, ql, ur, pick):
    """Both RH roots q_R: c = (ql-qr)/(ul-ur), c(ql-qr) = G(l) - G(r)."""
    f = lambda qr: (ql - qr) ** 2 / (ul - ur) - (G(ul, ql) - G(ur, qr))
    # quadratic in qr: collect by evaluating at three points
    a0, a1, a2 = f(0), f(1), f(2)
    a = (a2 - 2 * a1 + a0) / 2
    b = a1 - a0 - a
    c = a0
    disc = mp.sqrt(b * b - 4 * a * c)
    roots = sorted([(-b + disc) / (2 * a), (-b - disc) / (2 * a)])
    return roots[1] if pick == "upper" else roots[0]


def rarefaction(fam, u0, q0, u1):
    if u1 >= u0:
        return mp.odefun(lambda u, q: lam(u, q, fam), u0, q0)(u1)
    # odefun only runs forwards: use s = u0 - u
    back = mp.odefun(lambda s, q: -lam(u0 - s, q, fam), 0, q0)
    return back(u0 - u1)


def rw1_limit(u0, q0):
    """u where the family-one rarefaction from (u0, q0) meets q = u^2/2."""
    sol = mp.odefun(lambda u, q: lam(u, q, 1), u0, q0)
    g = lambda u: sol(u) - u**2 / 2
    hi = u0
    step = mp.mpf("0.25")
    while g(hi + step) > 0:
        hi += step
    return mp.findroot(g, (hi, hi + step), solver="anderson")


def middle_state(left, right):
    ul, ql = left
    ur, qr = right

    def forward(u):
        if u < ul:
            return shock_qr(ul, ql, u, "upper")
        return rarefaction(1, ul, ql, u)

    def backward(u):
        if u < ur:
            return rarefaction(2, ur, qr, u)
        # left states joined to `right` by a 2-shock: solve RH for q_L
        f = lambda q: shock_qr(u, q, ur, "lower") - qr
        return mp.findroot(f, qr + 1)

    phi = lambda u: forward(u) - backward(u)
    um = mp.findroot(phi, (mp.mpf("0.45"), mp.mpf("0.65")), solver="anderson")
    return um, forward(um), backward(um)


def main():
    print("sw1((1,5), 0.7)     =", mp.nstr(shock_qr(1, 5, mp.mpf("0.7"), "upper"), 20))
    print("sw2((1,5), 0.7)     =", mp.nstr(shock_qr(1, 5, mp.mpf("0.7"), "lower"), 20))
    q = mp.findroot(lambda q: shock_qr(1, q, mp.mpf("0.7"), "lower") - 7, 7)
    print("sw2_inv((0.7,7), 1) =", mp.nstr(q, 20))
    print("rw1 limit from (1,5) =", mp.nstr(rw1_limit(1, 5), 20))
    print("rw1((1,5)) at u=2   =", mp.nstr(rarefaction(1, 1, 5, 2), 20))
    print("rw2((1,5)) at u=2   =", mp.nstr(rarefaction(2, 1, 5, 2), 20))
    print("rw2 back (0.7,7) at u=0 =", mp.nstr(rarefaction(2, mp.mpf("0.7"), 7, 0), 20))
    um, qf, qb = middle_state((1, 5), (mp.mpf("0.7"), 7))
    print("middle (1,5)/(0.7,7) u =", mp.nstr(um, 20), " q =", mp.nstr(qf, 20),
          " |gap| =", mp.nstr(abs(qf - qb), 3))
    c1 = (5 - qf) / (1 - um)
    print("  SW1 speed =", mp.nstr(c1, 20))
    print("  RW2 speeds =", mp.nstr(lam(um, qf, 2), 20), mp.nstr(lam(mp.mpf("0.7"), 7, 2), 20))


if __name__ == "__main__":
    main()
