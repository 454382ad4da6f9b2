#!/usr/bin/env python3
"""Regenerates the frozen high-precision reference constants used in the
Rust test suites.

Every printed-formula value that a test asserts against a literal constant is
computed here with mpmath at 50 significant digits, independently of the Rust
implementation, and pasted into the tests at f64 precision (17 significant
digits). Run:

    python3 tools/oracles.py
"""
import mpmath as mp

mp.mp.dps = 50

sh, ch = mp.sinh, mp.cosh
I = mp.mpc(0, 1)
pi = mp.pi


def emit(name, z):
    z = mp.mpc(z)
    print(f"{name:44s} c({mp.nstr(z.real, 17, strip_zeros=False)}, {mp.nstr(z.imag, 17, strip_zeros=False)})")


# --- chain A: N=4, s=1/2, eta = 7i*pi/5, alphas arbitrary -------------------
etaA = I * pi * 7 / 5
amA, apA = mp.mpc(0, '0.45'), mp.mpc(0, '0.87')
bmA = bpA = etaA
thA = mp.mpf('0.54')
NA, qA, twosA = 4, 5, 1

# --- chain B: N=2, s=1, eta = 4i*pi/7, one alpha one beta arbitrary ---------
etaB = I * pi * 4 / 7
amB, apB = I * pi / 2, mp.mpc(0, '0.734')
bmB, bpB = mp.mpf('0.651'), etaB
thB = mp.mpf('0.386')
NB, qB, twosB = 2, 7, 2

print("== scalars ==")
eta13 = I * pi / 3
u = mp.mpc('0.3', '0.1')
emit("xi(0.3+0.1i), eta=i*pi/3", sh(u + eta13) * sh(u - eta13))

u = mp.mpf('0.1')
f0B = (-1) ** (NB + 2) * mp.mpf(2) ** (-2 * twosB * (qB - 1) * NB) * sh(qB * u) ** (2 * twosB * NB)
emit("f0(0.1), chain B", f0B)

u = mp.mpf('0.15')
t1 = sh(qB * amB) * ch(qB * bmB) * sh(qB * apB) * ch(qB * bpB) * ch(qB * u) ** 2
t2 = ch(qB * amB) * sh(qB * bmB) * ch(qB * apB) * sh(qB * bpB) * sh(qB * u) ** 2
t3 = ch(qB * (thB - thB)) * sh(qB * u) ** 2 * ch(qB * u) ** 2
f1B = (-1) ** (NB + 1) * mp.mpf(2) ** (5 - 2 * qB) * (t1 - t2 + t3)
emit("f1(0.15), chain B (even r)", f1B)

u = mp.mpf('0.25')
gam = sh(2 * u) * sh(2 * u + 2 * etaB) / (sh(u) * sh(u + etaB)) ** (2 * NB)
emit("gamma(0.25), chain B", gam)

print("== h function (both alphas arbitrary, odd r), chain A ==")
u = mp.mpc('0.1', '0.2')
sgn = (-1) ** (twosA * NA)
full = mp.mpf(1)
for k in range(twosA):
    full *= sh(u + mp.mpf(twosA - 2 * k + 1) / 2 * etaA)
full = full ** (2 * NA)
base = 4 * full * sh(2 * u + 2 * etaA) / sh(2 * u + etaA)
hA = (sgn * base * ch(u + etaA) * ch(u - etaA) * sh(u + sgn * apA) * sh(u - amA)
      * ch((u + amA + etaA) / 2) / ch((u - amA - etaA) / 2)
      * ch((u - sgn * apA + etaA) / 2) / ch((u + sgn * apA - etaA) / 2))
emit("h(0.1+0.2i), chain A", hA)

print("== K-matrix components, chain A, u=0.3 ==")
u = mp.mpf('0.3')
emit("K11", 2 * (sh(amA) * ch(bmA) * ch(u) + ch(amA) * sh(bmA) * sh(u)))
emit("K22", 2 * (sh(amA) * ch(bmA) * ch(u) - ch(amA) * sh(bmA) * sh(u)))
emit("K12", mp.e ** thA * sh(2 * u))
emit("K21", mp.e ** (-thA) * sh(2 * u))

print("== boundary coefficients a_i, chain B ==")
a0 = 1 / (sh(amB - etaB / 2) * sh(amB + etaB / 2) * ch(bmB - etaB / 2) * ch(bmB + etaB / 2))
a = [mp.mpc(0)] * 9
a[1] = a0 / 4 * (ch(2 * amB) - ch(2 * bmB) + ch(etaB)) * sh(2 * etaB) * sh(etaB)
a[2] = a0 / 4 * sh(2 * amB) * sh(2 * bmB) * sh(2 * etaB)
a[3] = -a0 / 8 * mp.e ** (2 * thB) * sh(2 * etaB) * sh(etaB)
a[4] = -a0 / 8 * mp.e ** (-2 * thB) * sh(2 * etaB) * sh(etaB)
chh = ch(etaB) ** mp.mpf('1.5')
a[5] = a0 * mp.e ** thB * (ch(bmB) * sh(amB) * ch(etaB / 2) + ch(amB) * sh(bmB) * sh(etaB / 2)) * sh(etaB) * chh
a[6] = a0 * mp.e ** (-thB) * (ch(bmB) * sh(amB) * ch(etaB / 2) + ch(amB) * sh(bmB) * sh(etaB / 2)) * sh(etaB) * chh
a[7] = -a0 * mp.e ** thB * (ch(bmB) * sh(amB) * ch(etaB / 2) - ch(amB) * sh(bmB) * sh(etaB / 2)) * sh(etaB) * chh
a[8] = -a0 * mp.e ** (-thB) * (ch(bmB) * sh(amB) * ch(etaB / 2) - ch(amB) * sh(bmB) * sh(etaB / 2)) * sh(etaB) * chh
emit("a0", a0)
for i in range(1, 9):
    emit(f"a{i}", a[i])
emit("a5*a8 - a6*a7", a[5] * a[8] - a[6] * a[7])

print("== energy constants, chain B ==")
c1 = ch(etaB) / (16 * (sh(2 * etaB) * sh(etaB)) ** (2 * NB) * sh(3 * etaB)
                 * sh(amB - etaB / 2) * sh(amB + etaB / 2) * ch(bmB - etaB / 2) * ch(bmB + etaB / 2)
                 * sh(apB - etaB / 2) * sh(apB + etaB / 2) * ch(bpB - etaB / 2) * ch(bpB + etaB / 2))
b = 2 * (-ch(2 * bmB) - ch(etaB) ** 3 + ch(2 * amB) * (1 + ch(2 * bmB) * ch(etaB)))
d = -4 * sh(3 * etaB) * sh(apB + etaB / 2) * sh(apB - etaB / 2) * ch(bpB + etaB / 2) * ch(bpB - etaB / 2)
c2 = (-(a0 / 4) * b * ch(etaB) - (NB - 1) * (4 + ch(2 * etaB)) + 2 * NB * ch(etaB) ** 2
      - sh(etaB) / (2 * d) * (-2 * ch(2 * apB) * (ch(etaB) * (3 + 7 * ch(2 * etaB) + ch(4 * etaB))
                                                  + ch(2 * bpB) * (4 + 5 * ch(2 * etaB) + 2 * ch(4 * etaB)))
                              + 2 * ch(etaB) * (ch(2 * bpB) * (3 + 7 * ch(2 * etaB) + ch(4 * etaB))
                                                + ch(etaB) * (5 + 3 * ch(2 * etaB) + 3 * ch(4 * etaB))))
      - sh(2 * etaB) / (2 * d) * (ch(2 * bpB) * (2 + 4 * ch(etaB) * ch(3 * etaB))
                                  + ch(etaB) * (5 * ch(2 * etaB) + ch(4 * etaB))
                                  - 2 * ch(2 * apB) * (1 + ch(2 * etaB)
                                                       + ch(2 * bpB) * (ch(etaB) + 2 * ch(3 * etaB)) + ch(4 * etaB))))
emit("c1 (s=1)", c1)
emit("c2 (s=1)", c2)

print("== spin-1/2 energy constants, chain A ==")
c1h = -1 / (16 * sh(amA) * ch(bmA) * sh(apA) * ch(bpA) * sh(etaA) ** (2 * NA - 1) * ch(etaA))
c2h = -(sh(etaA) ** 2 + NA * ch(etaA) ** 2) / (2 * ch(etaA))
emit("c1 (s=1/2)", c1h)
emit("c2 (s=1/2)", c2h)
