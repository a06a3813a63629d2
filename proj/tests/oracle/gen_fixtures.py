"""Regenerates tests/oracle_values.hpp with mpmath (50 digits) and numpy."""
import mpmath as mp
import numpy as np

mp.mp.dps = 50


def skew(n, a, b):
    g = mp.matrix(n, n)
    for j in range(n):
        for k in range(n):
            g[j, k] = mp.mpc(mp.sin(a * j + 2 * k + 1), mp.cos(3 * j - b * k))
    return (g - g.transpose_conj()) / 2


def comm(x, y):
    return x * y - y * x


def to_np(m):
    return np.array([[complex(m[i, j]) for j in range(m.cols)] for i in range(m.rows)])


def to_mp(a):
    n = a.shape[0]
    m = mp.matrix(n, n)
    for i in range(n):
        for j in range(n):
            m[i, j] = mp.mpc(a[i, j].real, a[i, j].imag)
    return m


def opnorm(m):
    return max(mp.svd_c(m, compute_uv=False))


def cxx_matrix(name, m):
    rows = []
    for i in range(m.rows):
        rows.append(", ".join("{%s, %s}" % (mp.nstr(m[i, j].real, 20), mp.nstr(m[i, j].imag, 20))
                              for j in range(m.cols)))
    body = ",\n    ".join(rows)
    return "inline const std::vector<std::complex<double>> %s{\n    %s};\n" % (name, body)


out = ["#pragma once\n", "// Generated by tests/oracle/gen_fixtures.py; do not edit.\n",
       "#include <complex>\n#include <vector>\n\nnamespace oracle {\n\n"]

p1 = skew(4, 1, 2)
p2 = skew(4, 2, 1)
out.append("inline constexpr int kDim = 4;\n")
out.append(cxx_matrix("kP1", p1))
out.append(cxx_matrix("kP2", p2))
out.append(cxx_matrix("kExpP1At07", mp.expm(p1 * mp.mpf("0.7"))))

# minimum-norm solution of [P1+P2, X] = -[P1,P2] by SVD least squares
n = 4
m = to_np(p1 + p2)
rhs = -to_np(comm(p1, p2))
eye = np.eye(n)
k = np.kron(eye, m) - np.kron(m.T, eye)
x, *_ = np.linalg.lstsq(k, rhs.reshape(-1, order="F"), rcond=1e-10)
p3 = to_mp(x.reshape(n, n, order="F"))
out.append(cxx_matrix("kP3", p3))

l = p1 + p2 + p3
for t in ("0.25", "0.5"):
    tt = mp.mpf(t)
    s = mp.expm(tt * p1) * mp.expm(tt * p2) * mp.expm(tt * p3)
    err = opnorm(s - mp.expm(tt * l))
    out.append("inline constexpr double kTripleErrorNormAt%s = %s;\n" % (t.replace(".", ""), mp.nstr(err, 20)))
c23 = comm(p2, p3)
blocks = (opnorm(comm(p1, c23)) + opnorm(comm(p2, c23))) / 6
out.append("inline constexpr double kBoundCoefficient = %s;\n" % mp.nstr(blocks, 20))
e3 = (comm(p1, c23) + comm(p2, c23)) / 6
out.append("inline constexpr double kE3Norm = %s;\n" % mp.nstr(opnorm(e3), 20))

# Strang global error for the pair (P1, P2), h = 1/8, T = 1
h = mp.mpf(1) / 8
step = mp.expm(h / 2 * p1) * mp.expm(h * p2) * mp.expm(h / 2 * p1)
err = opnorm(step ** 8 - mp.expm(p1 + p2))
out.append("inline constexpr double kStrangGlobalError = %s;\n" % mp.nstr(err, 20))
step = mp.expm(h * p1) * mp.expm(h * p2)
err = opnorm(step ** 8 - mp.expm(p1 + p2))
out.append("inline constexpr double kLieTrotterGlobalError = %s;\n" % mp.nstr(err, 20))

# free Gaussian, sigma = 1
vals = []
for x, t in (("0.0", "0.5"), ("1.3", "0.5"), ("-2.0", "1.0")):
    xx, tt = mp.mpf(x), mp.mpf(t)
    z = 1 - 1j * tt
    u = mp.sqrt(1 / z) * mp.exp(-xx ** 2 / (2 * z))
    vals.append("{%s, %s, {%s, %s}}" % (x, t, mp.nstr(u.real, 20), mp.nstr(u.imag, 20)))
out.append("struct GaussianSample { double x, t; std::complex<double> u; };\n")
out.append("inline const std::vector<GaussianSample> kFreeGaussian{%s};\n" % ", ".join(vals))

out.append("\n}  // namespace oracle\n")
open(__file__.replace("oracle/gen_fixtures.py", "oracle_values.hpp"), "w").write("".join(out))
