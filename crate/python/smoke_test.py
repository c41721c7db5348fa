"""Smoke test for the pysplitroots extension module.

Build and install first:

    pip install maturin
    pip install -e crates/python --no-build-isolation

then run `python python/smoke_test.py`.
"""

import cmath
import math
import sys

import pysplitroots as sr


def close(a, b, tol=1e-9):
    return abs(a - b) <= tol


def sorted_roots(roots):
    return sorted(roots, key=lambda z: (round(z.real, 9), round(z.imag, 9)))


def check_solve():
    rs = sr.solve("z^3 - 7z + 6")
    assert len(rs) == 3
    got = sorted_roots(rs.roots)
    for z, want in zip(got, [-3, 1, 2]):
        assert close(z, want), got
    assert rs.max_residual() < 1e-12
    assert all(tag.startswith("omega-") for tag in rs.branch_tags)

    p = sr.RealPolynomial([4.0, 0.0, -5.0, 0.0, 1.0])
    assert str(p) == "z^4 - 5z^2 + 4"
    got = sorted_roots(sr.solve(p).roots)
    for z, want in zip(got, [-2, -1, 1, 2]):
        assert close(z, want), got

    rs = sr.solve_quadratic(1.0, 1.0)
    for z in rs.roots:
        assert close(z * z + z + 1, 0)


def check_errors():
    try:
        sr.solve("z^5 + 1")
    except sr.UnsupportedDegreeError:
        pass
    else:
        raise AssertionError("degree 5 accepted")
    try:
        sr.parse_polynomial("x^2 + y")
    except sr.ParseError as e:
        _, position, kind = e.args
        assert (position, kind) == (6, "multiple-variables"), e.args
    else:
        raise AssertionError("mixed variables accepted")
    assert issubclass(sr.ParseError, ValueError)


def check_depression():
    p = sr.parse_polynomial("w^3 - 6w^2 + 11w - 6")
    d = sr.depress_cubic(p)
    assert (d.a, d.b, d.shift) == (-1.0, 0.0, -2.0), d
    assert d.expand() == p
    q = sr.depress_quartic(sr.parse_polynomial("w^4 - 2w^3 - 13w^2 + 14w + 24"))
    assert q.shift == -0.5
    resolvent = sr.DepressedQuartic(-7.0, 6.0, 0.0).resolvent()
    assert resolvent == [1.0, -3.5, 3.0625, -0.5625], resolvent


def check_split_systems():
    assert sr.naive_cubic_reduction(-7.0, 6.0) == (8.0, -14.0, -6.0)
    omega = complex(0.5, math.sqrt(3) / 2)
    for z in sr.solve("z^3 + z + 1").roots:
        x, y = sr.omega_decompose(z)
        assert close(x + omega * y, z)
        re, im = sr.cubic_omega_split_residual(1.0, 1.0, x, y)
        assert abs(re) < 1e-9 and abs(im) < 1e-9
    re, im = sr.quadratic_split_residual(1.0, 1.0, -0.5, math.sqrt(3) / 2)
    assert abs(re) < 1e-12 and abs(im) < 1e-12


def check_oracle():
    p = sr.parse_polynomial("z^6 - 1")
    res = sr.find_roots(p)
    assert res.converged and len(res.roots) == 6
    unity = [cmath.exp(2j * math.pi * k / 6) for k in range(6)]
    pairs = sr.pair_roots(res.roots, unity)
    assert max(d for _, _, d in pairs) < 1e-12
    clustered = sr.find_roots(sr.RealPolynomial([1.0, -4.0, 6.0, -4.0, 1.0]))
    assert all(r > 0 for r in clustered.cluster_radii)


def main():
    for check in (check_solve, check_errors, check_depression, check_split_systems, check_oracle):
        check()
        print(f"ok  {check.__name__}")
    print("python smoke test passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
