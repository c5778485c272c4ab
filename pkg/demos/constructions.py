"""Build the known SIC sets and print what verify_sic reports about them."""

import math

from sicsets.heisenberg import clifford_residuals, cp3_fiducial, m_eigen_config, s_theta, tetrahedra_cp1, wh_orbit
from sicsets.projective import collinear_triples, verify_sic


def show(name, config):
    r = verify_sic(config)
    print(f"{name:<28} {len(config)} points  kappa={r.kappa:.4f}  "
          f"{r.separated_pairs}/{r.total_pairs} pairs  max dev {r.max_deviation:.1e}")


show("CP^2 orbit of [0,1,1]", wh_orbit([0, 1, 1]))
show("CP^3 orbit", wh_orbit(cp3_fiducial()))
for i, tet in enumerate(tetrahedra_cp1(), 1):
    show(f"CP^1 tetrahedron {i}", tet)
for theta in (-1.0, 0.0, math.pi / 16, 1.3):
    show(f"S_theta, theta={theta:.4f}", s_theta(theta))

config, stats = m_eigen_config(0)
print(f"\neigenvectors of M: {len(collinear_triples(config))} orthonormal triples, not a SIC:")
show("  M eigen configuration", config)

r = clifford_residuals()
print(f"\nM^3 residual {r.cube:.1e}, M A M^-1 residual {r.conj_shift:.1e}")
print(f"M B M^-1 vs w A^-1 B^-1: {r.conj_clock_w:.1e};  vs w^2 A^-1 B^-1: {r.conj_clock:.4f}")
