#pragma once

// Exact classical-geometry oracle for static spherically symmetric metrics
//   g = -F(r) dt (x) dt + H(r) dr (x) dr + w_j (x) w_j
// written without square roots in F = f^2 and H = h^2.  Supplies the Ricci
// components, the Einstein condition for the 3-geometry, the spacetime wave
// operator coefficients, and the algebraic projector identities behind the
// polar decomposition.

#include "ncwave/forms.hpp"
#include "ncwave/ratfn.hpp"

#include <string>
#include <vector>

namespace clgeom {

/// Ricci coefficients of w_j (x) w_j, dr (x) dr and dt (x) dt.
struct RicciComponents {
    RationalFunction c_ang;
    RationalFunction c_rr;
    RationalFunction c_tt;

    bool all_zero() const { return c_ang.is_zero() && c_rr.is_zero() && c_tt.is_zero(); }
};

/// Static 4-metric Ricci in F = f^2, H = h^2 form.  With X denoting
/// F'H'/(4FH) - F''/(2F) + F'^2/(4F^2)  (= (f'h' - f''h)/(fh)):
///   c_ang = (1/2r)(F'/(2FH) - H'/(2H^2) - (1/r)(1 - 1/H))
///   c_rr  = -X/2 - H'/(2Hr)
///   c_tt  = (F/2H) X - F'/(2Hr)
RicciComponents ricci_static4(const RationalFunction& F, const RationalFunction& H);

/// Spatial 3-geometry Ricci (the F = 1 specialization; c_tt drops out).
struct Ricci3 {
    RationalFunction c_ang;
    RationalFunction c_rr;
};
Ricci3 ricci_3(const RationalFunction& H);

/// Identically zero iff Ricci is proportional to the 3-metric:
/// residual = r H' - 2 H (H - 1).
RationalFunction einstein_residual(const RationalFunction& H);

/// Coefficients of the spacetime wave operator
///   a_tt d^2/dt^2 + a_r d/dr + a_rr d^2/dr^2 + a_ang
/// on modes with orbital angular momentum l:
///   a_tt = -1/F,  a_r = (1/H)(2/r - H'/(2H) + F'/(2F)),  a_rr = 1/H,
///   a_ang = -l(l+1)/r^2.
struct WaveCoeffs {
    RationalFunction a_tt, a_r, a_rr, a_ang;
};
WaveCoeffs classical_wave_coeffs(const RationalFunction& F, const RationalFunction& H,
                                 int l);

/// Symbolic verification of the projector e_ij = delta_ij - x_i x_j / r^2:
/// e^2 = e, x_i e_ij = 0, tr e = 2, and x_i w_i = 0 for w_i = e_ik dx_k.
struct ProjectorReport {
    std::vector<std::pair<std::string, bool>> checks;
    bool all_pass() const;
};
ProjectorReport projector_identities();

}  // namespace clgeom
