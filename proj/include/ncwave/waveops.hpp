#pragma once

// Differential and wave operators on normal-ordered functions: the
// finite-difference time derivative, the time Laplacian Delta0 (recursion and
// closed forms for monomial beta), the exterior derivative, extraction of the
// induced wave operator from the theta' component of d, the inner element
// theta, and the gauge shift dt -> dt + h theta'.

#include "ncwave/forms.hpp"

namespace waveops {

using ncalg::AlgebraElement;
using ncalg::FormSum;
using ncalg::ModelConfig;

/// Finite-difference time derivative: (f(t) - f(t-lam)) / lam, exact.
AlgebraElement partial0(const AlgebraElement& psi);

/// Time Laplacian by the recursion
///   Delta0 t^n = (Delta0 t^{n-1})(t + alpha lam) + (partial0 t^{n-1}) beta,
/// extended left-linearly over the spatial coefficients.
AlgebraElement delta0(const AlgebraElement& psi, const ModelConfig& model);

/// Closed-form Delta0 for beta = r^{-m} (alpha = 1):
///   m = 1: (1/(r lam)) (d/dt - partial0) g(t+lam)
///   m = 2: (1/(r^2 lam)) (partial0 g(t+2 lam) - d/dt g(t+lam))
///   else : r^{-m} [g(t+lam) + (1-m) g(t-(1-m)lam) - (2-m) g(t+m lam)]
///          / (lam^2 (2-m)(1-m))
AlgebraElement delta0_closed(const AlgebraElement& psi, int m);

/// d psi = dbar psi + (lam/2) th lap psi + (partial0 psi) dt + lam (Delta0 psi) th,
/// in canonical (coefficients-left) form.
FormSum exterior_d(const AlgebraElement& psi, const ModelConfig& model);

/// dt component, spatial components and theta' component of d psi.
/// theta_coeff = (lam/2) box psi; the division by lam is exact.
struct WaveDecomposition {
    FormSum spatial;            // dx_i part of d psi
    AlgebraElement dt_coeff;    // partial0 psi
    AlgebraElement theta_coeff; // (lam/2) box psi

    /// box psi = 2 theta_coeff / lam (exact division).
    AlgebraElement wave_op() const;
};

/// Throws std::logic_error if the theta' coefficient is not divisible by lam.
WaveDecomposition wave_extract(const AlgebraElement& psi, const ModelConfig& model);

enum class Geometry { flat, flat_drift, schwarzschild_laurent };

/// box psi = 2 Delta0 psi + (L psi)(t + lam), with the spatial operator L
/// chosen per geometry:
///   flat                 : flat Laplacian
///   flat_drift           : flat Laplacian - q(r) d/dr   (q = beta'/(2 beta))
///   schwarzschild_laurent: (2/r - gam/r^2) d/dr + (1 - gam/r) d^2/dr^2 + e_i e_i
/// where e_i e_i = lap - r^{-2}(tau^2 + tau) on canonical monomials.
AlgebraElement wave_assembled(const AlgebraElement& psi, const ModelConfig& model,
                              Geometry geometry);

/// The inner element theta = dt - (mu + nu) th for beta = r^{-m}, m not 1 or 2:
/// mu = r^{-m}/(2-m), nu = r^{-m}/((2-m)(1-m)); [theta, f] = -lam d f on
/// degree-0 elements.
struct InnerElement {
    FormSum theta;
    AlgebraElement mu;
    AlgebraElement nu;
};

/// Throws std::invalid_argument for m in {1,2} (mu, nu involve log r there,
/// outside the Laurent ring).
InnerElement inner_theta(int m);

/// dt -> dt + h th carries beta to beta' = beta + tau(h) + (alpha+1) h.
/// The bimodule consistency of the shift is verified symbolically; throws
/// std::logic_error if it fails.
ModelConfig gauge_shift(const AlgebraElement& h, const ModelConfig& model);

/// Angular Laplacian e_i e_i = lap - r^{-2}(tau^2 + tau).
AlgebraElement angular_laplacian(const AlgebraElement& psi);

}  // namespace waveops
