#pragma once

// Frequency-domain radial solves: integrate the complex linear second-order
// ODE a2 psi'' + a1 psi' + a0 psi = 0 across one region with an embedded
// Dormand-Prince 5(4) pair, plus wave-shape diagnostics (zero crossings,
// local wavelengths, cycle count).

#include "ncwave/bhnum.hpp"

#include <vector>

namespace bhnum {

struct RegionSpec {
    enum class Region { exterior, interregnum, interior };
    enum class Side { left, right };

    Region region = Region::exterior;
    double r_min = 0.0;
    double r_max = 0.0;
    Side bc_location = Side::right;
    Complex bc_value{1.0, 0.0};
    Complex bc_slope{0.0, 0.0};
    int steps = 2048;          // output grid intervals
    double tolerance = 1e-10;  // adaptive local error target
    int fixed_substeps = 0;    // > 0: fixed-step integration, no adaptivity
    double cap_factor = 1e12;  // divergence cap on |psi| / boundary amplitude

    void validate(double omega, const PhysParams& p) const;
};

/// Open interval of one region: exterior (gamma max(1, e^{-w lp}), inf),
/// interior (0, gamma min(1, e^{-w lp})), interregnum in between.  The
/// classical branch has no interregnum.
std::pair<double, double> region_bounds(RegionSpec::Region region, double omega,
                                        const PhysParams& p);

struct RegionSolution {
    std::vector<double> r;
    std::vector<Complex> psi;
    std::vector<Complex> dpsi;
    bool diverged = false;
    double error_estimate = 0.0;  // sup-norm difference against a tol/2 re-run
};

RegionSolution solve_region(const RegionSpec& spec, double omega, const PhysParams& p);

struct Diagnostics {
    std::vector<double> zero_crossings;   // of Re psi, linearly interpolated
    std::vector<double> local_wavelengths;  // consecutive crossing gaps
    double cycle_count = 0.0;  // crossings/2, plus 1/2 for a start at zero
    double max_amplitude = 0.0;
};

Diagnostics diagnostics(const RegionSolution& sol);

/// Gap whose midpoint lies closest to r0 (requires >= 2 crossings).
double gap_near(const Diagnostics& d, double r0);

/// Smallest gap with midpoint inside [lo, hi]; 0 if none.
double min_gap_in(const Diagnostics& d, double lo, double hi);

}  // namespace bhnum
