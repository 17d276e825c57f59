#include "ncwave/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bhnum {

std::pair<double, double> region_bounds(RegionSpec::Region region, double omega,
                                        const PhysParams& p) {
    const double inf = std::numeric_limits<double>::infinity();
    double edge = p.gamma;
    if (!p.classical()) edge = p.gamma * std::exp(-omega * p.lambda_p);
    const double lo = std::min(p.gamma, edge);
    const double hi = std::max(p.gamma, edge);
    switch (region) {
        case RegionSpec::Region::exterior: return {hi, inf};
        case RegionSpec::Region::interior: return {0.0, lo};
        case RegionSpec::Region::interregnum:
            if (p.classical() || lo == hi)
                throw std::domain_error("region_bounds: no interregnum on the classical branch");
            return {lo, hi};
    }
    throw std::logic_error("region_bounds: unreachable");
}

void RegionSpec::validate(double omega, const PhysParams& p) const {
    auto [lo, hi] = region_bounds(region, omega, p);
    if (!(r_min < r_max))
        throw std::invalid_argument("RegionSpec: r_min must be < r_max");
    if (!(r_min > lo) || !(r_max < hi))
        throw std::invalid_argument("RegionSpec: [r_min, r_max] must lie strictly inside the open region");
    if (steps < 2) throw std::invalid_argument("RegionSpec: steps must be >= 2");
    if (fixed_substeps == 0 && !(tolerance > 0))
        throw std::invalid_argument("RegionSpec: tolerance must be > 0");
}

namespace {

struct State {
    Complex y0, y1;
};

State axpy(const State& a, double h, const State& b) {
    return {a.y0 + h * b.y0, a.y1 + h * b.y1};
}

// Dormand-Prince 5(4) tableau.
constexpr double A21 = 1.0 / 5;
constexpr double A31 = 3.0 / 40, A32 = 9.0 / 40;
constexpr double A41 = 44.0 / 45, A42 = -56.0 / 15, A43 = 32.0 / 9;
constexpr double A51 = 19372.0 / 6561, A52 = -25360.0 / 2187, A53 = 64448.0 / 6561,
                 A54 = -212.0 / 729;
constexpr double A61 = 9017.0 / 3168, A62 = -355.0 / 33, A63 = 46732.0 / 5247,
                 A64 = 49.0 / 176, A65 = -5103.0 / 18656;
constexpr double B1 = 35.0 / 384, B3 = 500.0 / 1113, B4 = 125.0 / 192, B5 = -2187.0 / 6784,
                 B6 = 11.0 / 84;
constexpr double E1 = 71.0 / 57600, E3 = -71.0 / 16695, E4 = 71.0 / 1920,
                 E5 = -17253.0 / 339200, E6 = 22.0 / 525, E7 = -1.0 / 40;

template <typename RHS>
class Dopri5 {
  public:
    Dopri5(RHS rhs, double tol) : rhs_(rhs), tol_(tol) {}

    // One accepted step from (x, y); h_try is adjusted; returns the new x.
    double step(double x, State& y, double& h, double x_end, bool fixed) {
        for (;;) {
            double hh = h;
            bool clamped = false;
            if ((hh > 0 && x + hh >= x_end) || (hh < 0 && x + hh <= x_end)) {
                hh = x_end - x;
                clamped = true;
            }
            State k1 = rhs_(x, y);
            State k2 = rhs_(x + hh * A21, axpy(y, hh * A21, k1));
            State y3 = y;
            y3 = axpy(y3, hh * A31, k1);
            y3 = axpy(y3, hh * A32, k2);
            State k3 = rhs_(x + hh * (3.0 / 10), y3);
            State y4 = y;
            y4 = axpy(y4, hh * A41, k1);
            y4 = axpy(y4, hh * A42, k2);
            y4 = axpy(y4, hh * A43, k3);
            State k4 = rhs_(x + hh * (4.0 / 5), y4);
            State y5 = y;
            y5 = axpy(y5, hh * A51, k1);
            y5 = axpy(y5, hh * A52, k2);
            y5 = axpy(y5, hh * A53, k3);
            y5 = axpy(y5, hh * A54, k4);
            State k5 = rhs_(x + hh * (8.0 / 9), y5);
            State y6 = y;
            y6 = axpy(y6, hh * A61, k1);
            y6 = axpy(y6, hh * A62, k2);
            y6 = axpy(y6, hh * A63, k3);
            y6 = axpy(y6, hh * A64, k4);
            y6 = axpy(y6, hh * A65, k5);
            State k6 = rhs_(x + hh, y6);
            State y7 = y;
            y7 = axpy(y7, hh * B1, k1);
            y7 = axpy(y7, hh * B3, k3);
            y7 = axpy(y7, hh * B4, k4);
            y7 = axpy(y7, hh * B5, k5);
            y7 = axpy(y7, hh * B6, k6);
            State k7 = rhs_(x + hh, y7);

            Complex e0 = hh * (E1 * k1.y0 + E3 * k3.y0 + E4 * k4.y0 + E5 * k5.y0 +
                               E6 * k6.y0 + E7 * k7.y0);
            Complex e1 = hh * (E1 * k1.y1 + E3 * k3.y1 + E4 * k4.y1 + E5 * k5.y1 +
                               E6 * k6.y1 + E7 * k7.y1);
            double sc0 = tol_ * (1.0 + std::max(std::abs(y.y0), std::abs(y7.y0)));
            double sc1 = tol_ * (1.0 + std::max(std::abs(y.y1), std::abs(y7.y1)));
            double err = std::sqrt(0.5 * (std::norm(e0) / (sc0 * sc0) +
                                          std::norm(e1) / (sc1 * sc1)));
            if (!std::isfinite(err)) {
                // numeric blow-up: hand back the state and let the caller's
                // divergence cap deal with it
                y = y7;
                return x_end;
            }
            if (fixed || err <= 1.0) {
                y = y7;
                double xn = clamped ? x_end : x + hh;
                if (!fixed && !clamped) {
                    // a clamped step is not error-driven; keep h as adapted
                    double fac = err > 0 ? 0.9 * std::pow(err, -0.2) : 5.0;
                    fac = std::clamp(fac, 0.2, 5.0);
                    h = hh * fac;
                }
                return xn;
            }
            double fac = std::clamp(0.9 * std::pow(err, -0.2), 0.1, 0.9);
            h = hh * fac;
            if (std::abs(h) < 1e-15 * std::abs(x_end))
                throw std::runtime_error("solve_region: step size underflow");
        }
    }

  private:
    RHS rhs_;
    double tol_;
};

RegionSolution integrate_once(const RegionSpec& spec, double omega, const PhysParams& p,
                              double tol) {
    auto rhs = [&](double r, const State& y) -> State {
        OdeCoeffs co = ode_coeffs(omega, r, p);
        return {y.y1, -(co.a1 * y.y1 + co.a0 * y.y0) / co.a2};
    };

    const bool from_left = spec.bc_location == RegionSpec::Side::left;
    const double start = from_left ? spec.r_min : spec.r_max;
    const double stop = from_left ? spec.r_max : spec.r_min;
    const double span = stop - start;

    std::vector<double> grid(spec.steps + 1);
    for (int i = 0; i <= spec.steps; ++i)
        grid[i] = start + span * (double(i) / spec.steps);
    grid.back() = stop;

    RegionSolution sol;
    State y{spec.bc_value, spec.bc_slope};
    double amp0 = std::max(std::abs(spec.bc_value),
                           std::abs(spec.bc_slope) * std::abs(span));
    if (amp0 == 0.0) amp0 = 1.0;
    const double cap = spec.cap_factor * amp0;

    Dopri5<decltype(rhs)> integ(rhs, tol);
    sol.r.push_back(grid[0]);
    sol.psi.push_back(y.y0);
    sol.dpsi.push_back(y.y1);

    double x = grid[0];
    double h_adapt = (grid[1] - grid[0]) / 4.0;
    for (int i = 1; i <= spec.steps; ++i) {
        const double target = grid[i];
        if (spec.fixed_substeps > 0) {
            double h = (target - x) / spec.fixed_substeps;
            for (int s = 0; s < spec.fixed_substeps; ++s)
                x = integ.step(x, y, h, target, /*fixed=*/true);
        } else {
            while ((span > 0 && x < target) || (span < 0 && x > target))
                x = integ.step(x, y, h_adapt, target, /*fixed=*/false);
        }
        x = target;
        if (!std::isfinite(std::abs(y.y0)) || !std::isfinite(std::abs(y.y1))) {
            // never store non-finite nodes; truncate and flag
            sol.diverged = true;
            break;
        }
        sol.r.push_back(x);
        sol.psi.push_back(y.y0);
        sol.dpsi.push_back(y.y1);
        if (std::abs(y.y0) > cap) {
            sol.diverged = true;
            break;
        }
    }
    return sol;
}

}  // namespace

RegionSolution solve_region(const RegionSpec& spec, double omega, const PhysParams& p) {
    p.validate();
    spec.validate(omega, p);
    RegionSolution sol = integrate_once(spec, omega, p, spec.tolerance);
    if (spec.fixed_substeps > 0) return sol;
    RegionSolution ref = integrate_once(spec, omega, p, spec.tolerance / 2.0);
    double err = 0.0;
    std::size_t n = std::min(sol.psi.size(), ref.psi.size());
    for (std::size_t i = 0; i < n; ++i)
        err = std::max(err, std::abs(sol.psi[i] - ref.psi[i]));
    sol.error_estimate = err;
    return sol;
}

Diagnostics diagnostics(const RegionSolution& sol) {
    Diagnostics d;
    const std::size_t n = sol.r.size();
    if (n < 3) return d;

    double maxabs = 0.0, maxre = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        maxabs = std::max(maxabs, std::abs(sol.psi[i]));
        maxre = std::max(maxre, std::abs(sol.psi[i].real()));
    }
    d.max_amplitude = maxabs;
    if (maxre == 0.0) return d;

    const double tol = 1e-9 * maxre;
    auto re = [&](std::size_t i) { return sol.psi[i].real(); };

    // Ascending in r regardless of integration direction.
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    if (sol.r.front() > sol.r.back()) std::reverse(order.begin(), order.end());

    int last_sign = 0;
    bool starts_at_zero = std::abs(re(order[0])) <= tol;
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t i = order[j];
        double v = re(i);
        int s = std::abs(v) <= tol ? 0 : (v > 0 ? 1 : -1);
        if (s == 0) continue;
        if (last_sign != 0 && s != last_sign) {
            // crossing between the previous signed sample and this one
            std::size_t ip = order[j - 1];
            double v0 = re(ip), v1 = v;
            double rc = (v1 == v0) ? sol.r[i]
                                   : sol.r[ip] + (sol.r[i] - sol.r[ip]) * (-v0) / (v1 - v0);
            d.zero_crossings.push_back(rc);
        }
        last_sign = s;
    }
    for (std::size_t i = 1; i < d.zero_crossings.size(); ++i)
        d.local_wavelengths.push_back(d.zero_crossings[i] - d.zero_crossings[i - 1]);
    d.cycle_count = d.zero_crossings.size() / 2.0 + (starts_at_zero ? 0.5 : 0.0);
    return d;
}

double gap_near(const Diagnostics& d, double r0) {
    if (d.local_wavelengths.empty())
        throw std::domain_error("gap_near: fewer than two crossings");
    double best = d.local_wavelengths[0];
    double bestdist = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < d.zero_crossings.size(); ++i) {
        double mid = 0.5 * (d.zero_crossings[i] + d.zero_crossings[i + 1]);
        double dist = std::abs(mid - r0);
        if (dist < bestdist) {
            bestdist = dist;
            best = d.local_wavelengths[i];
        }
    }
    return best;
}

double min_gap_in(const Diagnostics& d, double lo, double hi) {
    double best = 0.0;
    for (std::size_t i = 0; i + 1 < d.zero_crossings.size(); ++i) {
        double mid = 0.5 * (d.zero_crossings[i] + d.zero_crossings[i + 1]);
        if (mid < lo || mid > hi) continue;
        double g = d.local_wavelengths[i];
        if (best == 0.0 || g < best) best = g;
    }
    return best;
}

}  // namespace bhnum
