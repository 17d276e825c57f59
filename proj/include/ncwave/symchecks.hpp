#pragma once

// Exact identity battery over the symbolic modules: multiplication laws,
// Leibniz, the Delta0 tables and closed forms, the inner element, the gauge
// shift, the classical limit and the Ricci-flatness checks.  Used by the
// `symcheck` CLI subcommand and by the acceptance suite.

#include "ncwave/waveops.hpp"

#include <random>
#include <string>
#include <vector>

namespace symchecks {

struct CheckResult {
    std::string name;
    bool pass = false;
    int cases = 0;
    std::string detail;
};

using Rng = std::mt19937_64;

/// Random canonical monomial-sum element (small degrees, t power <= tmax).
ncalg::AlgebraElement random_element(Rng& rng, int max_terms = 3, int tmax = 3);
/// Random t-free element.
ncalg::AlgebraElement random_spatial(Rng& rng, int max_terms = 2);

CheckResult associativity(Rng& rng, int cases);
CheckResult distributivity(Rng& rng, int cases);
CheckResult lambda_zero_commutative(Rng& rng, int cases);
CheckResult relation_compatibility();
CheckResult tau_derivation(Rng& rng, int cases);
CheckResult right_module(Rng& rng, int cases);
CheckResult leibniz(Rng& rng, int cases);           // + theta' lam-divisibility
CheckResult delta0_table();                          // beta in {1, r^-1, r^-2, r^-3, 1+gam/r}
CheckResult delta0_closed_vs_recursion();            // m in {-3..5}, n <= 6
CheckResult dt_tn_commutator();                      // n <= 6
CheckResult classical_limit(Rng& rng, int cases);
CheckResult inner_element();                         // m in {-2,0,3,4}, degree <= 3
CheckResult gauge_shift_checks();
CheckResult d_relation_compatibility();
CheckResult projector_checks();
CheckResult ricci_flatness();
CheckResult einstein_family();

std::vector<CheckResult> run_all(unsigned seed = 20240915);

}  // namespace symchecks
